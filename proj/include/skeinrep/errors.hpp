#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace skeinrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point lies in the finite pole set of a symbol.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::set<int> bad)
      : Error(what), bad_(std::move(bad)) {}
  const std::set<int>& bad_set() const { return bad_; }

 private:
  std::set<int> bad_;
};

/// Matrix coefficient requested at a root of unity inside the excluded set.
class BadRootError : public PoleError {
 public:
  using PoleError::PoleError;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class BranchError : public Error {
 public:
  using Error::Error;
};

class NotFlippableError : public Error {
 public:
  using Error::Error;
};

class SearchBudgetError : public Error {
 public:
  SearchBudgetError(const std::string& what, int radius)
      : Error(what), radius_(radius) {}
  int radius() const { return radius_; }

 private:
  int radius_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace skeinrep
