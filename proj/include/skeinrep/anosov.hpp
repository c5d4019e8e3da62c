#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "skeinrep/precision.hpp"

namespace skeinrep {

struct IncidenceMatrix {
  std::vector<std::vector<long>> data;

  int n() const { return static_cast<int>(data.size()); }
  long entry_sum() const;
  void validate() const;
};

/// Smallest k with M^k entrywise positive, searched up to (n-1)^2 + 1.
std::optional<int> primitivity_exponent(const IncidenceMatrix& M);
bool is_perron_frobenius(const IncidenceMatrix& M);

struct Dilatation {
  Real lambda;
  Real lo;  ///< Collatz-Wielandt lower bound
  Real hi;  ///< Collatz-Wielandt upper bound
};

Dilatation dilatation(const IncidenceMatrix& M, double tol = 1e-30, int digits = 60);
/// lambda^n >= |M| - n + 1 checked on the enclosure.
bool ham_song_check(const IncidenceMatrix& M);
bool ham_song_check(const IncidenceMatrix& M, const Dilatation& d);

/// Smallest r with r > -6 chi (lam^{-9 chi} - 9 chi - 1) + 1, exact in lam.
mpz_class level_bound(int chi, const mpq_class& lam);
mpz_class level_bound(int chi, double lam);
/// Smallest r with r > (lam^{-3 chi} - 3 chi + 1) / 2.  Accepts lam = 1.
mpz_class punctured_level_bound(int chi_punctured, const mpq_class& lam);
mpz_class punctured_level_bound(int chi_punctured, double lam);

/// Combinatorial train track.  Branch b has half-branches 2b (start) and
/// 2b+1 (end); every half-branch lies on exactly one side of one switch.
struct TrainTrack {
  struct Switch {
    std::vector<int> large;
    std::vector<int> small;
  };
  int branches = 0;
  std::vector<Switch> switches;

  void validate() const;
  /// Switch conditions: sum of weights on the large side equals the small side.
  bool satisfies_switch_conditions(const std::vector<int>& weights) const;
};

/// Weights of a closed legal path found by walking until a state repeats.
std::vector<int> carried_curve(const TrainTrack& track);

TrainTrack single_loop_track();
/// Two trivalent switches joined by three branches.
TrainTrack torus_track();
/// Two loops through one four-valent switch.
TrainTrack torus_two_loop_track();

}  // namespace skeinrep
