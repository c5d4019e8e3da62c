#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skeinrep {

/// Side `s` of triangle `t` runs from corner s to corner s+1, counterclockwise.
struct Side {
  int t = 0;
  int s = 0;
  int id() const { return 3 * t + s; }
  static Side from_id(int id) { return Side{id / 3, id % 3}; }
  auto operator<=>(const Side&) const = default;
};

/// Edge-indexed weights; equivalently normal coordinates of a multicurve.
using Coloring = std::vector<int>;

/// Ideal triangulation of a punctured oriented surface.  Edge k is the k-th
/// glued pair of sides; flips keep every edge label.
class Triangulation {
 public:
  Triangulation(int triangles, const std::vector<std::pair<Side, Side>>& gluing);

  int num_triangles() const { return T_; }
  int num_edges() const { return static_cast<int>(edge_sides_.size()); }
  int num_vertices() const { return V_; }
  /// V - E + T of the closed surface.
  int euler_characteristic() const { return V_ - num_edges() + T_; }
  /// T - E, the Euler characteristic of the punctured surface.
  int punctured_euler_characteristic() const { return T_ - num_edges(); }

  int partner(int side_id) const { return partner_[static_cast<size_t>(side_id)]; }
  int edge_of(int side_id) const { return edge_[static_cast<size_t>(side_id)]; }
  const std::array<int, 2>& sides_of_edge(int e) const { return edge_sides_[static_cast<size_t>(e)]; }
  /// Edge labels at slots 0, 1, 2 of triangle t.
  std::array<int, 3> triangle_edges(int t) const;
  bool is_flippable(int e) const;
  std::vector<std::pair<Side, Side>> gluing() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.T_ == b.T_ && a.edge_sides_ == b.edge_sides_;
  }

 private:
  Triangulation() = default;
  void build();
  friend Triangulation flip(const Triangulation&, int);

  int T_ = 0;
  int V_ = 0;
  std::vector<std::array<int, 2>> edge_sides_;
  std::vector<int> partner_, edge_;
};

/// Quadrilateral around an edge.  With the flipped edge colored c and the new
/// diagonal f, the faces of the associated tetrahedron are (a,b,c), (c,d,e),
/// (a,e,f), (b,d,f); a/d and b/e are opposite sides of the quadrilateral.
struct Quad {
  int a, b, c, d, e;
};

Quad quad_of(const Triangulation& tri, int e);
Triangulation flip(const Triangulation& tri, int e);

/// Orientation-preserving combinatorial isomorphism: side (t,s) goes to
/// (tri_map[t], s + rot[t] mod 3).
struct Isomorphism {
  std::vector<int> tri_map;
  std::vector<int> rot;

  Side apply(Side x) const { return Side{tri_map[static_cast<size_t>(x.t)], (x.s + rot[static_cast<size_t>(x.t)]) % 3}; }
  /// Edge map induced between the two triangulations.
  std::vector<int> edge_map(const Triangulation& from, const Triangulation& to) const;
  Isomorphism inverse() const;
  Isomorphism then(const Isomorphism& next) const;
  bool operator==(const Isomorphism&) const = default;
};

Isomorphism identity_isomorphism(int triangles);
bool is_isomorphism(const Triangulation& from, const Triangulation& to, const Isomorphism& iso);
std::vector<Isomorphism> find_isomorphisms(const Triangulation& from, const Triangulation& to);
/// Minimal BFS encoding over all starting sides.
std::vector<int> canonical_code(const Triangulation& tri);

bool is_admissible(const Triangulation& tri, const Coloring& c);
bool is_r_admissible(const Triangulation& tri, const Coloring& c, int r);
/// Largest triangle sum of a coloring (twice the largest number of arcs).
int max_triangle_sum(const Triangulation& tri, const Coloring& c);
/// f = max(a+d, b+e) - c_old
int transport_coloring(int a, int b, int d, int e, int c_old);
Coloring flip_coloring(const Triangulation& tri, const Coloring& c, int e);
/// Lexicographically ordered r-admissible colorings.
std::vector<Coloring> enumerate_r_admissible(const Triangulation& tri, int r);
/// Lexicographically ordered admissible colorings with all weights <= w.
std::vector<Coloring> enumerate_admissible(const Triangulation& tri, int max_weight);

struct FlipPath {
  std::vector<int> flips;
  Isomorphism iso;  ///< from the end of the path onto dst
};

/// Breadth-first search through the flip graph modulo isomorphism.
FlipPath find_flip_path(const Triangulation& src, const Triangulation& dst, int max_nodes = 200000);

/// Flip path from `base` followed by an isomorphism of its end back onto `base`.
struct MappingClass {
  Triangulation base;
  std::vector<int> flips;
  Isomorphism relabel;

  Triangulation final_triangulation() const;
  /// Edge of the final triangulation -> edge of base.
  std::vector<int> edge_map() const;
  void validate() const;
};

MappingClass identity_class(const Triangulation& base);
/// g o h: apply h first.
MappingClass compose(const MappingClass& g, const MappingClass& h);
MappingClass inverse(const MappingClass& g);
Coloring act_on_multicurve(const MappingClass& g, const Coloring& c);

/// Two triangles glued along three edges.
Triangulation punctured_torus();
/// Boundary of a tetrahedron; edge k joins the vertex pair 01,02,03,12,13,23.
Triangulation four_punctured_sphere();
/// Dehn twist about the curve with weight 0 on `edge` and 1 elsewhere.
MappingClass torus_twist(int edge);
/// Rotation by pi exchanging the two triangles; acts trivially on curves.
MappingClass torus_elliptic_involution();
/// Half twist fixing the curve `curve` (one of the three 4-weight curves),
/// found by a bounded search over short flip loops.
MappingClass sphere_half_twist(const Coloring& curve);
MappingClass sphere_twist(const Coloring& curve);
/// Curves of the four-punctured sphere separating {0,1}|{2,3}, {0,2}|{1,3}, {0,3}|{1,2}.
std::array<Coloring, 3> sphere_curves();

nlohmann::json to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MappingClass& g);
MappingClass mapping_class_from_json(const nlohmann::json& j);

}  // namespace skeinrep
