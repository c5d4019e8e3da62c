#include "skeinrep/surface.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "skeinrep/errors.hpp"

namespace skeinrep {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Triangulation::Triangulation(int triangles, const std::vector<std::pair<Side, Side>>& gluing) {
  if (triangles < 1) throw DomainError("a triangulation needs at least one triangle");
  if ((3 * triangles) % 2 != 0 || static_cast<int>(gluing.size()) * 2 != 3 * triangles)
    throw DomainError("gluing must pair all 3T sides");
  T_ = triangles;
  std::vector<bool> seen(static_cast<size_t>(3 * T_), false);
  for (const auto& [x, y] : gluing) {
    for (const Side& s : {x, y}) {
      if (s.t < 0 || s.t >= T_ || s.s < 0 || s.s > 2) throw DomainError("side out of range");
      if (seen[static_cast<size_t>(s.id())]) throw DomainError("side glued twice");
      seen[static_cast<size_t>(s.id())] = true;
    }
    edge_sides_.push_back({x.id(), y.id()});
  }
  build();
}

void Triangulation::build() {
  const int n = 3 * T_;
  partner_.assign(static_cast<size_t>(n), -1);
  edge_.assign(static_cast<size_t>(n), -1);
  UnionFind tris(T_), corners(n);
  for (size_t k = 0; k < edge_sides_.size(); ++k) {
    auto [x, y] = edge_sides_[k];
    partner_[static_cast<size_t>(x)] = y;
    partner_[static_cast<size_t>(y)] = x;
    edge_[static_cast<size_t>(x)] = edge_[static_cast<size_t>(y)] = static_cast<int>(k);
    tris.unite(x / 3, y / 3);
    const int tx = x / 3, sx = x % 3, ty = y / 3, sy = y % 3;
    corners.unite(3 * tx + sx, 3 * ty + (sy + 1) % 3);
    corners.unite(3 * tx + (sx + 1) % 3, 3 * ty + sy);
  }
  for (int t = 0; t < T_; ++t)
    if (tris.find(t) != tris.find(0)) throw DomainError("triangulated surface is not connected");
  std::set<int> roots;
  for (int c = 0; c < n; ++c) roots.insert(corners.find(c));
  V_ = static_cast<int>(roots.size());
}

std::array<int, 3> Triangulation::triangle_edges(int t) const {
  return {edge_[static_cast<size_t>(3 * t)], edge_[static_cast<size_t>(3 * t + 1)],
          edge_[static_cast<size_t>(3 * t + 2)]};
}

bool Triangulation::is_flippable(int e) const {
  if (e < 0 || e >= num_edges()) return false;
  const auto& s = edge_sides_[static_cast<size_t>(e)];
  return s[0] / 3 != s[1] / 3;
}

std::vector<std::pair<Side, Side>> Triangulation::gluing() const {
  std::vector<std::pair<Side, Side>> out;
  for (const auto& s : edge_sides_) out.emplace_back(Side::from_id(s[0]), Side::from_id(s[1]));
  return out;
}

namespace {

struct QuadSides {
  int t1, t2, a1, a2, b, g;
};

QuadSides quad_sides(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.num_edges()) throw DomainError("edge index out of range");
  if (!tri.is_flippable(e))
    throw NotFlippableError("edge " + std::to_string(e) + " is self-folded and cannot be flipped");
  auto [x0, x1] = tri.sides_of_edge(e);
  const int t1 = x0 / 3, s1 = x0 % 3, t2 = x1 / 3, s2 = x1 % 3;
  return QuadSides{t1, t2, 3 * t1 + (s1 + 1) % 3, 3 * t1 + (s1 + 2) % 3, 3 * t2 + (s2 + 1) % 3,
                   3 * t2 + (s2 + 2) % 3};
}

}  // namespace

Quad quad_of(const Triangulation& tri, int e) {
  QuadSides q = quad_sides(tri, e);
  return Quad{tri.edge_of(q.b), tri.edge_of(q.g), e, tri.edge_of(q.a1), tri.edge_of(q.a2)};
}

Triangulation flip(const Triangulation& tri, int e) {
  QuadSides q = quad_sides(tri, e);
  std::map<int, int> moved{{q.a2, 3 * q.t1 + 0}, {q.b, 3 * q.t1 + 1}, {q.g, 3 * q.t2 + 0}, {q.a1, 3 * q.t2 + 1}};
  auto remap = [&](int x) {
    auto it = moved.find(x);
    return it == moved.end() ? x : it->second;
  };
  Triangulation out;
  out.T_ = tri.T_;
  out.edge_sides_ = tri.edge_sides_;
  for (size_t k = 0; k < out.edge_sides_.size(); ++k) {
    if (static_cast<int>(k) == e) {
      out.edge_sides_[k] = {3 * q.t1 + 2, 3 * q.t2 + 2};
    } else {
      out.edge_sides_[k] = {remap(tri.edge_sides_[k][0]), remap(tri.edge_sides_[k][1])};
    }
  }
  out.build();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> Isomorphism::edge_map(const Triangulation& from, const Triangulation& to) const {
  std::vector<int> m(static_cast<size_t>(from.num_edges()));
  for (int k = 0; k < from.num_edges(); ++k)
    m[static_cast<size_t>(k)] = to.edge_of(apply(Side::from_id(from.sides_of_edge(k)[0])).id());
  return m;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism inv{std::vector<int>(tri_map.size()), std::vector<int>(rot.size())};
  for (size_t t = 0; t < tri_map.size(); ++t) {
    inv.tri_map[static_cast<size_t>(tri_map[t])] = static_cast<int>(t);
    inv.rot[static_cast<size_t>(tri_map[t])] = (3 - rot[t]) % 3;
  }
  return inv;
}

Isomorphism Isomorphism::then(const Isomorphism& next) const {
  Isomorphism out{std::vector<int>(tri_map.size()), std::vector<int>(rot.size())};
  for (size_t t = 0; t < tri_map.size(); ++t) {
    const auto u = static_cast<size_t>(tri_map[t]);
    out.tri_map[t] = next.tri_map[u];
    out.rot[t] = (rot[t] + next.rot[u]) % 3;
  }
  return out;
}

Isomorphism identity_isomorphism(int triangles) {
  Isomorphism iso{std::vector<int>(static_cast<size_t>(triangles)), std::vector<int>(static_cast<size_t>(triangles), 0)};
  std::iota(iso.tri_map.begin(), iso.tri_map.end(), 0);
  return iso;
}

bool is_isomorphism(const Triangulation& from, const Triangulation& to, const Isomorphism& iso) {
  const int T = from.num_triangles();
  if (to.num_triangles() != T) return false;
  if (static_cast<int>(iso.tri_map.size()) != T || static_cast<int>(iso.rot.size()) != T) return false;
  std::vector<bool> hit(static_cast<size_t>(T), false);
  for (int t = 0; t < T; ++t) {
    const int u = iso.tri_map[static_cast<size_t>(t)], r = iso.rot[static_cast<size_t>(t)];
    if (u < 0 || u >= T || r < 0 || r > 2 || hit[static_cast<size_t>(u)]) return false;
    hit[static_cast<size_t>(u)] = true;
  }
  for (int x = 0; x < 3 * T; ++x) {
    const int y = iso.apply(Side::from_id(x)).id();
    if (iso.apply(Side::from_id(from.partner(x))).id() != to.partner(y)) return false;
  }
  return true;
}

std::vector<Isomorphism> find_isomorphisms(const Triangulation& from, const Triangulation& to) {
  std::vector<Isomorphism> out;
  const int T = from.num_triangles();
  if (to.num_triangles() != T || to.num_edges() != from.num_edges()) return out;
  for (int y0 = 0; y0 < 3 * T; ++y0) {
    Isomorphism iso{std::vector<int>(static_cast<size_t>(T), -1), std::vector<int>(static_cast<size_t>(T), 0)};
    std::vector<bool> used(static_cast<size_t>(T), false);
    iso.tri_map[0] = y0 / 3;
    iso.rot[0] = y0 % 3;
    used[static_cast<size_t>(y0 / 3)] = true;
    std::deque<int> queue{0};
    bool ok = true;
    while (ok && !queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      for (int s = 0; s < 3 && ok; ++s) {
        const Side px = Side::from_id(from.partner(3 * t + s));
        const Side py = Side::from_id(to.partner(iso.apply(Side{t, s}).id()));
        const auto u = static_cast<size_t>(px.t);
        if (iso.tri_map[u] < 0) {
          if (used[static_cast<size_t>(py.t)]) {
            ok = false;
            break;
          }
          iso.tri_map[u] = py.t;
          iso.rot[u] = ((py.s - px.s) % 3 + 3) % 3;
          used[static_cast<size_t>(py.t)] = true;
          queue.push_back(px.t);
        } else if (iso.apply(px) != py) {
          ok = false;
        }
      }
    }
    if (ok && is_isomorphism(from, to, iso)) out.push_back(std::move(iso));
  }
  return out;
}

std::vector<int> canonical_code(const Triangulation& tri) {
  const int T = tri.num_triangles();
  std::vector<int> best;
  for (int x0 = 0; x0 < 3 * T; ++x0) {
    std::vector<int> label(static_cast<size_t>(T), -1), offset(static_cast<size_t>(T), 0), order;
    label[static_cast<size_t>(x0 / 3)] = 0;
    offset[static_cast<size_t>(x0 / 3)] = x0 % 3;
    order.push_back(x0 / 3);
    std::vector<int> code;
    code.reserve(static_cast<size_t>(3 * T));
    for (size_t k = 0; k < order.size(); ++k) {
      const int t = order[k];
      for (int j = 0; j < 3; ++j) {
        const Side p = Side::from_id(tri.partner(3 * t + (j + offset[static_cast<size_t>(t)]) % 3));
        if (label[static_cast<size_t>(p.t)] < 0) {
          label[static_cast<size_t>(p.t)] = static_cast<int>(order.size());
          offset[static_cast<size_t>(p.t)] = p.s;
          order.push_back(p.t);
        }
        code.push_back(3 * label[static_cast<size_t>(p.t)] + ((p.s - offset[static_cast<size_t>(p.t)]) % 3 + 3) % 3);
      }
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// ---------------------------------------------------------------------------

bool is_admissible(const Triangulation& tri, const Coloring& c) {
  if (static_cast<int>(c.size()) != tri.num_edges()) return false;
  for (int w : c)
    if (w < 0) return false;
  for (int t = 0; t < tri.num_triangles(); ++t) {
    auto e = tri.triangle_edges(t);
    const int x = c[static_cast<size_t>(e[0])], y = c[static_cast<size_t>(e[1])], z = c[static_cast<size_t>(e[2])];
    if ((x + y + z) % 2 || x > y + z || y > x + z || z > x + y) return false;
  }
  return true;
}

int max_triangle_sum(const Triangulation& tri, const Coloring& c) {
  int m = 0;
  for (int t = 0; t < tri.num_triangles(); ++t) {
    auto e = tri.triangle_edges(t);
    m = std::max(m, c[static_cast<size_t>(e[0])] + c[static_cast<size_t>(e[1])] + c[static_cast<size_t>(e[2])]);
  }
  return m;
}

bool is_r_admissible(const Triangulation& tri, const Coloring& c, int r) {
  return is_admissible(tri, c) && max_triangle_sum(tri, c) <= 2 * (r - 2);
}

int transport_coloring(int a, int b, int d, int e, int c_old) { return std::max(a + d, b + e) - c_old; }

Coloring flip_coloring(const Triangulation& tri, const Coloring& c, int e) {
  Quad q = quad_of(tri, e);
  Coloring out = c;
  auto w = [&](int k) { return c[static_cast<size_t>(k)]; };
  out[static_cast<size_t>(e)] = transport_coloring(w(q.a), w(q.b), w(q.d), w(q.e), w(q.c));
  return out;
}

namespace {

template <class Accept>
std::vector<Coloring> enumerate(const Triangulation& tri, int max_weight, int max_sum, Accept&& accept) {
  const int E = tri.num_edges();
  std::vector<Coloring> out;
  if (max_weight < 0) return out;
  // Triangles become checkable once their largest edge label is assigned.
  std::vector<std::vector<std::array<int, 3>>> closing(static_cast<size_t>(E));
  for (int t = 0; t < tri.num_triangles(); ++t) {
    auto e = tri.triangle_edges(t);
    closing[static_cast<size_t>(*std::max_element(e.begin(), e.end()))].push_back(e);
  }
  Coloring c(static_cast<size_t>(E), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == E) {
      if (accept(c)) out.push_back(c);
      return;
    }
    for (int w = 0; w <= max_weight; ++w) {
      c[static_cast<size_t>(k)] = w;
      bool ok = true;
      for (const auto& e : closing[static_cast<size_t>(k)]) {
        const int x = c[static_cast<size_t>(e[0])], y = c[static_cast<size_t>(e[1])], z = c[static_cast<size_t>(e[2])];
        if ((x + y + z) % 2 || x > y + z || y > x + z || z > x + y || x + y + z > max_sum) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
    }
    c[static_cast<size_t>(k)] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<Coloring> enumerate_r_admissible(const Triangulation& tri, int r) {
  if (r < 2) throw DomainError("level must be at least 2");
  return enumerate(tri, r - 2, 2 * (r - 2), [](const Coloring&) { return true; });
}

std::vector<Coloring> enumerate_admissible(const Triangulation& tri, int max_weight) {
  return enumerate(tri, max_weight, 3 * max_weight, [](const Coloring&) { return true; });
}

// ---------------------------------------------------------------------------

FlipPath find_flip_path(const Triangulation& src, const Triangulation& dst, int max_nodes) {
  if (src.num_triangles() != dst.num_triangles() || src.num_vertices() != dst.num_vertices() ||
      src.euler_characteristic() != dst.euler_characteristic())
    throw DomainError("triangulations are of different surfaces");
  const auto target = canonical_code(dst);
  struct Node {
    Triangulation tri;
    int parent;
    int edge;
    int depth;
  };
  auto finish = [&](const std::vector<Node>& nodes, int k) {
    FlipPath path;
    for (int i = k; nodes[static_cast<size_t>(i)].parent >= 0; i = nodes[static_cast<size_t>(i)].parent)
      path.flips.push_back(nodes[static_cast<size_t>(i)].edge);
    std::reverse(path.flips.begin(), path.flips.end());
    path.iso = find_isomorphisms(nodes[static_cast<size_t>(k)].tri, dst).front();
    return path;
  };
  std::vector<Node> nodes{{src, -1, -1, 0}};
  std::set<std::vector<int>> seen{canonical_code(src)};
  if (*seen.begin() == target) return finish(nodes, 0);
  for (size_t head = 0; head < nodes.size(); ++head) {
    for (int e = 0; e < src.num_edges(); ++e) {
      if (!nodes[head].tri.is_flippable(e)) continue;
      Triangulation next = flip(nodes[head].tri, e);
      auto code = canonical_code(next);
      if (!seen.insert(code).second) continue;
      if (static_cast<int>(nodes.size()) >= max_nodes)
        throw SearchBudgetError("flip-path search exceeded its node budget", nodes[head].depth);
      nodes.push_back({std::move(next), static_cast<int>(head), e, nodes[head].depth + 1});
      if (code == target) return finish(nodes, static_cast<int>(nodes.size()) - 1);
    }
  }
  throw SearchBudgetError("flip graph exhausted without reaching the target", nodes.back().depth);
}

// ---------------------------------------------------------------------------

Triangulation MappingClass::final_triangulation() const {
  Triangulation x = base;
  for (int e : flips) x = flip(x, e);
  return x;
}

std::vector<int> MappingClass::edge_map() const { return relabel.edge_map(final_triangulation(), base); }

void MappingClass::validate() const {
  Triangulation x = final_triangulation();
  if (!is_isomorphism(x, base, relabel))
    throw DomainError("relabel is not an isomorphism from the final triangulation onto the base");
}

MappingClass identity_class(const Triangulation& base) {
  return MappingClass{base, {}, identity_isomorphism(base.num_triangles())};
}

namespace {

Isomorphism isomorphism_with_edge_map(const Triangulation& from, const Triangulation& to,
                                      const std::vector<int>& m) {
  for (auto& iso : find_isomorphisms(from, to))
    if (iso.edge_map(from, to) == m) return iso;
  throw Error("no isomorphism realizes the requested edge map");
}

std::vector<int> invert(const std::vector<int>& m) {
  std::vector<int> inv(m.size());
  for (size_t i = 0; i < m.size(); ++i) inv[static_cast<size_t>(m[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace

MappingClass compose(const MappingClass& g, const MappingClass& h) {
  if (!(g.base == h.base)) throw DomainError("mapping classes have different base triangulations");
  const auto mh = h.edge_map(), mg = g.edge_map();
  const auto mh_inv = invert(mh);
  MappingClass out{h.base, h.flips, {}};
  for (int e : g.flips) out.flips.push_back(mh_inv[static_cast<size_t>(e)]);
  std::vector<int> want(mh.size());
  for (size_t j = 0; j < mh.size(); ++j) want[j] = mg[static_cast<size_t>(mh[j])];
  out.relabel = isomorphism_with_edge_map(out.final_triangulation(), out.base, want);
  return out;
}

MappingClass inverse(const MappingClass& g) {
  const auto m = g.edge_map();
  MappingClass out{g.base, {}, {}};
  for (auto it = g.flips.rbegin(); it != g.flips.rend(); ++it) out.flips.push_back(m[static_cast<size_t>(*it)]);
  out.relabel = isomorphism_with_edge_map(out.final_triangulation(), out.base, invert(m));
  return out;
}

Coloring act_on_multicurve(const MappingClass& g, const Coloring& c) {
  if (!is_admissible(g.base, c)) throw AdmissibilityError("coloring is not admissible on the base triangulation");
  Triangulation x = g.base;
  Coloring w = c;
  for (int e : g.flips) {
    w = flip_coloring(x, w, e);
    x = flip(x, e);
  }
  const auto m = g.relabel.edge_map(x, g.base);
  Coloring out(w.size());
  for (size_t j = 0; j < w.size(); ++j) out[static_cast<size_t>(m[j])] = w[j];
  return out;
}

// ---------------------------------------------------------------------------

Triangulation punctured_torus() {
  return Triangulation(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
}

Triangulation four_punctured_sphere() {
  // Faces listed counterclockwise as seen from outside.
  const std::array<std::array<int, 3>, 4> faces{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
  const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::vector<std::pair<Side, Side>> gluing;
  for (auto [u, v] : pairs) {
    Side fwd{}, back{};
    for (int t = 0; t < 4; ++t)
      for (int s = 0; s < 3; ++s) {
        const int from = faces[static_cast<size_t>(t)][static_cast<size_t>(s)];
        const int to = faces[static_cast<size_t>(t)][static_cast<size_t>((s + 1) % 3)];
        if (from == u && to == v) fwd = Side{t, s};
        if (from == v && to == u) back = Side{t, s};
      }
    gluing.emplace_back(fwd, back);
  }
  return Triangulation(4, gluing);
}

MappingClass torus_twist(int edge) {
  if (edge < 0 || edge > 2) throw DomainError("torus edge index must be 0, 1 or 2");
  const int j = (edge + 1) % 3, k = (edge + 2) % 3;
  MappingClass g{punctured_torus(), {j}, {}};
  std::vector<int> want(3);
  want[static_cast<size_t>(edge)] = edge;
  want[static_cast<size_t>(j)] = k;
  want[static_cast<size_t>(k)] = j;
  g.relabel = isomorphism_with_edge_map(g.final_triangulation(), g.base, want);
  return g;
}

MappingClass torus_elliptic_involution() {
  const Triangulation x = punctured_torus();
  for (auto& iso : find_isomorphisms(x, x))
    if (iso.edge_map(x, x) == std::vector<int>{0, 1, 2} && !(iso == identity_isomorphism(2)))
      return MappingClass{x, {}, iso};
  throw Error("punctured torus has no elliptic involution in this encoding");
}

std::array<Coloring, 3> sphere_curves() {
  return {Coloring{0, 1, 1, 1, 1, 0}, Coloring{1, 0, 1, 1, 0, 1}, Coloring{1, 1, 0, 0, 1, 1}};
}

MappingClass sphere_half_twist(const Coloring& curve) {
  const Triangulation x = four_punctured_sphere();
  const auto curves = sphere_curves();
  const auto it = std::find(curves.begin(), curves.end(), curve);
  if (it == curves.end()) throw DomainError("half twists are provided for the three coordinate curves");
  const Coloring& other = curves[static_cast<size_t>((it - curves.begin() + 1) % 3)];
  const auto base_code = canonical_code(x);

  std::optional<MappingClass> best;
  std::tuple<int, size_t, std::vector<int>, std::vector<int>> best_key;
  std::vector<int> path;
  std::function<void(const Triangulation&, int)> rec = [&](const Triangulation& y, int depth) {
    if (!path.empty() && canonical_code(y) == base_code) {
      for (auto& iso : find_isomorphisms(y, x)) {
        MappingClass g{x, path, iso};
        if (act_on_multicurve(g, curve) != curve) continue;
        Coloring image = act_on_multicurve(g, other);
        if (image == other) continue;
        auto key = std::make_tuple(std::accumulate(image.begin(), image.end(), 0), path.size(), path,
                                   iso.edge_map(y, x));
        if (!best || key < best_key) {
          best = g;
          best_key = key;
        }
      }
    }
    if (depth == 0) return;
    for (int e = 0; e < x.num_edges(); ++e) {
      if (!path.empty() && path.back() == e) continue;
      if (!y.is_flippable(e)) continue;
      path.push_back(e);
      rec(flip(y, e), depth - 1);
      path.pop_back();
    }
  };
  rec(x, 4);
  if (!best) throw NotFoundError("no half twist found within the search depth");
  return *best;
}

MappingClass sphere_twist(const Coloring& curve) {
  MappingClass h = sphere_half_twist(curve);
  return compose(h, h);
}

// ---------------------------------------------------------------------------

namespace {

Side side_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("side must be a pair [t, s] of integers");
  return Side{j[0].get<int>(), j[1].get<int>()};
}

nlohmann::json side_to_json(Side s) { return nlohmann::json::array({s.t, s.s}); }

}  // namespace

nlohmann::json to_json(const Triangulation& tri) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& [x, y] : tri.gluing()) g.push_back(nlohmann::json::array({side_to_json(x), side_to_json(y)}));
  nlohmann::json j;
  j["triangles"] = tri.num_triangles();
  j["gluing"] = std::move(g);
  return j;
}

Triangulation triangulation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("triangles") || !j.contains("gluing"))
    throw ParseError("triangulation needs 'triangles' and 'gluing'");
  if (!j["triangles"].is_number_integer() || !j["gluing"].is_array())
    throw ParseError("malformed triangulation fields");
  std::vector<std::pair<Side, Side>> gluing;
  for (const auto& p : j["gluing"]) {
    if (!p.is_array() || p.size() != 2) throw ParseError("gluing entries must be pairs of sides");
    gluing.emplace_back(side_from_json(p[0]), side_from_json(p[1]));
  }
  try {
    return Triangulation(j["triangles"].get<int>(), gluing);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid triangulation: ") + e.what());
  }
}

nlohmann::json to_json(const MappingClass& g) {
  nlohmann::json table = nlohmann::json::array();
  for (int x = 0; x < 3 * g.base.num_triangles(); ++x) {
    Side s = Side::from_id(x);
    table.push_back(nlohmann::json::array({side_to_json(s), side_to_json(g.relabel.apply(s))}));
  }
  nlohmann::json j;
  j["base"] = to_json(g.base);
  j["flips"] = g.flips;
  j["relabel"] = std::move(table);
  return j;
}

MappingClass mapping_class_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("flips") || !j.contains("relabel"))
    throw ParseError("mapping class needs 'base', 'flips' and 'relabel'");
  MappingClass g{triangulation_from_json(j["base"]), {}, {}};
  if (!j["flips"].is_array()) throw ParseError("'flips' must be an array");
  for (const auto& e : j["flips"]) {
    if (!e.is_number_integer()) throw ParseError("flip entries must be edge indices");
    g.flips.push_back(e.get<int>());
  }
  const int T = g.base.num_triangles();
  g.relabel = Isomorphism{std::vector<int>(static_cast<size_t>(T), -1), std::vector<int>(static_cast<size_t>(T), 0)};
  std::vector<int> filled(static_cast<size_t>(3 * T), 0);
  if (!j["relabel"].is_array()) throw ParseError("'relabel' must be an array");
  for (const auto& row : j["relabel"]) {
    if (!row.is_array() || row.size() != 2) throw ParseError("relabel rows must be [from, to] pairs");
    Side from = side_from_json(row[0]), to = side_from_json(row[1]);
    if (from.t < 0 || from.t >= T || from.s < 0 || from.s > 2 || to.t < 0 || to.t >= T || to.s < 0 || to.s > 2)
      throw ParseError("relabel side out of range");
    const int rot = ((to.s - from.s) % 3 + 3) % 3;
    auto& m = g.relabel.tri_map[static_cast<size_t>(from.t)];
    auto& r = g.relabel.rot[static_cast<size_t>(from.t)];
    if (m >= 0 && (m != to.t || r != rot)) throw ParseError("relabel is not a rotation on each triangle");
    m = to.t;
    r = rot;
    ++filled[static_cast<size_t>(from.id())];
  }
  for (int f : filled)
    if (f != 1) throw ParseError("relabel must list every side exactly once");
  try {
    g.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("invalid mapping class: ") + e.what());
  }
  return g;
}

}  // namespace skeinrep
