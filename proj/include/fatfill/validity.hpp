#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fatfill/fat_graph.hpp"

namespace fatfill {

struct EmptySubset : MapError {
  EmptySubset() : MapError("subsurface of an empty face subset") {}
};

struct NotSimpleCurve : MapError {
  NotSimpleCurve() : MapError("curve is not simple") {}
};

/// Raised when a bigon or monogon makes the minimal-position homotopy
/// criterion inapplicable; we refuse to answer rather than guess.
struct MinimalPositionUnknown : MapError {
  MinimalPositionUnknown() : MapError("bigon present: minimal position not certified") {}
};

/// Lengths of the sigma_infinity cycles; the complementary discs of the
/// thickened surface.
struct FaceProfile {
  std::vector<int> face_lengths;  // sorted descending
};

inline std::vector<std::vector<Dart>> faces(const FatGraph& g) { return boundary_cycles(g); }

inline FaceProfile face_profile(const FatGraph& g) {
  FaceProfile p;
  for (const auto& f : faces(g)) p.face_lengths.push_back(static_cast<int>(f.size()));
  std::sort(p.face_lengths.begin(), p.face_lengths.end(), std::greater<>());
  return p;
}

/// Vertices where some standard cycle passes through two strands at once.
/// Empty result means every curve is simple and curves cross transversally.
inline std::vector<int> self_crossing_vertices(const FatGraph& g,
                                               const StandardCycleDecomposition& sc) {
  std::vector<int> bad;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.vertex_cycles()[v];
    int half = static_cast<int>(rot.size()) / 2;
    std::set<int> curves;
    for (int i = 0; i < half; ++i) curves.insert(sc.curve_of[rot[i]]);
    if (static_cast<int>(curves.size()) != half) bad.push_back(v);
  }
  return bad;
}

inline bool has_simple_curves(const FatGraph& g, const StandardCycleDecomposition& sc) {
  return self_crossing_vertices(g, sc).empty();
}

inline bool has_simple_curves(const FatGraph& g) {
  return has_simple_curves(g, standard_cycles(g));
}

/// Result of gluing a subset of closed faces along their shared edges.
struct Subsurface {
  int vertices = 0;
  int edges = 0;
  int face_count = 0;
  int euler = 0;
  int boundary = 0;
  bool connected = false;
  std::optional<int> genus;  // only when connected
  std::vector<std::vector<Dart>> boundary_walks;  // free sides in walk order
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// The compact surface formed by the chosen closed faces glued along shared
/// edges. Corners of the face polygons are tracked per dart; a graph vertex
/// may split into several subsurface vertices when the gluing does not pass
/// all the way around it.
inline Subsurface subsurface(const FatGraph& g, const std::vector<int>& face_subset) {
  if (face_subset.empty()) throw EmptySubset();
  auto all = faces(g);
  int n = g.dart_count();
  std::vector<int> face_of(n, -1);
  for (size_t i = 0; i < all.size(); ++i)
    for (Dart d : all[i]) face_of[d] = static_cast<int>(i);

  std::vector<char> chosen(all.size(), 0);
  for (int f : face_subset) {
    if (f < 0 || f >= static_cast<int>(all.size()) || chosen[f])
      throw MapError("bad face subset");
    chosen[f] = 1;
  }
  auto in_sub = [&](Dart d) { return chosen[face_of[d]] != 0; };
  auto interior = [&](Dart d) { return in_sub(d) && in_sub(g.sigma1(d)); };

  Subsurface out;
  out.face_count = static_cast<int>(face_subset.size());

  // Corner after side d is identified across a glued edge with the corner
  // before side sigma1(d).
  detail::UnionFind corners(n);
  detail::UnionFind face_comp(static_cast<int>(all.size()));
  int interior_darts = 0, free_darts = 0;
  for (Dart d = 0; d < n; ++d) {
    if (!in_sub(d)) continue;
    if (interior(d)) {
      ++interior_darts;
      corners.unite(d, g.sigma_inf_inv(g.sigma1(d)));
      face_comp.unite(face_of[d], face_of[g.sigma1(d)]);
    } else {
      ++free_darts;
    }
  }
  out.edges = interior_darts / 2 + free_darts;

  std::set<int> vertex_classes, components;
  for (Dart d = 0; d < n; ++d) {
    if (in_sub(d)) vertex_classes.insert(corners.find(d));
  }
  for (int f : face_subset) components.insert(face_comp.find(f));
  out.vertices = static_cast<int>(vertex_classes.size());
  out.connected = components.size() == 1;
  out.euler = out.vertices - out.edges + out.face_count;

  // Boundary: from a free side, the next free side is found by walking the
  // face cycle and hopping across glued edges.
  std::vector<char> seen(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (!in_sub(d) || interior(d) || seen[d]) continue;
    std::vector<Dart> walk;
    Dart x = d;
    while (!seen[x]) {
      seen[x] = 1;
      walk.push_back(x);
      Dart u = g.sigma_inf(x);
      while (interior(u)) u = g.sigma_inf(g.sigma1(u));
      x = u;
    }
    out.boundary_walks.push_back(std::move(walk));
  }
  out.boundary = static_cast<int>(out.boundary_walks.size());
  if (out.connected) out.genus = (2 - out.boundary - out.euler) / 2;
  return out;
}

namespace detail {

inline int edge_id(const FatGraph& g, Dart d) { return std::min(d, g.sigma1(d)); }

inline std::set<int> curve_edges(const FatGraph& g, const std::vector<Dart>& cycle) {
  std::set<int> s;
  for (Dart d : cycle) s.insert(edge_id(g, d));
  return s;
}

/// Vertices a curve passes through, one per step of its trajectory.
inline std::vector<int> pass_vertices(const FatGraph& g, const std::vector<Dart>& cycle) {
  std::vector<int> v;
  v.reserve(cycle.size());
  for (Dart d : cycle) v.push_back(g.vertex_of(d));
  return v;
}

inline bool curve_is_simple(const FatGraph& g, const std::vector<Dart>& cycle) {
  auto v = pass_vertices(g, cycle);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

/// Lexicographic-order subset enumeration (on sorted index lists) with
/// early exit. pred receives the chosen subset and returns true to stop.
template <typename Pred>
bool foreach_subset_lex(int count, Pred&& pred) {
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> bool {
    for (int i = next; i < count; ++i) {
      subset.push_back(i);
      if (pred(subset)) return true;
      if (self(self, i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

inline constexpr int kAnnulusFaceCap = 20;

/// Decides homotopy of two distinct simple standard cycles. Intersecting
/// curves in minimal position are never homotopic; disjoint curves are
/// homotopic exactly when some face subset glues to an annulus bounded by
/// the two of them. On success the witness holds the face subset (empty for
/// the intersecting case).
inline bool are_homotopic(const FatGraph& g, const StandardCycleDecomposition& sc, int c1, int c2,
                          std::vector<int>* witness = nullptr) {
  if (c1 == c2) throw MapError("homotopy test needs two distinct curves");
  const auto& cyc1 = sc.cycles[c1];
  const auto& cyc2 = sc.cycles[c2];
  if (!detail::curve_is_simple(g, cyc1) || !detail::curve_is_simple(g, cyc2))
    throw NotSimpleCurve();

  auto profile = face_profile(g);
  bool degenerate_face = !profile.face_lengths.empty() && profile.face_lengths.back() <= 2;

  auto v1 = detail::pass_vertices(g, cyc1);
  auto v2 = detail::pass_vertices(g, cyc2);
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  std::vector<int> common;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
  if (!common.empty()) {
    if (degenerate_face) throw MinimalPositionUnknown();
    if (witness) witness->clear();
    return false;
  }

  auto e1 = detail::curve_edges(g, cyc1);
  auto e2 = detail::curve_edges(g, cyc2);
  int face_count = static_cast<int>(faces(g).size());
  if (face_count > kAnnulusFaceCap) throw MapError("face count exceeds annulus search cap");

  bool found = detail::foreach_subset_lex(face_count, [&](const std::vector<int>& subset) {
    auto sub = subsurface(g, subset);
    if (!sub.connected || sub.euler != 0 || sub.boundary != 2) return false;
    auto b1 = detail::curve_edges(g, sub.boundary_walks[0]);
    auto b2 = detail::curve_edges(g, sub.boundary_walks[1]);
    bool match = (b1 == e1 && b2 == e2) || (b1 == e2 && b2 == e1);
    if (match && witness) *witness = subset;
    return match;
  });
  return found;
}

struct Failure {
  enum class Kind { NotConnected, NotDecorated, SelfCrossing, Monogon, Bigon, HomotopicPair };
  Kind kind;
  int a = -1;              // vertex, face, or first curve index
  int b = -1;              // second curve index for HomotopicPair
  std::vector<int> faces;  // annulus witness for HomotopicPair

  friend bool operator==(const Failure&, const Failure&) = default;
};

inline std::string to_string(Failure::Kind k) {
  switch (k) {
    case Failure::Kind::NotConnected: return "NotConnected";
    case Failure::Kind::NotDecorated: return "NotDecorated";
    case Failure::Kind::SelfCrossing: return "SelfCrossing";
    case Failure::Kind::Monogon: return "Monogon";
    case Failure::Kind::Bigon: return "Bigon";
    case Failure::Kind::HomotopicPair: return "HomotopicPair";
  }
  return "?";
}

struct ValidityReport {
  bool is_valid = false;
  std::vector<Failure> failures;
  SurfaceInvariants invariants;
};

/// Full filling-system verdict: connected, decorated, simple curves, no
/// monogon or bigon face, no homotopic disjoint pair. Failures are data;
/// nothing here throws on a bad graph.
inline ValidityReport is_filling_system(const FatGraph& g) {
  ValidityReport rep;
  rep.invariants.vertices = g.vertex_count();
  rep.invariants.edges = g.edge_count();
  if (!is_connected(g)) {
    rep.failures.push_back({Failure::Kind::NotConnected});
    return rep;
  }
  if (!is_decorated(g)) {
    rep.invariants.boundary = static_cast<int>(boundary_cycles(g).size());
    rep.invariants.euler = rep.invariants.vertices - rep.invariants.edges;
    rep.invariants.genus = (2 - rep.invariants.boundary - rep.invariants.euler) / 2;
    rep.failures.push_back({Failure::Kind::NotDecorated});
    return rep;
  }
  rep.invariants = invariants(g);
  auto sc = standard_cycles(g);

  for (int v : self_crossing_vertices(g, sc))
    rep.failures.push_back({Failure::Kind::SelfCrossing, v});

  auto fs = faces(g);
  bool degenerate_face = false;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].size() == 1) {
      rep.failures.push_back({Failure::Kind::Monogon, static_cast<int>(i)});
      degenerate_face = true;
    } else if (fs[i].size() == 2) {
      rep.failures.push_back({Failure::Kind::Bigon, static_cast<int>(i)});
      degenerate_face = true;
    }
  }

  // The annulus criterion needs minimal position, which the absence of
  // monogons and bigons certifies; with degenerate faces present the report
  // already fails, so the homotopy scan is skipped.
  if (rep.failures.empty()) {
    int s = static_cast<int>(sc.cycles.size());
    for (int i = 0; i < s; ++i) {
      for (int j = i + 1; j < s; ++j) {
        std::vector<int> witness;
        if (are_homotopic(g, sc, i, j, &witness)) {
          rep.failures.push_back({Failure::Kind::HomotopicPair, i, j, witness});
        }
      }
    }
  }

  rep.is_valid = rep.failures.empty();
  return rep;
}

}  // namespace fatfill
