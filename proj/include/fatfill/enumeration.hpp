#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fatfill/fat_graph.hpp"
#include "fatfill/isomorphism.hpp"
#include "fatfill/validity.hpp"

namespace fatfill {

/// Census request over connected 4-valent fat graphs with a fixed number of
/// vertices. Unset filters accept everything. Genus and boundary filters are
/// linked by Euler's relation (boundary = vertices + 2 - 2 genus) since the
/// maps are 4-valent; asking for an inconsistent pair yields an empty,
/// trivially exhausted census.
struct SearchSpec {
  int vertices = 1;
  std::optional<int> target_genus;
  std::optional<int> target_boundary;
  std::optional<int> target_curves;  // number of standard cycles
  bool require_valid_filling = false;
  bool allow_reflection = true;      // isomorphism mode used for deduplication
  std::uint64_t budget = 1'000'000'000ull;  // search-tree node allowance
  bool unlock_large = false;         // lift the vertices <= 8 guard
};

struct CensusResult {
  std::vector<FatGraph> representatives;  // sorted by canonical code
  std::vector<CanonicalCode> codes;       // parallel to representatives
  std::uint64_t nodes_expanded = 0;
  std::uint64_t leaves = 0;       // complete connected gluings examined
  std::uint64_t kept = 0;         // leaves passing every filter
  bool exhausted = true;          // false iff the budget ran out
};

namespace detail {

/// Union-find with an undo log, used for the three structural trackers
/// (strand curves, boundary-walk segments, vertex connectivity).
class RewindUF {
 public:
  explicit RewindUF(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns false when x and y were already joined (a cycle closes).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    log_.push_back({x, y});
    return true;
  }

  int component_size(int x) const { return size_[find(x)]; }

  size_t mark() const { return log_.size(); }

  void rewind(size_t mark) {
    while (log_.size() > mark) {
      auto [x, y] = log_.back();
      log_.pop_back();
      size_[x] -= size_[y];
      parent_[y] = y;
    }
  }

 private:
  std::vector<int> parent_, size_;
  std::vector<std::pair<int, int>> log_;
};

/// Vertex v owns darts 4v..4v+3 in rotation order.
inline Dart rot_next(Dart d) { return (d & ~3) | ((d + 1) & 3); }

/// Strands pair opposite slots: (0,2) and (1,3) of each vertex.
inline int strand_of(Dart d) { return 2 * (d / 4) + d % 2; }

struct SearchState {
  int V;
  int darts;                // 4V
  std::vector<Dart> match;  // sigma1 under construction, -1 when open
  RewindUF curves;          // over the 2V strands
  RewindUF faces;           // over darts, tracking sigma_inf path segments
  RewindUF comps;           // over vertices
  int closed_curves = 0;
  int closed_faces = 0;
  int min_closed_face_len = 0;
  int matches_done = 0;

  explicit SearchState(int v)
      : V(v), darts(4 * v), match(4 * v, -1), curves(2 * v), faces(4 * v), comps(v) {
    min_closed_face_len = darts + 1;
  }

  int open_curves() const { return 2 * V - matches_done; }
  int open_face_segments() const { return darts - 2 * matches_done; }
};

struct Frame {
  size_t curve_mark, face_mark, comp_mark;
  int saved_closed_curves, saved_closed_faces, saved_min_face;
};

/// Pairs two open darts, updating all trackers; returns the undo frame.
inline Frame apply_match(SearchState& st, Dart a, Dart b) {
  Frame f{st.curves.mark(), st.faces.mark(),          st.comps.mark(),
          st.closed_curves, st.closed_faces,          st.min_closed_face_len};
  st.match[a] = b;
  st.match[b] = a;
  st.matches_done++;
  st.comps.unite(a / 4, b / 4);
  if (!st.curves.unite(strand_of(a), strand_of(b))) st.closed_curves++;
  // sigma_inf sends a to rot_next(b) and b to rot_next(a); record both
  // boundary-walk links, counting cycles as they close.
  for (auto [u, v] : {std::pair<Dart, Dart>{a, rot_next(b)}, {b, rot_next(a)}}) {
    if (!st.faces.unite(u, v)) {
      st.closed_faces++;
      st.min_closed_face_len = std::min(st.min_closed_face_len, st.faces.component_size(u));
    }
  }
  return f;
}

inline void undo_match(SearchState& st, Dart a, Dart b, const Frame& f) {
  st.match[a] = -1;
  st.match[b] = -1;
  st.matches_done--;
  st.curves.rewind(f.curve_mark);
  st.faces.rewind(f.face_mark);
  st.comps.rewind(f.comp_mark);
  st.closed_curves = f.saved_closed_curves;
  st.closed_faces = f.saved_closed_faces;
  st.min_closed_face_len = f.saved_min_face;
}

/// True when the partial gluing can no longer reach the requested census.
/// `last` is a dart involved in the most recent pairing.
inline bool prune(const SearchState& st, const SearchSpec& spec, int boundary_target,
                  Dart last) {
  if (spec.target_curves) {
    int t = *spec.target_curves;
    if (st.closed_curves > t) return true;
    if (st.closed_curves + st.open_curves() < t) return true;
    // open strands must still close into at least one further curve
    if (st.open_curves() > 0 && st.closed_curves >= t) return true;
  }
  if (boundary_target >= 0) {
    if (st.closed_faces > boundary_target) return true;
    if (st.closed_faces + st.open_face_segments() < boundary_target) return true;
    if (st.open_face_segments() > 0 && st.closed_faces >= boundary_target) return true;
  }
  if (spec.require_valid_filling && st.min_closed_face_len <= 2) return true;
  // A fully matched vertex component that misses some vertex cannot reconnect.
  int root = st.comps.find(last / 4);
  if (st.comps.component_size(last / 4) < st.V) {
    bool has_open_dart = false;
    for (Dart d = 0; d < st.darts && !has_open_dart; ++d) {
      if (st.match[d] == -1 && st.comps.find(d / 4) == root) has_open_dart = true;
    }
    if (!has_open_dart) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive census of connected 4-valent fat graphs up to isomorphism.
/// Rotations are fixed per vertex; the depth-first search glues the lowest
/// open dart at each step, pruning against the requested filters, and
/// deduplicates complete gluings by canonical code.
inline CensusResult enumerate_fillings(const SearchSpec& spec) {
  if (spec.vertices < 1) throw MapError("census needs at least one vertex");
  if (spec.vertices > 8 && !spec.unlock_large)
    throw MapError("census beyond 8 vertices must be unlocked explicitly");

  CensusResult res;
  int boundary_target = spec.target_boundary ? *spec.target_boundary : -1;
  if (spec.target_genus) {
    int implied = spec.vertices + 2 - 2 * *spec.target_genus;
    if (boundary_target >= 0 && boundary_target != implied) return res;
    boundary_target = implied;
  }
  if (boundary_target == 0) return res;  // a thickened graph always has boundary
  // Euler parity: boundary = V + 2 - 2 genus, so boundary and V agree mod 2.
  if (boundary_target > 0 && (boundary_target % 2) != (spec.vertices % 2)) return res;

  detail::SearchState st(spec.vertices);
  std::map<CanonicalCode, FatGraph> found;

  std::vector<std::vector<Dart>> rotations(spec.vertices);
  for (int v = 0; v < spec.vertices; ++v) rotations[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};

  auto dfs = [&](auto&& self) -> void {
    if (res.nodes_expanded >= spec.budget) {
      res.exhausted = false;
      return;
    }
    Dart a = 0;
    while (a < st.darts && st.match[a] != -1) ++a;
    if (a == st.darts) {
      if (st.comps.component_size(0) != st.V) return;
      res.leaves++;
      std::vector<std::pair<Dart, Dart>> pairs;
      pairs.reserve(st.darts / 2);
      for (Dart d = 0; d < st.darts; ++d)
        if (st.match[d] > d) pairs.emplace_back(d, st.match[d]);
      FatGraph g = FatGraph::from_permutations(rotations, pairs);
      auto inv = invariants(g);
      if (spec.target_genus && inv.genus != *spec.target_genus) return;
      if (spec.target_boundary && inv.boundary != *spec.target_boundary) return;
      if (spec.target_curves &&
          standard_cycles(g).lengths.size() != static_cast<size_t>(*spec.target_curves))
        return;
      if (spec.require_valid_filling && !is_filling_system(g).is_valid) return;
      res.kept++;
      found.emplace(canonical_form(g, spec.allow_reflection), std::move(g));
      return;
    }
    for (Dart b = a + 1; b < st.darts; ++b) {
      if (st.match[b] != -1) continue;
      // Root symmetry cut: with rotations fixed, vertex renaming and slot
      // rotation let dart 0 glue to slot 1 or 2 of its own vertex or to the
      // first slot of vertex 1.
      if (a == 0 && b != 1 && b != 2 && b != 4) continue;
      res.nodes_expanded++;
      auto frame = detail::apply_match(st, a, b);
      if (!detail::prune(st, spec, boundary_target, a)) self(self);
      detail::undo_match(st, a, b, frame);
      if (!res.exhausted) return;
    }
  };
  dfs(dfs);

  res.representatives.reserve(found.size());
  res.codes.reserve(found.size());
  for (auto& [code, g] : found) {
    res.codes.push_back(code);
    res.representatives.push_back(std::move(g));
  }
  return res;
}

/// Size of a largest filling system with b complementary discs on the closed
/// surface of genus g. Any such filling is a connected 4-valent fat graph
/// whose Euler relation forces exactly 2g + b - 2 vertices, so one exhaustive
/// census certifies the maximum curve count.
inline int max_filling_size(int g, int b) {
  if (g < 2 || b < 1 || b > 2 * g - 2)
    throw MapError("max_filling_size needs g >= 2 and 1 <= b <= 2g-2");
  SearchSpec spec{2 * g + b - 2};
  spec.target_genus = g;
  spec.target_boundary = b;
  spec.require_valid_filling = true;
  auto census = enumerate_fillings(spec);
  if (!census.exhausted) throw MapError("budget exhausted while certifying maximum size");
  if (census.representatives.empty()) throw MapError("no valid filling at this (g, b)");
  int best = 0;
  for (const auto& rep : census.representatives) {
    best = std::max(best, static_cast<int>(standard_cycles(rep).lengths.size()));
  }
  return best;
}

}  // namespace fatfill
