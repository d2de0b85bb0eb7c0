#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatfill {

/// Darts are dense integers in [0, dart_count). Each undirected edge
/// contributes two darts exchanged by the involution sigma1.
using Dart = int;

struct MapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateDart : MapError {
  Dart dart;
  explicit DuplicateDart(Dart d)
      : MapError("dart " + std::to_string(d) + " covered more than once"), dart(d) {}
};

struct UncoveredDart : MapError {
  Dart dart;
  explicit UncoveredDart(Dart d)
      : MapError("dart " + std::to_string(d) + " not covered"), dart(d) {}
};

struct FixedPointInInvolution : MapError {
  Dart dart;
  explicit FixedPointInInvolution(Dart d)
      : MapError("involution fixes dart " + std::to_string(d)), dart(d) {}
};

struct DisconnectedGraph : MapError {
  DisconnectedGraph() : MapError("fat graph is not connected") {}
};

struct NotDecorated : MapError {
  NotDecorated() : MapError("fat graph is not decorated (vertex of odd or small degree)") {}
};

struct NonIntegerGenus : MapError {
  NonIntegerGenus() : MapError("invariants do not yield an integer genus") {}
};

/// Counts of the thickened surface carried by a fat graph.
/// euler = V - E; euler = 2 - 2*genus - boundary.
struct SurfaceInvariants {
  int vertices = 0;
  int edges = 0;
  int boundary = 0;
  int euler = 0;
  int genus = 0;
  std::optional<int> curves;  // standard cycle count, decorated graphs only

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Curves of a decorated fat graph. Each cycle is a dart sequence in which
/// consecutive darts leave a vertex through opposite slots; cycles related
/// by full reversal are identified, keeping the one through the smallest
/// dart, started at that dart.
struct StandardCycleDecomposition {
  std::vector<std::vector<Dart>> cycles;
  std::vector<int> lengths;  // sorted descending, one entry per curve (edge count)
  std::vector<int> curve_of; // dart -> curve index
};

/// A fat graph: an even dart set with a fixed-point-free involution sigma1
/// (edge reversal) and a permutation sigma0 whose cycles are the vertex
/// rotations. Values are immutable once built; every operation is pure.
class FatGraph {
 public:
  /// Validating constructor. The vertex cycles and the involution pairs must
  /// each cover every dart in [0, max+1) exactly once, and no pair may be a
  /// fixed point. Darts are required to be dense and the dart count positive.
  static FatGraph from_permutations(const std::vector<std::vector<Dart>>& sigma0_cycles,
                                    const std::vector<std::pair<Dart, Dart>>& sigma1_pairs) {
    int n = 0;
    for (const auto& c : sigma0_cycles)
      for (Dart d : c) n = std::max(n, d + 1);
    for (const auto& [a, b] : sigma1_pairs) n = std::max({n, a + 1, b + 1});
    if (n == 0) throw MapError("empty dart set");

    std::vector<Dart> s0(n, -1), s1(n, -1);
    for (const auto& c : sigma0_cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        Dart d = c[i];
        if (d < 0) throw MapError("negative dart index");
        if (s0[d] != -1) throw DuplicateDart(d);
        s0[d] = c[(i + 1) % c.size()];
      }
    }
    for (const auto& [a, b] : sigma1_pairs) {
      if (a == b) throw FixedPointInInvolution(a);
      if (s1[a] != -1) throw DuplicateDart(a);
      if (s1[b] != -1) throw DuplicateDart(b);
      s1[a] = b;
      s1[b] = a;
    }
    for (Dart d = 0; d < n; ++d) {
      if (s0[d] == -1 || s1[d] == -1) throw UncoveredDart(d);
    }
    return FatGraph(std::move(s0), std::move(s1));
  }

  /// Convenience constructor using the packed edge convention: edge i owns
  /// darts 2i and 2i+1 with sigma1(2i) = 2i+1. Only the rotations are needed.
  static FatGraph from_vertex_cycles(const std::vector<std::vector<Dart>>& sigma0_cycles) {
    int n = 0;
    for (const auto& c : sigma0_cycles)
      for (Dart d : c) n = std::max(n, d + 1);
    if (n % 2) throw MapError("odd dart count under the packed edge convention");
    std::vector<std::pair<Dart, Dart>> pairs;
    pairs.reserve(n / 2);
    for (int i = 0; i < n / 2; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
    return from_permutations(sigma0_cycles, pairs);
  }

  int dart_count() const { return static_cast<int>(s0_.size()); }
  int edge_count() const { return dart_count() / 2; }

  Dart sigma0(Dart d) const { return s0_[d]; }
  Dart sigma0_inv(Dart d) const { return s0_inv_[d]; }
  Dart sigma1(Dart d) const { return s1_[d]; }
  /// sigma_infinity: apply sigma1, then sigma0. Its cycles are the boundary
  /// components of the thickened surface.
  Dart sigma_inf(Dart d) const { return s0_[s1_[d]]; }
  Dart sigma_inf_inv(Dart d) const { return s1_[s0_inv_[d]]; }

  const std::vector<Dart>& sigma0_table() const { return s0_; }
  const std::vector<Dart>& sigma1_table() const { return s1_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  const std::vector<std::vector<Dart>>& vertex_cycles() const { return vertex_cycles_; }
  int degree(int vertex) const { return static_cast<int>(vertex_cycles_[vertex].size()); }

  /// Conjugate both permutations by a dart bijection: perm[old] = new.
  FatGraph relabel(const std::vector<Dart>& perm) const {
    int n = dart_count();
    std::vector<Dart> s0(n), s1(n);
    for (Dart d = 0; d < n; ++d) {
      s0[perm[d]] = perm[s0_[d]];
      s1[perm[d]] = perm[s1_[d]];
    }
    return FatGraph(std::move(s0), std::move(s1));
  }

  friend bool operator==(const FatGraph& a, const FatGraph& b) {
    return a.s0_ == b.s0_ && a.s1_ == b.s1_;
  }

 private:
  FatGraph(std::vector<Dart> s0, std::vector<Dart> s1)
      : s0_(std::move(s0)), s1_(std::move(s1)) {
    int n = dart_count();
    s0_inv_.resize(n);
    for (Dart d = 0; d < n; ++d) s0_inv_[s0_[d]] = d;
    vertex_of_.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
      if (vertex_of_[d] != -1) continue;
      int v = static_cast<int>(vertex_cycles_.size());
      std::vector<Dart> cycle;
      for (Dart x = d; vertex_of_[x] == -1; x = s0_[x]) {
        vertex_of_[x] = v;
        cycle.push_back(x);
      }
      vertex_cycles_.push_back(std::move(cycle));
    }
  }

  std::vector<Dart> s0_, s1_, s0_inv_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<Dart>> vertex_cycles_;
};

namespace detail {

/// Cycle decomposition of an arbitrary dart map, cycles discovered from the
/// smallest unvisited dart and started there.
template <typename F>
inline std::vector<std::vector<Dart>> cycles_of(int n, F&& next) {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Dart>> out;
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<Dart> cyc;
    for (Dart x = d; !seen[x]; x = next(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace detail

inline std::vector<std::vector<Dart>> boundary_cycles(const FatGraph& g) {
  return detail::cycles_of(g.dart_count(), [&](Dart d) { return g.sigma_inf(d); });
}

inline bool is_connected(const FatGraph& g) {
  int n = g.dart_count();
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart x : {g.sigma0(d), g.sigma1(d)}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        stack.push_back(x);
      }
    }
  }
  return count == n;
}

inline bool is_decorated(const FatGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int deg = g.degree(v);
    if (deg < 4 || deg % 2) return false;
  }
  return true;
}

/// The dart across the vertex: sigma0^k(d) at a vertex of degree 2k.
inline Dart opposite(const FatGraph& g, Dart d) {
  int deg = g.degree(g.vertex_of(d));
  if (deg < 4 || deg % 2) throw NotDecorated();
  Dart x = d;
  for (int i = 0; i < deg / 2; ++i) x = g.sigma0(x);
  return x;
}

inline StandardCycleDecomposition standard_cycles(const FatGraph& g) {
  if (!is_decorated(g)) throw NotDecorated();
  int n = g.dart_count();
  auto trace = [&](Dart d) { return opposite(g, g.sigma1(d)); };
  auto raw = detail::cycles_of(n, trace);

  // Pair each trace cycle with its reversal (the cycle through sigma1 of its
  // darts) and keep the one containing the smaller dart.
  std::vector<int> cycle_of(n);
  for (size_t i = 0; i < raw.size(); ++i)
    for (Dart d : raw[i]) cycle_of[d] = static_cast<int>(i);

  StandardCycleDecomposition out;
  out.curve_of.assign(n, -1);
  std::vector<char> used(raw.size(), 0);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    int partner = cycle_of[g.sigma1(raw[i][0])];
    used[i] = 1;
    used[partner] = 1;
    int curve = static_cast<int>(out.cycles.size());
    int len = static_cast<int>(raw[i].size());
    if (partner == static_cast<int>(i)) len /= 2;  // cycle is its own reverse
    for (Dart d : raw[i]) out.curve_of[d] = curve;
    for (Dart d : raw[partner]) out.curve_of[d] = curve;
    out.cycles.push_back(std::move(raw[i]));
    out.lengths.push_back(len);
  }
  std::sort(out.lengths.begin(), out.lengths.end(), std::greater<>());
  return out;
}

inline SurfaceInvariants invariants(const FatGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  SurfaceInvariants inv;
  inv.vertices = g.vertex_count();
  inv.edges = g.edge_count();
  inv.boundary = static_cast<int>(boundary_cycles(g).size());
  inv.euler = inv.vertices - inv.edges;
  int twice_genus = 2 - inv.boundary - inv.euler;
  if (twice_genus % 2 || twice_genus < 0) throw NonIntegerGenus();
  inv.genus = twice_genus / 2;
  if (is_decorated(g)) inv.curves = static_cast<int>(standard_cycles(g).lengths.size());
  return inv;
}

}  // namespace fatfill
