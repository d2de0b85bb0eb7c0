#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatfill/fat_graph.hpp"

namespace fatfill {

struct OutOfRange : MapError {
  explicit OutOfRange(const std::string& what) : MapError(what) {}
};

/// One S_k-equivalence class of k non-negative integers: stored weakly
/// decreasing, padded with zeros to length k.
struct PartitionClass {
  std::vector<int> parts;

  int sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }

  friend auto operator<=>(const PartitionClass&, const PartitionClass&) = default;
};

/// p(n, <=k): partitions of n into at most k parts, by the recurrence
/// p(n,k) = p(n,k-1) + p(n-k,k).
inline std::int64_t count_partitions_at_most(int n, int k) {
  if (n < 0 || k < 1) throw OutOfRange("count_partitions_at_most needs n >= 0, k >= 1");
  std::vector<std::vector<std::int64_t>> p(n + 1, std::vector<std::int64_t>(k + 1, 0));
  for (int kk = 0; kk <= k; ++kk) p[0][kk] = 1;
  for (int nn = 1; nn <= n; ++nn) {
    for (int kk = 1; kk <= k; ++kk) {
      p[nn][kk] = p[nn][kk - 1] + (nn >= kk ? p[nn - kk][kk] : 0);
    }
  }
  return p[n][k];
}

/// All weakly decreasing length-k sequences of non-negative integers summing
/// to n, zero-padded, in lexicographic order (largest first part first).
inline std::vector<PartitionClass> enumerate_partitions(int n, int k) {
  if (n < 0 || k < 1) throw OutOfRange("enumerate_partitions needs n >= 0, k >= 1");
  std::vector<PartitionClass> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int idx, int rem, int maxv) -> void {
    if (idx == k) {
      if (rem == 0) out.push_back({cur});
      return;
    }
    for (int v = std::min(rem, maxv); v >= 0; --v) {
      if (v == 0 && rem > 0) return;  // tail is zero-filled, cannot absorb rem
      cur[idx] = v;
      self(self, idx + 1, rem - v, v);
    }
  };
  rec(rec, 0, n, n);
  return out;
}

/// Lower bound on mapping class group orbits of maximum-size fillings:
/// a sum of partition-class counts, one term per central-cycle length,
/// plus one for the chain construction.
struct OrbitBound {
  int g = 0;
  int b = 0;
  std::vector<std::pair<int, std::int64_t>> per_s;  // (s, class count)
  std::int64_t total = 0;
  std::int64_t bound = 0;  // total + 1
};

inline OrbitBound orbit_lower_bound(int g, int b) {
  if (g < 2) throw OutOfRange("orbit_lower_bound needs g >= 2");
  OrbitBound r;
  r.g = g;
  r.b = b;
  if (b == 1) {
    for (int s = 2; s <= g; ++s) r.per_s.emplace_back(s, count_partitions_at_most(g - s, s));
  } else if (b == 2) {
    for (int s = 2; s <= g + 1; ++s)
      r.per_s.emplace_back(s, count_partitions_at_most(g - s + 1, s));
  } else if (b >= 3 && b <= g - 2) {
    r.per_s.emplace_back(b, count_partitions_at_most(g - 1, b));
  } else {
    throw OutOfRange("orbit_lower_bound: b must be 1, 2, or in [3, g-2]");
  }
  for (auto& [s, c] : r.per_s) r.total += c;
  r.bound = r.total + 1;
  return r;
}

/// Shapes indexing the orbit representatives: for b = 1 and 2 the central
/// cycle length s plus a partition of g-s (resp. g-s+1) into s parts; for
/// 3 <= b <= g-2 a central cycle of length 2b and a partition of g-1 into
/// b parts.
struct OrbitShape {
  int b = 0;
  int s = 0;  // central standard-cycle parameter
  PartitionClass partition;

  friend auto operator<=>(const OrbitShape&, const OrbitShape&) = default;
};

inline void check_shape(int g, const OrbitShape& shape) {
  const auto& p = shape.partition;
  auto fail = [](const std::string& m) { throw OutOfRange("shape invariant violated: " + m); };
  if (shape.b == 1) {
    if (shape.s < 2 || shape.s > g) fail("b=1 needs 2 <= s <= g");
    if (p.length() != shape.s || p.sum() != g - shape.s) fail("b=1 partition must sum to g-s");
  } else if (shape.b == 2) {
    if (shape.s < 2 || shape.s > g + 1) fail("b=2 needs 2 <= s <= g+1");
    if (p.length() != shape.s || p.sum() != g - shape.s + 1)
      fail("b=2 partition must sum to g-s+1");
  } else if (shape.b >= 3 && shape.b <= g - 2) {
    if (shape.s != 2 * shape.b) fail("central cycle has length 2b");
    if (p.length() != shape.b || p.sum() != g - 1) fail("partition must sum to g-1");
  } else {
    fail("b must be 1, 2, or in [3, g-2]");
  }
  for (size_t i = 0; i + 1 < p.parts.size(); ++i) {
    if (p.parts[i] < p.parts[i + 1]) fail("partition must be weakly decreasing");
  }
  for (int x : p.parts) {
    if (x < 0) fail("negative part");
  }
}

/// All shapes for (g, b) in deterministic order: by s, then by partition in
/// lexicographic order.
inline std::vector<OrbitShape> all_shapes(int g, int b) {
  std::vector<OrbitShape> out;
  auto bound = orbit_lower_bound(g, b);
  for (auto& [s, count] : bound.per_s) {
    int n = (b == 1) ? g - s : (b == 2) ? g - s + 1 : g - 1;
    int k = (b <= 2) ? s : b;
    for (auto& p : enumerate_partitions(n, k)) {
      out.push_back({b, (b <= 2) ? s : 2 * b, p});
    }
  }
  return out;
}

}  // namespace fatfill
