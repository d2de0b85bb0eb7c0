#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatfill/fat_graph.hpp"

namespace fatfill {

/// Relabeling-invariant identifier of a fat graph. Equal codes are
/// equivalent to isomorphism in the recorded mode; with reflection allowed,
/// a graph and its mirror (sigma0 inverted) share a code.
struct CanonicalCode {
  std::vector<std::uint16_t> words;  // dart_count, then sigma0 and sigma1 tables
  bool reflection_mode = true;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  std::vector<std::uint8_t> bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(words.size() * 2 + 1);
    out.push_back(reflection_mode ? 1 : 0);
    for (auto w : words) {
      out.push_back(static_cast<std::uint8_t>(w >> 8));
      out.push_back(static_cast<std::uint8_t>(w & 0xff));
    }
    return out;
  }

  /// FNV-1a over the byte encoding, as a fixed-width hex string.
  std::string hex_digest() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : bytes()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
      s[i] = digits[h & 0xf];
      h >>= 4;
    }
    return s;
  }
};

namespace detail {

/// First-visit relabeling from a start dart, exploring with generators
/// (sigma0 or its inverse, then sigma1) breadth-first. Returns perm with
/// perm[old] = new; fills every dart iff the graph is connected.
inline std::vector<Dart> visit_order(const FatGraph& g, Dart start, bool invert_sigma0) {
  int n = g.dart_count();
  std::vector<Dart> perm(n, -1), queue;
  queue.reserve(n);
  perm[start] = 0;
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    Dart d = queue[head];
    Dart next[2] = {invert_sigma0 ? g.sigma0_inv(d) : g.sigma0(d), g.sigma1(d)};
    for (Dart x : next) {
      if (perm[x] == -1) {
        perm[x] = static_cast<int>(queue.size());
        queue.push_back(x);
      }
    }
  }
  return perm;
}

inline std::vector<std::uint16_t> emit(const FatGraph& g, const std::vector<Dart>& perm,
                                       bool invert_sigma0) {
  int n = g.dart_count();
  std::vector<Dart> inv(n);
  for (Dart d = 0; d < n; ++d) inv[perm[d]] = d;
  std::vector<std::uint16_t> w;
  w.reserve(2 * n + 1);
  w.push_back(static_cast<std::uint16_t>(n));
  for (Dart i = 0; i < n; ++i) {
    Dart old = inv[i];
    w.push_back(static_cast<std::uint16_t>(
        perm[invert_sigma0 ? g.sigma0_inv(old) : g.sigma0(old)]));
  }
  for (Dart i = 0; i < n; ++i) w.push_back(static_cast<std::uint16_t>(perm[g.sigma1(inv[i])]));
  return w;
}

}  // namespace detail

/// Lexicographically smallest relabeled emission over all start darts (and
/// over sigma0 inversion when reflection is allowed).
inline CanonicalCode canonical_form(const FatGraph& g, bool allow_reflection = true) {
  if (!is_connected(g)) throw DisconnectedGraph();
  int n = g.dart_count();
  CanonicalCode best;
  best.reflection_mode = allow_reflection;
  for (int mirror = 0; mirror <= (allow_reflection ? 1 : 0); ++mirror) {
    for (Dart s = 0; s < n; ++s) {
      auto perm = detail::visit_order(g, s, mirror != 0);
      auto w = detail::emit(g, perm, mirror != 0);
      if (best.words.empty() || w < best.words) best.words = std::move(w);
    }
  }
  return best;
}

/// The relabeling (perm[old] = new) realizing the canonical code, along with
/// whether it used the mirrored rotation.
struct CanonicalWitness {
  std::vector<Dart> perm;
  bool mirrored = false;
};

inline CanonicalWitness canonical_witness(const FatGraph& g, bool allow_reflection = true) {
  if (!is_connected(g)) throw DisconnectedGraph();
  int n = g.dart_count();
  CanonicalWitness best;
  std::vector<std::uint16_t> best_words;
  for (int mirror = 0; mirror <= (allow_reflection ? 1 : 0); ++mirror) {
    for (Dart s = 0; s < n; ++s) {
      auto perm = detail::visit_order(g, s, mirror != 0);
      auto w = detail::emit(g, perm, mirror != 0);
      if (best_words.empty() || w < best_words) {
        best_words = std::move(w);
        best.perm = std::move(perm);
        best.mirrored = mirror != 0;
      }
    }
  }
  return best;
}

/// Dart bijection conjugating both permutations of g1 onto g2 (through the
/// mirror of g2 when `mirrored`), produced on every positive answer.
struct IsomorphismWitness {
  std::vector<Dart> map;  // map[dart of g1] = dart of g2
  bool mirrored = false;
};

inline bool verify_witness(const FatGraph& g1, const FatGraph& g2, const IsomorphismWitness& w) {
  int n = g1.dart_count();
  if (g2.dart_count() != n || static_cast<int>(w.map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (w.map[d] < 0 || w.map[d] >= n || hit[w.map[d]]) return false;
    hit[w.map[d]] = 1;
  }
  for (Dart d = 0; d < n; ++d) {
    if (w.map[g1.sigma1(d)] != g2.sigma1(w.map[d])) return false;
    Dart expect = w.mirrored ? g2.sigma0_inv(w.map[d]) : g2.sigma0(w.map[d]);
    if (w.map[g1.sigma0(d)] != expect) return false;
  }
  return true;
}

inline std::optional<IsomorphismWitness> find_isomorphism(const FatGraph& g1, const FatGraph& g2,
                                                          bool allow_reflection = true) {
  if (canonical_form(g1, allow_reflection) != canonical_form(g2, allow_reflection))
    return std::nullopt;
  auto w1 = canonical_witness(g1, allow_reflection);
  auto w2 = canonical_witness(g2, allow_reflection);
  int n = g1.dart_count();
  std::vector<Dart> inv2(n);
  for (Dart d = 0; d < n; ++d) inv2[w2.perm[d]] = d;
  IsomorphismWitness w;
  w.map.resize(n);
  for (Dart d = 0; d < n; ++d) w.map[d] = inv2[w1.perm[d]];
  // The two canonical traversals may differ in mirror choice; the composite
  // is mirrored exactly when the choices disagree.
  w.mirrored = w1.mirrored != w2.mirrored;
  if (!verify_witness(g1, g2, w)) throw MapError("canonical witness failed verification");
  return w;
}

inline bool are_isomorphic(const FatGraph& g1, const FatGraph& g2, bool allow_reflection = true) {
  return find_isomorphism(g1, g2, allow_reflection).has_value();
}

}  // namespace fatfill
