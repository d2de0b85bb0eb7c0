#pragma once

#include <utility>
#include <vector>

#include "fatfill/fat_graph.hpp"

namespace fatfill {

/// Assembles a fat graph from vertices with numbered rotation slots.
/// Edge i receives darts 2i and 2i+1 (the packed serialization convention),
/// and each vertex rotation reads its slots in increasing order.
class MapBuilder {
 public:
  int add_vertex(int degree = 4) {
    slots_.emplace_back(degree, -1);
    return static_cast<int>(slots_.size()) - 1;
  }

  /// Connects (v1, slot1) to (v2, slot2) with a new edge; returns the edge id.
  int connect(int v1, int slot1, int v2, int slot2) {
    int e = edge_count_++;
    place(v1, slot1, 2 * e);
    place(v2, slot2, 2 * e + 1);
    return e;
  }

  FatGraph build() const {
    std::vector<std::vector<Dart>> cycles;
    cycles.reserve(slots_.size());
    for (const auto& v : slots_) {
      for (Dart d : v)
        if (d == -1) throw MapError("unfilled rotation slot");
      cycles.push_back(v);
    }
    return FatGraph::from_vertex_cycles(cycles);
  }

 private:
  void place(int v, int slot, Dart d) {
    if (slots_[v][slot] != -1) throw MapError("rotation slot used twice");
    slots_[v][slot] = d;
  }

  std::vector<std::vector<Dart>> slots_;
  int edge_count_ = 0;
};

}  // namespace fatfill
