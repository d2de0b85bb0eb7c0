#pragma once

#include <string>
#include <vector>

#include "fatfill/builder.hpp"
#include "fatfill/fat_graph.hpp"

namespace fatfill {

/// A chain of order n: curves c1..cn with c_i crossing c_{i+1} exactly once,
/// n-1 degree-4 vertices. At vertex i the rotation interleaves c_i and
/// c_{i+1} as (out_i, out_{i+1}, in_i, in_{i+1}). Fills with one
/// complementary disc for even n, two for odd n.
inline FatGraph chain(int n) {
  if (n < 2) throw MapError("chain order must be at least 2");
  MapBuilder b;
  for (int i = 0; i < n - 1; ++i) b.add_vertex();
  // slots at vertex i: 0 = c_{i+1} out, 1 = c_{i+2} out, 2 = c_{i+1} in, 3 = c_{i+2} in
  b.connect(0, 0, 0, 2);  // c_1 loop at the first vertex
  for (int i = 2; i <= n - 1; ++i) {
    // curve c_i runs between vertices i-2 and i-1 along two parallel edges
    b.connect(i - 2, 1, i - 1, 2);
    b.connect(i - 1, 0, i - 2, 3);
  }
  b.connect(n - 2, 1, n - 2, 3);  // c_n loop at the last vertex
  return b.build();
}

/// The genus-2 example graph: 3 vertices, 6 edges, one boundary component,
/// standard cycles of lengths 3, 2 and 1.
inline FatGraph gamma_example() {
  // edges e1,e2,e3 -> 0,1,2 and f1,f2,f3 -> 3,4,5; edge i owns darts 2i
  // (forward) and 2i+1 (reverse).
  return FatGraph::from_vertex_cycles({
      {0, 9, 5, 6},   // (e1>, f2<, e3<, f1>)
      {2, 7, 1, 8},   // (e2>, f1<, e1<, f2>)
      {4, 11, 3, 10}, // (e3>, f3<, e2<, f3>)
  });
}

/// The 5-vertex, 10-edge graph of genus 3 with a single boundary component
/// and 6 standard cycles.
inline FatGraph gamma_remark5() {
  // edges e1..e3 -> 0..2, f1..f7 -> 3..9
  return FatGraph::from_vertex_cycles({
      {0, 7, 5, 6},    // (e1>, f1<, e3<, f1>)  f1 is a loop here
      {2, 11, 1, 8},   // (e2>, f3<, e1<, f2>)
      {4, 17, 3, 14},  // (e3>, f6<, e2<, f5>)
      {9, 12, 10, 13}, // (f2<, f4>, f3>, f4<)
      {15, 18, 16, 19} // (f5<, f7>, f6>, f7<)
  });
}

}  // namespace fatfill
