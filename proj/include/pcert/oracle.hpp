#pragma once

#include <vector>

#include "pcert/complex.hpp"

namespace pcert {

// Independent brute-force checks. Everything here recomputes from the raw
// face cycles with its own bookkeeping so that disagreement with the main
// code paths signals a real bug.

// Euler characteristic by literal cell enumeration; a face with c boundary
// cycles counts as 2 - c.
[[nodiscard]] long long oracle_chi(const Complex& cx);

// Whether the given closed edge cycle fails to bound a disk on either side.
[[nodiscard]] bool oracle_essential(const Complex& cx, const std::vector<int>& cycle);

struct OracleCurve {
  std::vector<int> edges;  // cyclic, vertex-simple
  bool essential = false;
};

struct CurveEnumeration {
  std::vector<OracleCurve> curves;
  bool truncated = false;  // true when some longer embedded curve was pruned
};

// Every embedded closed curve in the 1-skeleton with at most max_length
// edges, each tagged essential or inessential.
[[nodiscard]] CurveEnumeration exhaustive_curves(const Complex& cx, int max_length);

}  // namespace pcert
