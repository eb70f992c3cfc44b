#ifndef PIHALL_BOUNDS_HPP_
#define PIHALL_BOUNDS_HPP_

#include <cstdint>

namespace pihall {

using Order = std::uint64_t;

// Resource limits for exact computation. Everything here is an engineering
// choice, not mathematics: raising a limit trades time/memory for reach.
//
// Overridable through the PIHALL_BOUNDS environment variable, a comma list of
// key=value pairs, e.g. PIHALL_BOUNDS="enum=4000,brute=20000".
struct Bounds {
  // Maximum degree for any explicit permutation construction.
  int max_degree = 100000;
  // Maximum order for explicit builds of composite expressions
  // (products, semidirect, shift products). Larger expressions must go
  // through the symbolic calculus.
  Order max_build_order = 100000000;  // 1e8
  // Maximum group order for exhaustive subgroup-class enumeration. "enum".
  Order max_enum_order = 2000;
  // Maximum group order for element-scan computations (normalizer coset scan,
  // centralizer, conjugacy search, intersections). "brute".
  Order max_brute_order = 10000;
  // Maximum order for the naive-closure cross-check used in tests. "closure".
  Order max_closure_oracle = 5000;
  // Safety valve for subgroup enumeration: abort past this many classes.
  std::size_t max_classes = 200000;
};

// Process-wide bounds, parsed from PIHALL_BOUNDS once on first use.
const Bounds& bounds();

// Parse an override string (exposed for tests). Unknown keys are an error.
Bounds parse_bounds(const char* spec);

}  // namespace pihall

#endif  // PIHALL_BOUNDS_HPP_
