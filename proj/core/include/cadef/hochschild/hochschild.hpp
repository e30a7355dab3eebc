#pragma once

#include <cstddef>
#include <vector>

#include "cadef/algstruct/fdalgebra.hpp"

namespace cadef {

/// Coboundary delta^k : C^k -> C^{k+1} of the standard bar complex, where
/// C^k = Hom(A^{(x)k}, A). Row (i_1..i_{k+1}, r) and column (j_1..j_k, c)
/// are indexed in base d with the output coordinate last.
struct Coboundary {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseRow> entries;  // one per row
};
Coboundary hochschild_coboundary(const FDAlgebra& A, std::size_t k);

/// The same map on normalized cochains (vanishing when an argument is the
/// unit basis vector), assembled column by column.
Coboundary reduced_coboundary(const FDAlgebra& A, std::size_t k);

/// Product of two coboundaries (second after first), for delta o delta = 0.
bool composes_to_zero(const Coboundary& first, const Coboundary& second);

struct HochschildOptions {
  bool reduced = false;
  bool allow_large = false;          // permits k_max > 3
  std::size_t entry_budget = 50'000'000;  // rows x cols of the largest coboundary
};

struct HochschildReport {
  std::vector<std::size_t> dims;          // HH^0 .. HH^k_max
  std::vector<std::size_t> cochain_dims;  // dim C^0 .. C^k_max
  std::vector<std::size_t> ranks;         // rank delta^0 .. delta^k_max
  std::size_t k_max = 0;
  bool reduced = false;
};

/// Throws CostGuardExceeded when k_max > 3 without allow_large, or when a
/// coboundary exceeds the entry budget.
HochschildReport hochschild_dims(const FDAlgebra& A, std::size_t k_max, const HochschildOptions& opts = {});

struct HHConsistency {
  std::size_t hh0 = 0;
  std::size_t centre_dim = 0;
  bool hh0_matches = false;
  std::size_t hh1 = 0;
  std::size_t hh2 = 0;
  bool tangent_obstruction_equal = false;
};
HHConsistency hh_consistency(const FDAlgebra& A);

}  // namespace cadef
