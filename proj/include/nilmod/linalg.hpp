#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nilmod/field.hpp"

namespace nilmod {

/// Sparse row as (column, nonzero value) pairs with strictly increasing columns.
template <typename F>
using SparseRow = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// Exact rank. Plain elimination over F_p; over Q rows are scaled to
/// primitive integer vectors and eliminated fraction-free.
std::size_t matrix_rank(const PrimeField& field, std::vector<SparseRow<PrimeField>> rows);
std::size_t matrix_rank(const RationalField& field, std::vector<SparseRow<RationalField>> rows);

}  // namespace nilmod
