#pragma once

#include <cstddef>
#include <span>

#include "taxdist/coefficient.hpp"
#include "taxdist/matrix.hpp"

namespace taxdist {

/// D(c, X): entry (i, j) is c applied to row j minus row i.
/// Each unordered pair is evaluated once and mirrored.
DistanceMatrix build(const Coefficient& c, const DataMatrix& x);

/// Exact counterpart of build() for p = 1, p = inf and L.
/// Throws DomainError for coefficients without an exact form.
ExactDistanceMatrix build_exact(const Coefficient& c, const RationalDataMatrix& x);

/// X with one appended column per constant, each filled with that constant.
DataMatrix augment_constant_columns(const DataMatrix& x, std::span<const double> constants);

/// X with an arbitrary extra column appended.
DataMatrix append_column(const DataMatrix& x, std::span<const double> column);

// Indices below are 0-based.

DataMatrix remove_row(const DataMatrix& x, std::size_t i);
DataMatrix remove_column(const DataMatrix& x, std::size_t j);

/// Row i of the result is row perm[i] of X. perm must be a bijection on {0..n-1}.
DataMatrix permute_rows(const DataMatrix& x, std::span<const std::size_t> perm);

/// P D P^T for the permutation matrix P with P x = permute_rows(x, perm).
DistanceMatrix conjugate(const DistanceMatrix& d, std::span<const std::size_t> perm);

/// D with row and column i deleted.
DistanceMatrix remove_index(const DistanceMatrix& d, std::size_t i);

/// True when y has the same rows as x, one more column, and agrees with x on x's columns.
bool is_one_column_extension(const DataMatrix& x, const DataMatrix& y);

} // namespace taxdist
