#pragma once

#include <optional>

#include "taxdist/coefficient.hpp"
#include "taxdist/matrix.hpp"
#include "taxdist/neighbors.hpp"
#include "taxdist/score.hpp"

namespace taxdist {

/// Sample space for expectations over a distance matrix.
enum class SampleSpace {
    FullGrid,       ///< all n^2 index pairs, 1/n^2 each
    UpperTriangle,  ///< pairs i < j, 2/(n(n-1)) each
};

/// Variances at or below this are treated as zero.
inline constexpr double variance_floor = 1e-24;

struct CorrelationResult {
    std::optional<double> rho;  ///< empty when either variance is degenerate
    double covariance = 0.0;
    double variance_m = 0.0;
    double variance_n = 0.0;
    SampleSpace convention = SampleSpace::FullGrid;

    bool defined() const { return rho.has_value(); }
};

/// Rows whose nearest-neighbor sets agree under m and nrm, over n.
RationalScore concordance(const Coefficient& m, const Coefficient& nrm, const DataMatrix& x,
                          const TiePolicy& tie = {});

/// Mean entry under the sample space. UpperTriangle needs n >= 2.
double expectation(const DistanceMatrix& d, SampleSpace conv = SampleSpace::FullGrid);

/// Entrywise product; DomainError on order mismatch.
DistanceMatrix hadamard(const DistanceMatrix& a, const DistanceMatrix& b);

/// Correlation of two distance matrices of equal order.
CorrelationResult correlation(const DistanceMatrix& a, const DistanceMatrix& b,
                              SampleSpace conv = SampleSpace::FullGrid);

CorrelationResult correlation(const Coefficient& m, const Coefficient& nrm, const DataMatrix& x,
                              SampleSpace conv = SampleSpace::FullGrid);

} // namespace taxdist
