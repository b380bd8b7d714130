#include "taxdist/association.hpp"

#include <cmath>

#include "taxdist/detail/summation.hpp"
#include "taxdist/distance.hpp"
#include "taxdist/error.hpp"

namespace taxdist {

RationalScore concordance(const Coefficient& m, const Coefficient& nrm, const DataMatrix& x, const TiePolicy& tie) {
    const NeighborSets a = nearest_sets(m, x, tie);
    const NeighborSets b = nearest_sets(nrm, x, tie);
    std::uint64_t agree = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        if (a[i] == b[i]) {
            ++agree;
        }
    }
    return RationalScore{agree, x.rows()};
}

namespace {

double point_count(std::size_t n, SampleSpace conv) {
    const double nd = static_cast<double>(n);
    if (conv == SampleSpace::FullGrid) {
        return nd * nd;
    }
    if (n < 2) {
        throw DomainError("the upper-triangle sample space needs at least two rows");
    }
    return nd * (nd - 1.0) / 2.0;
}

} // namespace

double expectation(const DistanceMatrix& d, SampleSpace conv) {
    const std::size_t n = d.order();
    const double points = point_count(n, conv);
    detail::CompensatedSum upper;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            upper.add(d(i, j));
        }
    }
    const double s = upper.value();
    return conv == SampleSpace::FullGrid ? 2.0 * s / points : s / points;
}

DistanceMatrix hadamard(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (a.order() != b.order()) {
        throw DomainError("Hadamard product needs matrices of the same order");
    }
    const auto ea = a.entries();
    const auto eb = b.entries();
    std::vector<double> out(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
        out[i] = ea[i] * eb[i];
    }
    return DistanceMatrix(a.order(), std::move(out));
}

CorrelationResult correlation(const DistanceMatrix& a, const DistanceMatrix& b, SampleSpace conv) {
    if (a.order() != b.order()) {
        throw DomainError("correlation needs distance matrices of the same order");
    }
    const std::size_t n = a.order();
    const double points = point_count(n, conv);
    const double mean_a = expectation(a, conv);
    const double mean_b = expectation(b, conv);

    // Centered moments over the sample space: cov = E((A - EA) o (B - EB)).
    detail::CompensatedSum sab;
    detail::CompensatedSum saa;
    detail::CompensatedSum sbb;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a(i, j) - mean_a;
            const double db = b(i, j) - mean_b;
            sab.add(da * db);
            saa.add(da * da);
            sbb.add(db * db);
        }
    }
    double cov = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    if (conv == SampleSpace::FullGrid) {
        // Each off-diagonal point appears twice; the n diagonal points are zero.
        const double nd = static_cast<double>(n);
        cov = (2.0 * sab.value() + nd * (mean_a * mean_b)) / points;
        var_a = (2.0 * saa.value() + nd * (mean_a * mean_a)) / points;
        var_b = (2.0 * sbb.value() + nd * (mean_b * mean_b)) / points;
    } else {
        cov = sab.value() / points;
        var_a = saa.value() / points;
        var_b = sbb.value() / points;
    }

    CorrelationResult result;
    result.covariance = cov;
    result.variance_m = var_a;
    result.variance_n = var_b;
    result.convention = conv;
    if (var_a > variance_floor && var_b > variance_floor) {
        result.rho = cov / std::sqrt(var_a * var_b);
    }
    return result;
}

CorrelationResult correlation(const Coefficient& m, const Coefficient& nrm, const DataMatrix& x, SampleSpace conv) {
    return correlation(build(m, x), build(nrm, x), conv);
}

} // namespace taxdist
