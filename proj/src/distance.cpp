#include "taxdist/distance.hpp"

#include <string>
#include <vector>

#include "taxdist/error.hpp"

namespace taxdist {

RationalDataMatrix to_rational(const DataMatrix& x) {
    std::vector<Rational> values;
    values.reserve(x.values().size());
    for (double v : x.values()) {
        values.push_back(to_rational(v));
    }
    return RationalDataMatrix(x.rows(), x.cols(), std::move(values));
}

DistanceMatrix build(const Coefficient& c, const DataMatrix& x) {
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();
    std::vector<double> entries(n * n, 0.0);
    std::vector<double> diff(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = x.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto xj = x.row(j);
            for (std::size_t col = 0; col < k; ++col) {
                diff[col] = xj[col] - xi[col];
            }
            const double d = detail::evaluate_unchecked(c, diff);
            entries[i * n + j] = d;
            entries[j * n + i] = d;
        }
    }
    return DistanceMatrix(n, std::move(entries), c);
}

ExactDistanceMatrix build_exact(const Coefficient& c, const RationalDataMatrix& x) {
    if (!supports_exact(c)) {
        throw DomainError("coefficient " + c.to_string() + " has no exact rational form");
    }
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();
    std::vector<Rational> entries(n * n);
    std::vector<Rational> diff(k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t col = 0; col < k; ++col) {
                diff[col] = x(j, col) - x(i, col);
            }
            Rational d = evaluate_exact(c, diff);
            entries[j * n + i] = d;
            entries[i * n + j] = std::move(d);
        }
    }
    return ExactDistanceMatrix(n, std::move(entries), c);
}

DataMatrix augment_constant_columns(const DataMatrix& x, std::span<const double> constants) {
    const std::size_t k = x.cols() + constants.size();
    std::vector<double> values;
    values.reserve(x.rows() * k);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto r = x.row(i);
        values.insert(values.end(), r.begin(), r.end());
        values.insert(values.end(), constants.begin(), constants.end());
    }
    return DataMatrix(x.rows(), k, std::move(values));
}

DataMatrix append_column(const DataMatrix& x, std::span<const double> column) {
    if (column.size() != x.rows()) {
        throw DomainError("appended column length must equal the number of rows");
    }
    std::vector<double> values;
    values.reserve(x.rows() * (x.cols() + 1));
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto r = x.row(i);
        values.insert(values.end(), r.begin(), r.end());
        values.push_back(column[i]);
    }
    return DataMatrix(x.rows(), x.cols() + 1, std::move(values));
}

DataMatrix remove_row(const DataMatrix& x, std::size_t i) {
    if (x.rows() < 2) {
        throw DomainError("cannot remove the only row of a data matrix");
    }
    if (i >= x.rows()) {
        throw DomainError("row index " + std::to_string(i) + " out of range");
    }
    std::vector<double> values;
    values.reserve((x.rows() - 1) * x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        if (r != i) {
            const auto row = x.row(r);
            values.insert(values.end(), row.begin(), row.end());
        }
    }
    return DataMatrix(x.rows() - 1, x.cols(), std::move(values));
}

DataMatrix remove_column(const DataMatrix& x, std::size_t j) {
    if (x.cols() < 2) {
        throw DomainError("cannot remove the only column of a data matrix");
    }
    if (j >= x.cols()) {
        throw DomainError("column index " + std::to_string(j) + " out of range");
    }
    std::vector<double> values;
    values.reserve(x.rows() * (x.cols() - 1));
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (c != j) {
                values.push_back(x(r, c));
            }
        }
    }
    return DataMatrix(x.rows(), x.cols() - 1, std::move(values));
}

namespace {

void require_permutation(std::span<const std::size_t> perm, std::size_t n) {
    if (perm.size() != n) {
        throw DomainError("permutation length must equal the number of rows");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t v : perm) {
        if (v >= n || seen[v]) {
            throw DomainError("sequence is not a permutation");
        }
        seen[v] = true;
    }
}

} // namespace

DataMatrix permute_rows(const DataMatrix& x, std::span<const std::size_t> perm) {
    require_permutation(perm, x.rows());
    std::vector<double> values;
    values.reserve(x.values().size());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto r = x.row(perm[i]);
        values.insert(values.end(), r.begin(), r.end());
    }
    return DataMatrix(x.rows(), x.cols(), std::move(values));
}

DistanceMatrix conjugate(const DistanceMatrix& d, std::span<const std::size_t> perm) {
    const std::size_t n = d.order();
    require_permutation(perm, n);
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries[i * n + j] = d(perm[i], perm[j]);
        }
    }
    return DistanceMatrix(n, std::move(entries), d.coefficient());
}

DistanceMatrix remove_index(const DistanceMatrix& d, std::size_t i) {
    const std::size_t n = d.order();
    if (n < 2 || i >= n) {
        throw DomainError("index out of range for distance matrix reduction");
    }
    std::vector<double> entries;
    entries.reserve((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (c != i) {
                entries.push_back(d(r, c));
            }
        }
    }
    return DistanceMatrix(n - 1, std::move(entries), d.coefficient());
}

bool is_one_column_extension(const DataMatrix& x, const DataMatrix& y) {
    if (y.rows() != x.rows() || y.cols() != x.cols() + 1) {
        return false;
    }
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j) != y(i, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace taxdist
