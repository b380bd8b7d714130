#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "taxdist/coefficient.hpp"
#include "taxdist/error.hpp"
#include "taxdist/rational.hpp"

namespace taxdist {

/**
 * @brief Dense n x k data matrix whose rows are the classified objects.
 *
 * Row-major storage. At least one row and one column; for floating-point
 * scalars every entry must be finite.
 */
template <typename T>
class BasicDataMatrix {
public:
    using value_type = T;

    BasicDataMatrix(std::size_t rows, std::size_t cols, std::vector<T> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (rows_ == 0 || cols_ == 0) {
            throw DomainError("data matrix needs at least one row and one column");
        }
        if (values_.size() != rows_ * cols_) {
            throw DomainError("data matrix value count does not match its shape");
        }
        if constexpr (std::is_floating_point_v<T>) {
            for (const T& v : values_) {
                if (!std::isfinite(v)) {
                    throw DomainError("data matrix entries must be finite");
                }
            }
        }
    }

    static BasicDataMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) {
            throw DomainError("data matrix needs at least one row and one column");
        }
        const std::size_t cols = rows.front().size();
        std::vector<T> values;
        values.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols) {
                throw DomainError("data matrix rows have differing lengths");
            }
            values.insert(values.end(), r.begin(), r.end());
        }
        return BasicDataMatrix(rows.size(), cols, std::move(values));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const {
        return std::span<const T>(values_).subspan(i * cols_, cols_);
    }

    std::span<const T> values() const { return values_; }

    friend bool operator==(const BasicDataMatrix&, const BasicDataMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> values_;
};

using DataMatrix = BasicDataMatrix<double>;
using RationalDataMatrix = BasicDataMatrix<Rational>;

/// Exact rational copy of a floating-point data matrix.
RationalDataMatrix to_rational(const DataMatrix& x);

/**
 * @brief Symmetric, zero-diagonal, nonnegative n x n matrix.
 *
 * The invariants are checked on construction, exactly. The coefficient that
 * produced the matrix is kept as an optional provenance tag and does not take
 * part in equality.
 */
template <typename T>
class BasicDistanceMatrix {
public:
    using value_type = T;

    BasicDistanceMatrix(std::size_t order, std::vector<T> entries,
                        std::optional<Coefficient> coefficient = std::nullopt)
        : order_(order), entries_(std::move(entries)), coefficient_(coefficient) {
        if (order_ == 0) {
            throw DomainError("distance matrix order must be positive");
        }
        if (entries_.size() != order_ * order_) {
            throw DomainError("distance matrix entry count does not match its order");
        }
        for (std::size_t i = 0; i < order_; ++i) {
            if (at(i, i) != T(0)) {
                throw DomainError("distance matrix diagonal must be zero");
            }
            for (std::size_t j = i + 1; j < order_; ++j) {
                const T& a = at(i, j);
                if (a != at(j, i)) {
                    throw DomainError("distance matrix must be symmetric");
                }
                if constexpr (std::is_floating_point_v<T>) {
                    if (!(a >= T(0)) || !std::isfinite(a)) {
                        throw DomainError("distance matrix entries must be finite and nonnegative");
                    }
                } else {
                    if (a < T(0)) {
                        throw DomainError("distance matrix entries must be nonnegative");
                    }
                }
            }
        }
    }

    static BasicDistanceMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        std::vector<T> entries;
        entries.reserve(rows.size() * rows.size());
        for (const auto& r : rows) {
            if (r.size() != rows.size()) {
                throw DomainError("distance matrix must be square");
            }
            entries.insert(entries.end(), r.begin(), r.end());
        }
        return BasicDistanceMatrix(rows.size(), std::move(entries));
    }

    std::size_t order() const { return order_; }

    const T& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    std::span<const T> row(std::size_t i) const {
        return std::span<const T>(entries_).subspan(i * order_, order_);
    }

    std::span<const T> entries() const { return entries_; }
    const std::optional<Coefficient>& coefficient() const { return coefficient_; }

    friend bool operator==(const BasicDistanceMatrix& a, const BasicDistanceMatrix& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

private:
    const T& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    std::size_t order_;
    std::vector<T> entries_;
    std::optional<Coefficient> coefficient_;
};

using DistanceMatrix = BasicDistanceMatrix<double>;
using ExactDistanceMatrix = BasicDistanceMatrix<Rational>;

} // namespace taxdist
