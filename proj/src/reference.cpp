#include "taxdist/reference.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "taxdist/association.hpp"
#include "taxdist/asymptotics.hpp"
#include "taxdist/continued_fraction.hpp"
#include "taxdist/distance.hpp"
#include "taxdist/neighbors.hpp"
#include "taxdist/robustness.hpp"

namespace taxdist::reference {

namespace {

const double sqrt3 = std::sqrt(3.0);
const double sqrt2 = std::sqrt(2.0);

using Rows = std::vector<std::vector<double>>;
using Sets = std::vector<std::vector<std::size_t>>;

bool close(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

bool matches(const DistanceMatrix& d, const Rows& expected, double rel) {
    if (d.order() != expected.size()) {
        return false;
    }
    for (std::size_t i = 0; i < d.order(); ++i) {
        for (std::size_t j = 0; j < d.order(); ++j) {
            const double e = expected[i][j];
            if (e == 0.0 ? d(i, j) != 0.0 : !close(d(i, j), e, rel)) {
                return false;
            }
        }
    }
    return true;
}

std::string show(const RationalScore& s) {
    return std::to_string(s.numerator) + "/" + std::to_string(s.denominator);
}

class Recorder {
public:
    void add(std::string name, bool passed, std::string detail = {}) {
        checks_.push_back(Check{std::move(name), passed, std::move(detail)});
    }

    template <typename F>
    void guard(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, std::string("threw: ") + e.what());
        }
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

} // namespace

DataMatrix triangle_with_center() {
    return DataMatrix::from_rows({{0, 0}, {2, 0}, {-1, sqrt3}, {-1, -sqrt3}});
}

DataMatrix triangle() {
    return DataMatrix::from_rows({{2, 0}, {-1, sqrt3}, {-1, -sqrt3}});
}

DataMatrix square_with_center() {
    return DataMatrix::from_rows({{0, 0}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

DataMatrix flipping_pair() {
    return DataMatrix::from_rows({{2, 50}, {5, 20}, {1, 10}});
}

DataMatrix unit_corner() {
    return DataMatrix::from_rows({{1, 0}, {0, 0}, {0, 1}});
}

DataMatrix line_three() {
    return DataMatrix::from_rows({{1}, {2}, {3}});
}

DataMatrix line_three_lifted() {
    return DataMatrix::from_rows({{1, 1}, {2, 0}, {3, 0}});
}

std::vector<Check> run_checks() {
    Recorder rec;
    const auto p1 = Coefficient::p_norm(1);
    const auto p2 = Coefficient::p_norm(2);
    const auto p3 = Coefficient::p_norm(3);
    const auto p7 = Coefficient::p_norm(7);
    const auto pinf = Coefficient::max_norm();
    const auto sq = Coefficient::squared_euclidean();
    constexpr double rel = 1e-12;

    // Distance matrices.
    rec.guard("distance: single row gives [0]", [&] {
        const auto d = build(p2, DataMatrix::from_rows({{3, -1, 4}}));
        rec.add("distance: single row gives [0]", d.order() == 1 && d(0, 0) == 0.0);
    });
    rec.guard("distance: two rows give [[0,c],[c,0]]", [&] {
        const auto d = build(p2, DataMatrix::from_rows({{1, 2}, {4, 6}}));
        rec.add("distance: two rows give [[0,c],[c,0]]", matches(d, {{0, 5}, {5, 0}}, 0.0));
    });
    rec.guard("distance: one column gives |x_j - x_i| for every p-norm", [&] {
        const auto x = DataMatrix::from_rows({{2}, {-1.5}, {7}});
        bool ok = true;
        for (const auto& c : {p1, p2, p3, pinf}) {
            ok = ok && matches(build(c, x), {{0, 3.5, 5}, {3.5, 0, 8.5}, {5, 8.5, 0}}, 0.0);
        }
        rec.add("distance: one column gives |x_j - x_i| for every p-norm", ok);
    });
    rec.guard("distance: outer product a w scales by N(w)", [&] {
        const auto x = DataMatrix::from_rows({{1, -2}, {3, -6}, {4, -8}});
        rec.add("distance: outer product a w scales by N(w)",
                matches(build(pinf, x), {{0, 4, 6}, {4, 0, 2}, {6, 2, 0}}, 0.0) &&
                    matches(build(p1, x), {{0, 6, 9}, {6, 0, 3}, {9, 3, 0}}, 0.0));
    });
    rec.guard("distance: triangle with center, p2", [&] {
        const double s = 2 * sqrt3;
        rec.add("distance: triangle with center, p2",
                matches(build(p2, triangle_with_center()),
                        {{0, 2, 2, 2}, {2, 0, s, s}, {2, s, 0, s}, {2, s, s, 0}}, rel));
    });
    rec.guard("distance: square with center, p2", [&] {
        const double r = sqrt2;
        rec.add("distance: square with center, p2",
                matches(build(p2, square_with_center()),
                        {{0, r, r, r, r}, {r, 0, 2, 2 * r, 2}, {r, 2, 0, 2, 2 * r}, {r, 2 * r, 2, 0, 2}, {r, 2, 2 * r, 2, 0}},
                        rel));
    });
    rec.guard("distance: flipping pair columns and max norm", [&] {
        const auto xp = flipping_pair();
        const auto first = remove_column(xp, 1);
        const auto second = remove_column(xp, 0);
        const Rows far = {{0, 30, 40}, {30, 0, 10}, {40, 10, 0}};
        rec.add("distance: flipping pair columns and max norm",
                matches(build(p1, first), {{0, 3, 1}, {3, 0, 4}, {1, 4, 0}}, 0.0) &&
                    matches(build(p2, second), far, 0.0) && matches(build(pinf, xp), far, 0.0));
    });
    rec.guard("distance: unit corner and its columns", [&] {
        const auto z = unit_corner();
        bool ok = true;
        for (const auto& c : {p1, p2, p3, p7, pinf}) {
            const double r = c.is_max_norm() ? 1.0 : std::pow(2.0, 1.0 / c.exponent());
            ok = ok && matches(build(c, z), {{0, 1, r}, {1, 0, 1}, {r, 1, 0}}, rel);
            ok = ok && matches(build(c, remove_column(z, 1)), {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}, 0.0);
            ok = ok && matches(build(c, remove_column(z, 0)), {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, 0.0);
        }
        rec.add("distance: unit corner and its columns", ok);
    });

    // Nearest neighbors.
    rec.guard("neighbors: collinear rows 1, 3, 4", [&] {
        const auto s = nearest_sets(p2, DataMatrix::from_rows({{1, 2}, {3, 6}, {4, 8}}));
        rec.add("neighbors: collinear rows 1, 3, 4", s == NeighborSets(Sets{{1}, {2}, {1}}) && s.total() == 3);
    });
    rec.guard("neighbors: flipping pair before and after augmentation", [&] {
        const auto xp = flipping_pair();
        const auto before = nearest_sets(p1, remove_column(xp, 1));
        const auto after = nearest_sets(pinf, xp);
        rec.add("neighbors: flipping pair before and after augmentation",
                before == NeighborSets(Sets{{2}, {0}, {0}}) && after == NeighborSets(Sets{{1}, {2}, {1}}));
    });
    rec.guard("neighbors: equilateral triangle reaches n(n-1)", [&] {
        rec.add("neighbors: equilateral triangle reaches n(n-1)", nearest_sets(p2, triangle()).total() == 6);
    });

    // Robustness.
    rec.guard("robustness: flipping pair has zero augmentation robustness", [&] {
        const auto xp = flipping_pair();
        const auto x = remove_column(xp, 1);
        bool ok = true;
        std::string detail;
        for (const auto& c : {p1, p2, p7, pinf}) {
            const auto s = rob_plus(c, x, xp);
            detail += c.to_string() + "=" + show(s) + " ";
            ok = ok && s.numerator == 0 && s.denominator == 3;
        }
        rec.add("robustness: flipping pair has zero augmentation robustness", ok, detail);
    });
    rec.guard("robustness: constant column keeps robustness at 1", [&] {
        const auto x = triangle_with_center();
        const std::vector<double> zero{0.0};
        const auto s = rob_plus(p2, x, augment_constant_columns(x, zero));
        rec.add("robustness: constant column keeps robustness at 1", s == RationalScore{1, 1}, show(s));
    });
    rec.guard("robustness: unit corner, leave-one-column-out", [&] {
        const auto z = unit_corner();
        TiePolicy positive;
        positive.zero_rule = ZeroDistanceRule::Ignore;
        bool ok = rob_minus(pinf, z) == RationalScore{1, 3} && rob_minus(pinf, z, positive) == RationalScore{1, 3};
        for (const auto& c : {p1, p2, p3}) {
            // Row 1 keeps neighbor 2 when the first column goes, so only four
            // of six (row, column) pairs change with zero-distance neighbors.
            ok = ok && rob_minus(c, z) == RationalScore{1, 3};
            ok = ok && rob_minus(c, z, positive) == RationalScore{0, 6};
        }
        rec.add("robustness: unit corner, leave-one-column-out", ok);
    });
    rec.guard("robustness: triangle, leave-one-column-out", [&] {
        const auto z = triangle();
        // The p2 triangle is equilateral, so every row starts with two neighbors.
        const bool ok = rob_minus(p1, z) == RationalScore{2, 3} && rob_minus(pinf, z) == RationalScore{2, 3} &&
                        rob_minus(p2, z) == RationalScore{1, 3};
        rec.add("robustness: triangle, leave-one-column-out", ok,
                "p1=" + show(rob_minus(p1, z)) + " p2=" + show(rob_minus(p2, z)) + " pinf=" + show(rob_minus(pinf, z)));
    });
    rec.guard("robustness: identical rows are fully robust", [&] {
        const auto x = DataMatrix::from_rows({{1, 2}, {1, 2}, {1, 2}});
        rec.add("robustness: identical rows are fully robust", rob_minus(p1, x) == RationalScore{1, 1});
    });
    rec.guard("robustness: adversarial column on the triangle", [&] {
        const auto r = adversarial_augment(p2, triangle());
        rec.add("robustness: adversarial column on the triangle",
                r.achieved_near_total == 3 && r.robustness.numerator <= 3 && r.robustness.denominator == 6,
                "rob_plus=" + show(r.robustness));
    });

    // Concordance.
    rec.guard("concordance: trivial shapes", [&] {
        const bool ok = concordance(p1, p2, DataMatrix::from_rows({{1, 2}})) == RationalScore{1, 1} &&
                        concordance(p1, pinf, DataMatrix::from_rows({{1, 2}, {5, -1}})) == RationalScore{1, 1} &&
                        concordance(p2, pinf, DataMatrix::from_rows({{1}, {4}, {2}, {9}})) == RationalScore{1, 1};
        rec.add("concordance: trivial shapes", ok);
    });
    rec.guard("concordance: triangle, p1 vs p2", [&] {
        const auto s = concordance(p1, p2, triangle());
        rec.add("concordance: triangle, p1 vs p2", s.numerator == 1 && s.denominator == 3, show(s));
    });

    // Correlation.
    auto rho_check = [&](const std::string& name, const Coefficient& m, const Coefficient& nrm, const DataMatrix& x,
                         double expected, double tol) {
        rec.guard(name, [&] {
            const auto r = correlation(m, nrm, x);
            const bool ok = r.rho && std::fabs(*r.rho - expected) <= tol;
            std::ostringstream os;
            os.precision(10);
            os << "rho=" << (r.rho ? *r.rho : std::nan("")) << " expected=" << expected;
            rec.add(name, ok, os.str());
        });
    };
    for (const auto& c : {p1, p2, pinf}) {
        rho_check("correlation: line of three, " + c.to_string() + " vs L", c, sq, line_three(), 7 / std::sqrt(55.0), 1e-6);
    }
    rho_check("correlation: lifted line, p1 vs L", p1, sq, line_three_lifted(), 14 / std::sqrt(213.0), 1e-6);
    rho_check("correlation: lifted line, pinf vs L", pinf, sq, line_three_lifted(), 53 / (2 * std::sqrt(781.0)), 1e-6);
    rho_check("correlation: triangle, p1 vs p2", p1, p2, triangle(), 0.972335, 1e-5);
    rho_check("correlation: triangle, p1 vs pinf", p1, pinf, triangle(), 0.9375373, 1e-5);
    rho_check("correlation: triangle, p2 vs pinf", p2, pinf, triangle(), 0.9928629, 1e-5);
    rec.guard("correlation: expectations", [&] {
        const bool ok = close(expectation(build(p1, line_three())), 8.0 / 9.0, rel) &&
                        close(expectation(build(p1, triangle())), 2.0 / 9.0 * (6 + 4 * sqrt3), rel);
        rec.add("correlation: expectations", ok);
    });
    rec.guard("correlation: undefined for zero variance", [&] {
        const bool ok = !correlation(p1, p2, DataMatrix::from_rows({{1, 2}})).defined() &&
                        !correlation(p1, p2, DataMatrix::from_rows({{1, 2}, {1, 2}})).defined();
        rec.add("correlation: undefined for zero variance", ok);
    });

    // Asymptotics.
    rec.guard("asymptotics: expected nearest-neighbor distance", [&] {
        const bool ok = close(expected_nn_distance(1, 1, 1), 1.0, rel) &&
                        close(expected_nn_distance(2, 1, 1), std::sqrt(std::numbers::pi) / 2, rel) &&
                        close(volume_at_expected(2, 1), std::numbers::pi / 4, rel) &&
                        close(volume_at_expected(4, 3), scaled_volume(7, expected_nn_distance(4, 3, 7), 4), rel);
        rec.add("asymptotics: expected nearest-neighbor distance", ok);
    });
    rec.guard("asymptotics: uniform interval, one point", [&] {
        const auto e = uniform_interval_expected_nn(1, 1.0, 200000, 7);
        rec.add("asymptotics: uniform interval, one point", std::fabs(e.mean - 0.5) <= 3 * e.standard_error,
                "mean=" + std::to_string(e.mean));
    });
    rec.guard("asymptotics: delta to 15 places", [&] {
        const auto d = delta_constant(15);
        rec.add("asymptotics: delta to 15 places", d.text == "0.570376001675023", d.text);
    });
    rec.guard("asymptotics: delta convergents", [&] {
        const auto expansion = continued_fraction_convergents(delta_constant(20), 200000000);
        bool has_small = false;
        bool has_large = false;
        for (const auto& c : expansion.convergents) {
            has_small = has_small || c.q == 5382609;
            has_large = has_large || c.q == 169229911;
        }
        const bool beyond = expansion.next_denominator && *expansion.next_denominator > 169229911;
        rec.add("asymptotics: delta convergents", has_small && has_large && beyond && !expansion.truncated);
    });
    return rec.take();
}

} // namespace taxdist::reference
