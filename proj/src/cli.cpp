#include "taxdist/cli.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "taxdist/association.hpp"
#include "taxdist/asymptotics.hpp"
#include "taxdist/continued_fraction.hpp"
#include "taxdist/distance.hpp"
#include "taxdist/error.hpp"
#include "taxdist/io.hpp"
#include "taxdist/neighbors.hpp"
#include "taxdist/reference.hpp"
#include "taxdist/robustness.hpp"

namespace taxdist::cli {

namespace {

struct Options {
    std::string c = "p2";
    std::string m = "p1";
    std::string nrm = "p2";
    std::string x;
    std::string xp;
    std::string conv = "grid";
    std::string format = "text";
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    bool ignore_zero = false;
    bool exact = false;
    std::size_t rows = 3;
    std::size_t cols = 1;
    std::uint32_t levels = 4;
    std::uint64_t samples = 1000000;
    std::uint64_t probes = NearSearchBudget{}.random_samples;
    std::uint64_t seed = 1;
    std::uint64_t points = 1;
    double half_width = 1.0;
    unsigned digits = delta_max_digits;
    std::uint64_t max_q = 200000000;
};

std::string sig(double v) { return io::format_significant(v, 9); }

std::string score_text(const RationalScore& s) {
    return std::to_string(s.numerator) + "/" + std::to_string(s.denominator) + " (" + sig(s.value()) + ")";
}

void print_sets(std::ostream& out, const NeighborSets& s) {
    for (std::size_t i = 0; i < s.order(); ++i) {
        out << "NEAR(" << i + 1 << "):";
        for (const auto j : s[i]) {
            out << ' ' << j + 1;
        }
        out << '\n';
    }
    out << "total: " << s.total() << '\n';
}

class Runner {
public:
    Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

    bool json() const { return o_.format == "json"; }

    void emit(const nlohmann::json& j) { out_ << j.dump(2) << '\n'; }

    TiePolicy tie() const {
        TiePolicy t;
        t.relative_tolerance = o_.rel_tol;
        t.absolute_tolerance = o_.abs_tol;
        t.zero_rule = o_.ignore_zero ? ZeroDistanceRule::Ignore : ZeroDistanceRule::Nearest;
        t.validate();
        return t;
    }

    int distmat() {
        const auto c = Coefficient::parse(o_.c);
        const auto d = build(c, io::read_csv_file(o_.x));
        if (json()) {
            auto j = io::to_json(d);
            j["coefficient"] = c.to_string();
            emit(j);
        } else {
            io::write_csv(out_, d);
        }
        return exit_ok;
    }

    int near() {
        const auto c = Coefficient::parse(o_.c);
        const auto x = io::read_csv_file(o_.x);
        const auto s = o_.exact ? nearest_sets_exact(c, x, tie().zero_rule) : nearest_sets(c, x, tie());
        if (json()) {
            auto j = io::to_json(s);
            j["coefficient"] = c.to_string();
            emit(j);
        } else {
            print_sets(out_, s);
        }
        return exit_ok;
    }

    int rob_plus_cmd() {
        const auto c = Coefficient::parse(o_.c);
        const auto s = rob_plus(c, io::read_csv_file(o_.x), io::read_csv_file(o_.xp), tie());
        if (json()) {
            emit({{"coefficient", c.to_string()}, {"rob_plus", io::to_json(s)}});
        } else {
            out_ << "rob_plus: " << score_text(s) << '\n';
        }
        return exit_ok;
    }

    int rob_minus_cmd() {
        const auto c = Coefficient::parse(o_.c);
        const auto x = io::read_csv_file(o_.x);
        const auto counts = column_change_counts(c, x, tie());
        const auto s = rob_minus(c, x, tie());
        if (json()) {
            emit({{"coefficient", c.to_string()}, {"rob_minus", io::to_json(s)}, {"changed_rows", counts}});
        } else {
            out_ << "changed rows per removed column:";
            for (const auto n : counts) {
                out_ << ' ' << n;
            }
            out_ << "\nrob_minus: " << score_text(s) << '\n';
        }
        return exit_ok;
    }

    int concord() {
        const auto m = Coefficient::parse(o_.m);
        const auto n = Coefficient::parse(o_.nrm);
        const auto s = concordance(m, n, io::read_csv_file(o_.x), tie());
        if (json()) {
            emit({{"m", m.to_string()}, {"n", n.to_string()}, {"concordance", io::to_json(s)}});
        } else {
            out_ << "concordance: " << score_text(s) << '\n';
        }
        return exit_ok;
    }

    int corr() {
        const auto m = Coefficient::parse(o_.m);
        const auto n = Coefficient::parse(o_.nrm);
        const auto r = correlation(m, n, io::read_csv_file(o_.x), io::parse_convention(o_.conv));
        if (json()) {
            auto j = io::to_json(r);
            j["m"] = m.to_string();
            j["n"] = n.to_string();
            emit(j);
        } else {
            out_ << "rho: " << (r.rho ? sig(*r.rho) : std::string("undefined")) << '\n'
                 << "cov: " << sig(r.covariance) << '\n'
                 << "var_m: " << sig(r.variance_m) << '\n'
                 << "var_n: " << sig(r.variance_n) << '\n';
        }
        return exit_ok;
    }

    int adversarial() {
        const auto c = Coefficient::parse(o_.c);
        const auto r = adversarial_augment(c, io::read_csv_file(o_.x), tie());
        if (json()) {
            auto j = io::to_json(r);
            j["coefficient"] = c.to_string();
            emit(j);
        } else {
            out_ << "t: " << sig(r.t) << '\n'
                 << "NEAR before: " << r.original_near_total << '\n'
                 << "NEAR after: " << r.achieved_near_total << '\n'
                 << "rob_plus: " << score_text(r.robustness) << '\n'
                 << "bound: " << score_text(RationalScore{r.augmented.rows(), r.original_near_total}) << '\n';
            print_sets(out_, r.neighbors);
        }
        return exit_ok;
    }

    int explore_near() {
        const auto c = Coefficient::parse(o_.c);
        NearSearchBudget budget;
        budget.columns = o_.cols;
        budget.grid_levels = o_.levels;
        budget.random_samples = o_.probes;
        const auto totals = achievable_near_totals(o_.rows, c, budget, o_.seed);
        if (json()) {
            emit({{"coefficient", c.to_string()}, {"rows", o_.rows}, {"totals", totals}});
        } else {
            out_ << "observed NEAR totals:";
            for (const auto t : totals) {
                out_ << ' ' << t;
            }
            out_ << '\n';
        }
        return exit_ok;
    }

    int mc_nn() {
        const auto e = uniform_interval_expected_nn(o_.points, o_.half_width, o_.samples, o_.seed);
        const double conjecture = conjectured_expected_nn(o_.points, o_.half_width);
        if (json()) {
            auto j = io::to_json(e);
            j["conjecture"] = conjecture;
            emit(j);
        } else {
            out_ << "mean: " << sig(e.mean) << '\n'
                 << "standard error: " << sig(e.standard_error) << '\n'
                 << "conjecture L/(n+1): " << sig(conjecture) << '\n';
        }
        return exit_ok;
    }

    int delta_cf() {
        const auto d = delta_constant(o_.digits);
        const auto e = continued_fraction_convergents(d, o_.max_q);
        if (json()) {
            auto j = io::to_json(e);
            j["delta"] = d.text;
            emit(j);
        } else {
            out_ << "delta: " << d.text << '\n';
            for (const auto& c : e.convergents) {
                out_ << c.p << '/' << c.q << '\n';
            }
            if (e.next_denominator) {
                out_ << "next denominator: " << *e.next_denominator << '\n';
            }
            if (e.truncated) {
                out_ << "truncated: input precision exhausted\n";
            }
        }
        return exit_ok;
    }

    int verify() {
        const auto checks = reference::run_checks();
        bool ok = true;
        if (json()) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& c : checks) {
                list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                ok = ok && c.passed;
            }
            emit({{"checks", list}, {"passed", ok}});
        } else {
            for (const auto& c : checks) {
                out_ << (c.passed ? "PASS " : "FAIL ") << c.name;
                if (!c.detail.empty()) {
                    out_ << " [" << c.detail << ']';
                }
                out_ << '\n';
                ok = ok && c.passed;
            }
        }
        return ok ? exit_ok : exit_domain_error;
    }

private:
    Options& o_;
    std::ostream& out_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Distance matrices, nearest neighbors and robustness of coefficients", "taxdist"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_tie = [&](CLI::App* s) {
        s->add_option("--rel-tol", o.rel_tol, "Relative tie tolerance");
        s->add_option("--abs-tol", o.abs_tol, "Absolute tie tolerance");
        s->add_flag("--ignore-zero", o.ignore_zero, "Skip zero distances when choosing neighbors");
    };
    auto add_x = [&](CLI::App* s) { s->add_option("--x", o.x, "Data matrix CSV")->required(); };
    auto add_c = [&](CLI::App* s) { s->add_option("--c", o.c, "Coefficient: p1, p2, pinf, p<decimal> or L"); };
    auto add_pair = [&](CLI::App* s) {
        s->add_option("--m", o.m, "First coefficient");
        s->add_option("--n,--l", o.nrm, "Second coefficient");
    };

    std::function<int()> action;
    Runner runner(o, out);
    auto sub = [&](const char* name, const char* about, int (Runner::*fn)()) {
        auto* s = app.add_subcommand(name, about);
        s->callback([&, fn] { action = [&, fn] { return (runner.*fn)(); }; });
        add_format(s);
        return s;
    };

    auto* distmat = sub("distmat", "Print the distance matrix", &Runner::distmat);
    add_c(distmat);
    add_x(distmat);

    auto* near = sub("near", "Print nearest-neighbor sets", &Runner::near);
    add_c(near);
    add_x(near);
    add_tie(near);
    near->add_flag("--exact", o.exact, "Compare distances in exact rational arithmetic (p1, pinf, L)");

    auto* rp = sub("rob-plus", "Robustness to adding columns", &Runner::rob_plus_cmd);
    add_c(rp);
    add_x(rp);
    rp->add_option("--xp", o.xp, "Augmented data matrix CSV")->required();
    add_tie(rp);

    auto* rm = sub("rob-minus", "Leave-one-column-out robustness", &Runner::rob_minus_cmd);
    add_c(rm);
    add_x(rm);
    add_tie(rm);

    auto* cd = sub("concord", "Concordance of two coefficients", &Runner::concord);
    add_pair(cd);
    add_x(cd);
    add_tie(cd);

    auto* cr = sub("corr", "Correlation of two distance matrices", &Runner::corr);
    add_pair(cr);
    add_x(cr);
    cr->add_option("--conv", o.conv, "Sample space: grid or upper")->check(CLI::IsMember({"grid", "upper"}));

    auto* adv = sub("adversarial", "Append a column that leaves every row one neighbor", &Runner::adversarial);
    add_c(adv);
    add_x(adv);
    add_tie(adv);

    auto* ex = sub("explore-near", "Search NEAR totals reachable with n rows", &Runner::explore_near);
    add_c(ex);
    ex->add_option("--rows", o.rows, "Number of rows")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    ex->add_option("--cols", o.cols, "Number of columns")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    ex->add_option("--levels", o.levels, "Integer grid levels")->check(CLI::Range(1u, 1000u));
    ex->add_option("--samples", o.probes, "Random probes");
    ex->add_option("--seed", o.seed, "Random seed");

    auto* mc = sub("mc-nn", "Monte Carlo expected nearest distance to 0 on [-L, L]", &Runner::mc_nn);
    mc->add_option("--points", o.points, "Number of uniform points")->check(CLI::PositiveNumber);
    mc->add_option("--half-width", o.half_width, "Half width L")->check(CLI::PositiveNumber);
    mc->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    mc->add_option("--seed", o.seed, "Random seed");

    auto* dc = sub("delta-cf", "Decimal digits and convergents of exp(-exp(-gamma))", &Runner::delta_cf);
    dc->add_option("--digits", o.digits, "Decimal places")->check(CLI::Range(1u, delta_max_digits));
    dc->add_option("--max-q", o.max_q, "Largest convergent denominator")->check(CLI::PositiveNumber);

    sub("verify", "Run the built-in reference checks", &Runner::verify);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
}

} // namespace taxdist::cli
