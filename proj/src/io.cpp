#include "taxdist/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "taxdist/error.hpp"

namespace taxdist::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view source, std::size_t line, std::size_t column, const std::string& why) {
    throw DomainError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + why);
}

nlohmann::json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(v);
    }
    return v.str();
}

} // namespace

DataMatrix read_csv(std::istream& in, std::string_view source) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::size_t column = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            const std::string_view field =
                trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            ++column;
            if (field.empty()) {
                fail(source, line_no, column, "empty field");
            }
            double v = 0.0;
            const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || end != field.data() + field.size()) {
                fail(source, line_no, column, "not a number: '" + std::string(field) + "'");
            }
            if (!std::isfinite(v)) {
                fail(source, line_no, column, "value must be finite");
            }
            values.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (rows == 0) {
            cols = column;
        } else if (column != cols) {
            fail(source, line_no, std::min(column, cols) + 1,
                 "expected " + std::to_string(cols) + " fields, found " + std::to_string(column));
        }
        ++rows;
    }
    if (rows == 0) {
        fail(source, line_no, 0, "no data rows");
    }
    return DataMatrix(rows, cols, std::move(values));
}

DataMatrix read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path.string() + "'");
    }
    return read_csv(in, path.string());
}

std::string format_exact(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string format_significant(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

void write_csv(std::ostream& out, const DistanceMatrix& d, int significant) {
    for (std::size_t i = 0; i < d.order(); ++i) {
        for (std::size_t j = 0; j < d.order(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_significant(d(i, j), significant);
        }
        out << '\n';
    }
}

std::string_view convention_name(SampleSpace conv) {
    return conv == SampleSpace::FullGrid ? "grid" : "upper";
}

SampleSpace parse_convention(std::string_view text) {
    if (text == "grid") {
        return SampleSpace::FullGrid;
    }
    if (text == "upper") {
        return SampleSpace::UpperTriangle;
    }
    throw DomainError("unknown sample-space convention '" + std::string(text) + "' (expected grid or upper)");
}

nlohmann::json to_json(const DistanceMatrix& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < d.order(); ++i) {
        const auto r = d.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return {{"order", d.order()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const NeighborSets& s) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& set : s.sets()) {
        nlohmann::json one = nlohmann::json::array();
        for (std::size_t j : set) {
            one.push_back(j + 1);
        }
        sets.push_back(std::move(one));
    }
    return {{"sets", std::move(sets)}, {"total", s.total()}};
}

nlohmann::json to_json(const RationalScore& s) {
    return {{"num", s.numerator}, {"den", s.denominator}, {"value", s.value()}};
}

nlohmann::json to_json(const CorrelationResult& r) {
    nlohmann::json j;
    j["rho"] = r.rho ? nlohmann::json(*r.rho) : nlohmann::json(nullptr);
    j["cov"] = r.covariance;
    j["var_m"] = r.variance_m;
    j["var_n"] = r.variance_n;
    j["convention"] = convention_name(r.convention);
    return j;
}

nlohmann::json to_json(const AdversarialResult& r) {
    const std::size_t k = r.augmented.cols();
    std::vector<double> column;
    nlohmann::json augmented = nlohmann::json::array();
    for (std::size_t i = 0; i < r.augmented.rows(); ++i) {
        const auto row = r.augmented.row(i);
        augmented.push_back(std::vector<double>(row.begin(), row.end()));
        column.push_back(r.augmented(i, k - 1));
    }
    return {{"t", r.t},
            {"column", column},
            {"spacing", r.spacing},
            {"achieved_near_total", r.achieved_near_total},
            {"original_near_total", r.original_near_total},
            {"rob_plus", to_json(r.robustness)},
            {"bound", to_json(RationalScore{r.augmented.rows(), r.original_near_total})},
            {"neighbors", to_json(r.neighbors)},
            {"augmented", std::move(augmented)}};
}

nlohmann::json to_json(const MonteCarloEstimate& e) {
    return {{"mean", e.mean}, {"standard_error", e.standard_error}, {"samples", e.samples}, {"seed", e.seed}};
}

nlohmann::json to_json(const ConvergentExpansion& e) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : e.convergents) {
        list.push_back({{"p", big_to_json(c.p)}, {"q", big_to_json(c.q)}, {"truncated", false}});
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& a : e.partial_quotients) {
        terms.push_back(big_to_json(a));
    }
    nlohmann::json j;
    j["convergents"] = std::move(list);
    j["partial_quotients"] = std::move(terms);
    j["truncated"] = e.truncated;
    j["next_denominator"] = e.next_denominator ? big_to_json(*e.next_denominator) : nlohmann::json(nullptr);
    return j;
}

} // namespace taxdist::io
