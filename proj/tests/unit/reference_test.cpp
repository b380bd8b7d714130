#include "doctest.h"

#include "taxdist/io.hpp"
#include "taxdist/reference.hpp"

using namespace taxdist;

namespace {

DataMatrix fixture(const std::string& name) {
    return io::read_csv_file(std::string(TAXDIST_FIXTURES_DIR) + "/" + name);
}

} // namespace

TEST_SUITE("reference") {

TEST_CASE("fixtures hold the embedded data") {
    CHECK(fixture("triangle_with_center.csv") == reference::triangle_with_center());
    CHECK(fixture("triangle.csv") == reference::triangle());
    CHECK(fixture("square_with_center.csv") == reference::square_with_center());
    CHECK(fixture("flipping_pair.csv") == reference::flipping_pair());
    CHECK(fixture("flipping_pair_first_column.csv") == DataMatrix::from_rows({{2}, {5}, {1}}));
    CHECK(fixture("unit_corner.csv") == reference::unit_corner());
    CHECK(fixture("line_three.csv") == reference::line_three());
    CHECK(fixture("line_three_lifted.csv") == reference::line_three_lifted());
}

TEST_CASE("built-in checks pass") {
    for (const auto& c : reference::run_checks()) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}

}
