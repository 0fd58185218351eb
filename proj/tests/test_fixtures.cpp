#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include "cospec/fixtures.hpp"
#include "cospec/search.hpp"
#include "cospec/spectra.hpp"

using namespace cospec;
using Catch::Approx;

static const std::filesystem::path kFixtures = COSPEC_FIXTURE_DIR;

TEST_CASE("every named fixture loads") {
    auto all = load_fixtures(kFixtures);
    REQUIRE(all.size() == fixture_names().size());
    REQUIRE(all.at("C").order() == 4);
    REQUIRE(all.at("C").edge_count() == 4);   // the four-cycle base
    REQUIRE(all.at("D").order() == 4);
    REQUIRE(all.at("D").edge_count() == 3);   // the path base
    REQUIRE(all.at("A1").order() == 5);
    REQUIRE(are_isomorphic(all.at("A1"), friendship(2)));
    REQUIRE(are_isomorphic(all.at("C"), cycle(4)));
    REQUIRE(are_isomorphic(all.at("D"), path(4)));
    REQUIRE(are_isomorphic(all.at("E1"), path(5)));
    for (int k : {2, 3, 4}) REQUIRE(are_isomorphic(all.at("F" + std::to_string(k)), friendship(k)));
}

TEST_CASE("catalog eigenvalues match their quoted five-digit values") {
    auto all = load_fixtures(kFixtures);
    const std::pair<const char*, double> expected[] = {
        {"A2", 1.73205}, {"A3", 1.50694}, {"A4", 1.33988}, {"B1", 1.19799}, {"B2", 1.28917}};
    for (const auto& [name, l2] : expected)
        REQUIRE(second_largest(all.at(name)) == Approx(l2).margin(tol::fixture));
    REQUIRE(second_largest(disjoint_union(all.at("C"), complete(3))) ==
            Approx(2.0).margin(tol::fixture));
    REQUIRE(second_largest(disjoint_union(all.at("D"), complete(3))) ==
            Approx(1.61803).margin(tol::fixture));
}

TEST_CASE("fixture error paths") {
    REQUIRE_THROWS_AS(load_fixtures("/nonexistent/dir"), fixture_error);
    REQUIRE_THROWS_AS(load_fixture(kFixtures, "Z99"), fixture_error);

    auto tmp = std::filesystem::temp_directory_path() / "cospec_fixture_test";
    std::filesystem::create_directories(tmp);
    {
        std::ofstream out(tmp / "bad.g6");
        out << "# corrupted on purpose\n";
        out << "B\x01\x02\n";
    }
    REQUIRE_THROWS_AS(load_fixture(tmp, "bad"), fixture_error);
    {
        std::ofstream out(tmp / "empty.g6");
        out << "# nothing else\n";
    }
    REQUIRE_THROWS_AS(load_fixture(tmp, "empty"), fixture_error);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("fixture directory resolution order") {
    REQUIRE(fixture_dir("explicit") == std::filesystem::path("explicit"));
    setenv("COSPEC_FIXTURES", "/from/env", 1);
    REQUIRE(fixture_dir() == std::filesystem::path("/from/env"));
    unsetenv("COSPEC_FIXTURES");
    REQUIRE(fixture_dir() == std::filesystem::path("fixtures"));
}

TEST_CASE("duplicate-neighborhood corpus check over the fixture catalog") {
    auto all = load_fixtures(kFixtures);
    int twins = 0;
    for (const auto& [name, g] : all)
        if (has_duplicate_open_neighborhood(g)) {
            REQUIRE(char_poly(g).coeffs[0] == 0);
            ++twins;
        }
    REQUIRE(twins > 0);  // C itself (the 4-cycle) has twin vertices
}
