#include <catch2/catch_amalgamated.hpp>

#include "cospec/serialize.hpp"

using namespace cospec;

TEST_CASE("spectrum json shape") {
    auto j = spectrum_to_json(eigenvalues(complete(2)));
    REQUIRE(j["values"].size() == 2);
    REQUIRE(j["groups"].size() == 2);
    REQUIRE(j["groups"][0][0].get<double>() == Catch::Approx(1.0));
    REQUIRE(j["groups"][0][1].get<int>() == 1);
}

TEST_CASE("charpoly json uses decimal strings") {
    auto j = charpoly_to_json(char_poly(friendship(2)));
    std::vector<std::string> expect{"4", "5", "-4", "-6", "0", "1"};
    REQUIRE(j.get<std::vector<std::string>>() == expect);
    // coefficients of a 31-vertex graph exceed 64-bit integers cleanly
    auto big = charpoly_to_json(char_poly(friendship(15)));
    REQUIRE(big.size() == 32);
}

TEST_CASE("search report json") {
    auto rep = cospectral_mates(disjoint_union(cycle(4), Graph(1)));
    auto j = search_report_to_json(rep);
    REQUIRE(j["mates"].size() == 1);
    REQUIRE(j["ds_within_scope"].get<bool>() == false);
    REQUIRE(j["classes_scanned"].get<std::uint64_t>() == rep.classes_scanned);
    REQUIRE(j["target_charpoly"][3].get<std::string>() == "-4");
}

TEST_CASE("count report json") {
    auto j = count_report_to_json(count_report(friendship(2)));
    REQUIRE(j["c3"].get<int>() == 2);
    REQUIRE(j["c4"].get<int>() == 0);
    REQUIRE(j["c3_star"].get<int>() == 4);
}

TEST_CASE("mates csv") {
    auto rep = cospectral_mates(disjoint_union(cycle(4), Graph(1)));
    auto csv = mates_to_csv(rep);
    REQUIRE(csv.find("canonical_g6,charpoly\n") == 0);
    REQUIRE(csv.find("0 0 0 -4 0 1") != std::string::npos);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + target + one mate
}
