#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cospec/canonical.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

/// Run the CLI with the given arguments; `stdin_text` is piped in if set.
RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd += "printf '%s\\n' '" + stdin_text + "' | ";
    cmd += std::string(COSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const std::string fx = std::string(" --fixtures ") + COSPEC_FIXTURE_DIR;

} // namespace

TEST_CASE("gen prints graph6 and validates parameters") {
    auto r = run("gen friendship 2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == cospec::graph6_encode(cospec::friendship(2)) + "\n");

    REQUIRE(run("gen cocktail_party 3").out ==
            cospec::graph6_encode(cospec::cocktail_party(3)) + "\n");

    REQUIRE(run("gen friendship 0").exit_code == 2);
    REQUIRE(run("gen dodecahedron 1").exit_code == 2);
    REQUIRE(run("frobnicate").exit_code == 2);
}

TEST_CASE("spectrum emits one json document per input graph") {
    auto g6 = cospec::graph6_encode(cospec::friendship(2));
    auto r = run("spectrum -", g6);
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    std::vector<std::string> expect{"4", "5", "-4", "-6", "0", "1"};
    REQUIRE(doc["charpoly"].get<std::vector<std::string>>() == expect);
    REQUIRE(doc["spectrum"]["values"].size() == 5);

    auto k2 = run("spectrum -", cospec::graph6_encode(cospec::complete(2)));
    auto k2doc = json::parse(k2.out);
    REQUIRE(k2doc["spectrum"]["groups"].size() == 2);

    // parse failures report the line number on stderr and exit 2
    auto bad = run("spectrum -", "!!notgraph6");
    REQUIRE(bad.exit_code == 2);
}

TEST_CASE("search finds the minimal pair and respects scope") {
    auto c4k1 = cospec::graph6_encode(
        cospec::disjoint_union(cospec::cycle(4), cospec::Graph(1)));
    auto r = run("search '" + c4k1 + "'");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    REQUIRE(doc["mates"].size() == 1);
    REQUIRE(doc["mates"][0].get<std::string>() ==
            cospec::canonical_label(cospec::star(4)).canon_g6);
    REQUIRE(doc["ds_within_scope"].get<bool>() == false);
    REQUIRE(doc["audit"].size() >= 2);

    auto f3 = cospec::graph6_encode(cospec::friendship(3));
    auto ds = json::parse(run("search '" + f3 + "'").out);
    REQUIRE(ds["mates"].empty());
    REQUIRE(ds["ds_within_scope"].get<bool>() == true);

    REQUIRE(run("--max-vertices 5 search '" + f3 + "'").exit_code == 2);
}

TEST_CASE("catalog lists the named fixtures") {
    auto r = run("--format json catalog" + fx);
    REQUIRE(r.exit_code == 0);
    auto rows = json::parse(r.out);
    REQUIRE(rows.size() == 17);  // A1..A4 B1 B2 C D C1 C5 D3 E1..E6
    bool saw_a2 = false, saw_c = false;
    for (const auto& row : rows) {
        if (row["name"] == "A2") {
            saw_a2 = true;
            REQUIRE(std::abs(row["lambda2"].get<double>() - 1.73205) < 5e-6);
        }
        if (row["name"] == "C") {
            saw_c = true;
            REQUIRE(std::abs(row["lambda2_with_k3"].get<double>() - 2.0) < 5e-6);
        }
    }
    REQUIRE(saw_a2);
    REQUIRE(saw_c);
    REQUIRE(run("catalog --fixtures /nonexistent").exit_code == 2);
}

TEST_CASE("verify runs a claims subset deterministically") {
    std::string sel =
        " verify --claims prop2.2.spectrum,lemma3.2.min-degree,lemma3.12.fixture-eigs";
    auto r = run("--format json" + fx + sel);
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    REQUIRE(doc["claims"].size() == 3);
    for (const auto& cl : doc["claims"]) REQUIRE(cl["status"] == "pass");
    REQUIRE(doc["summary"]["fail"].get<int>() == 0);
    REQUIRE(doc["timing"].size() == 3);

    // determinism: identical config gives byte-identical claims array
    auto again = json::parse(run("--format json" + fx + sel).out);
    REQUIRE(doc["claims"].dump() == again["claims"].dump());
}

TEST_CASE("verify scope gating skips the nine-vertex claims") {
    auto r = run("--format json --max-vertices 7" + fx +
                 " verify --claims ds-f4.extension,thm3.16.ds-f2");
    auto doc = json::parse(r.out);
    REQUIRE(r.exit_code == 0);  // skipped is not failed
    REQUIRE(doc["claims"][0]["id"] == "ds-f4.extension");
    REQUIRE(doc["claims"][0]["status"] == "skipped");
    REQUIRE(doc["claims"][1]["status"] == "pass");
}

TEST_CASE("verify fails with a counterexample on a corrupted fixture") {
    auto tmp = std::filesystem::temp_directory_path() / "cospec_cli_corrupt";
    std::filesystem::remove_all(tmp);
    std::filesystem::copy(COSPEC_FIXTURE_DIR, tmp);
    {
        std::ofstream out(tmp / "A2.g6");
        out << "not a graph6 line at all\x01\n";
    }
    auto r = run("--format json --fixtures " + tmp.string() +
                 " verify --claims lemma3.12.fixture-eigs,prop2.2.spectrum");
    REQUIRE(r.exit_code == 1);
    auto doc = json::parse(r.out);
    REQUIRE(doc["claims"][0]["status"] == "fail");
    REQUIRE(doc["claims"][0]["details"].get<std::string>().find("A2") != std::string::npos);
    REQUIRE(doc["claims"][1]["status"] == "pass");
    std::filesystem::remove_all(tmp);
}

TEST_CASE("verify text format prints a summary line") {
    auto r = run(fx + " verify --claims thm2.4.shape,prop3.9.d2-bound");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("2 passed, 0 failed, 0 skipped") != std::string::npos);

    auto unknown = run(fx + " verify --claims no.such.claim");
    REQUIRE(unknown.exit_code == 1);
}

TEST_CASE("verify results are independent of the worker count") {
    std::string sel = " verify --claims thm3.16.ds-f2,thm4.ds-complement-n3,sec4.minimal-pair";
    auto one = json::parse(run("--format json --workers 1" + fx + sel).out);
    auto two = json::parse(run("--format json --workers 2" + fx + sel).out);
    REQUIRE(one["claims"].dump() == two["claims"].dump());
}

TEST_CASE("gen emits DOT on request") {
    auto r = run("gen complete 3 --dot");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("graph g {") == 0);
    REQUIRE(r.out.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("spectrum handles files and multi-graph streams") {
    auto tmp = std::filesystem::temp_directory_path() / "cospec_spectrum_input.g6";
    {
        std::ofstream out(tmp);
        out << "# two graphs, one per line\n";
        out << cospec::graph6_encode(cospec::complete(3)) << "\n";
        out << "\n";
        out << cospec::graph6_encode(cospec::cycle(5)) << "\n";
    }
    auto r = run("spectrum " + tmp.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    std::filesystem::remove(tmp);

    auto missing = run("spectrum /no/such/file.g6");
    REQUIRE(missing.exit_code == 2);
}

TEST_CASE("search reads its target from stdin") {
    auto r = run("search -", cospec::graph6_encode(cospec::friendship(2)));
    REQUIRE(r.exit_code == 0);
    REQUIRE(json::parse(r.out)["mates"].empty());
}
