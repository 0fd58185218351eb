// Command-line front end: generation, spectra, cospectral-mate searches,
// the fixture catalog, and the claim-ledger verifier.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cospec/fixtures.hpp"
#include "cospec/serialize.hpp"
#include "cospec/verify.hpp"

using namespace cospec;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_usage = 2;

int cmd_gen(const std::string& family, int param, bool as_dot) {
    try {
        Graph g = [&] {
            if (family == "friendship") return friendship(param);
            if (family == "cocktail_party") return cocktail_party(param);
            if (family == "cycle") return cycle(param);
            if (family == "path") return path(param);
            if (family == "complete") return complete(param);
            if (family == "star") return star(param);
            throw std::invalid_argument("unknown family: " + family);
        }();
        if (as_dot)
            std::cout << to_dot(g);
        else
            std::cout << graph6_encode(g) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        std::cerr << "gen: " << e.what() << "\n";
        return exit_usage;
    }
}

/// Read graph6 lines ('#' comments and blanks ignored) from a file or stdin.
std::vector<std::pair<int, std::string>> read_graph_lines(const std::string& path) {
    std::vector<std::pair<int, std::string>> lines;
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path);
        in = &file;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.emplace_back(lineno, line);
    }
    return lines;
}

int cmd_spectrum(const std::string& input) {
    std::vector<std::pair<int, std::string>> lines;
    try {
        lines = read_graph_lines(input);
    } catch (const std::exception& e) {
        std::cerr << "spectrum: " << e.what() << "\n";
        return exit_usage;
    }
    for (const auto& [lineno, text] : lines) {
        Graph g(1);
        try {
            g = graph6_decode(text);
        } catch (const graph6_error& e) {
            std::cerr << "spectrum: line " << lineno << ": " << e.what() << "\n";
            return exit_usage;
        }
        json out = {{"graph6", text},
                    {"charpoly", charpoly_to_json(char_poly(g))},
                    {"spectrum", spectrum_to_json(eigenvalues(g))},
                    {"main_angles", main_angles_to_json(main_angles(g))}};
        std::cout << out.dump() << "\n";
    }
    return exit_ok;
}

int cmd_search(const std::string& target_arg, const RunConfig& cfg) {
    Graph target(1);
    try {
        std::string g6 = target_arg;
        if (g6 == "-") {
            auto lines = read_graph_lines("-");
            if (lines.empty()) throw std::runtime_error("no graph on standard input");
            g6 = lines.front().second;
        }
        target = graph6_decode(g6);
    } catch (const std::exception& e) {
        std::cerr << "search: " << e.what() << "\n";
        return exit_usage;
    }
    if (target.order() > cfg.max_vertices) {
        std::cerr << "search: target order " << target.order() << " exceeds --max-vertices "
                  << cfg.max_vertices << "\n";
        return exit_usage;
    }
    SearchOptions so;
    so.workers = cfg.workers;
    auto rep = certify_ds(target, so);
    if (cfg.format == "csv")
        std::cout << mates_to_csv(rep);
    else
        std::cout << search_report_to_json(rep).dump(2) << "\n";
    return exit_ok;
}

int cmd_catalog(const RunConfig& cfg) {
    auto dir = fixture_dir(cfg.fixture_path);
    std::vector<std::string> names;
    for (int i = 1; i <= 4; ++i) names.push_back("A" + std::to_string(i));
    names.insert(names.end(), {"B1", "B2", "C", "D", "C1", "C5", "D3"});
    for (int i = 1; i <= 6; ++i) names.push_back("E" + std::to_string(i));
    json rows = json::array();
    try {
        for (const auto& name : names) {
            Graph g = load_fixture(dir, name);
            auto v = classify_forbidden(g, cfg.tolerance_eig);
            json row = {{"name", name},
                        {"graph6", graph6_encode(g)},
                        {"lambda2", v.lambda2},
                        {"eigs_below_minus1", v.eigs_below_minus1},
                        {"verdict", to_string(v.verdict)}};
            if (name == "C" || name == "D")
                row["lambda2_with_k3"] = second_largest(disjoint_union(g, complete(3)));
            rows.push_back(row);
        }
    } catch (const fixture_error& e) {
        std::cerr << "catalog: " << e.what() << "\n";
        return exit_usage;
    }
    if (cfg.format == "json") {
        std::cout << rows.dump(2) << "\n";
        return exit_ok;
    }
    std::printf("%-5s %-14s %10s %8s  %-20s %s\n", "name", "graph6", "lambda2", "below-1",
                "verdict", "with K3");
    for (const auto& row : rows) {
        std::string with_k3;
        if (row.contains("lambda2_with_k3")) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.5f", row["lambda2_with_k3"].get<double>());
            with_k3 = buf;
        }
        std::printf("%-5s %-14s %10.5f %8d  %-20s %s\n", row["name"].get<std::string>().c_str(),
                    row["graph6"].get<std::string>().c_str(), row["lambda2"].get<double>(),
                    row["eigs_below_minus1"].get<int>(),
                    row["verdict"].get<std::string>().c_str(), with_k3.c_str());
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
    auto results = run_claims(cfg);
    int failed = 0, passed = 0, skipped = 0;
    for (const auto& r : results) {
        if (r.status == ClaimStatus::fail) ++failed;
        if (r.status == ClaimStatus::pass) ++passed;
        if (r.status == ClaimStatus::skipped) ++skipped;
    }
    if (cfg.format == "json") {
        json claims = json::array();
        json timing = json::object();
        for (const auto& r : results) {
            claims.push_back(
                {{"id", r.claim_id}, {"status", to_string(r.status)}, {"details", r.details}});
            timing[r.claim_id] = r.elapsed_seconds;
        }
        json doc = {{"claims", claims},
                    {"summary", {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}},
                    {"timing", timing}};
        std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "claim_id,status,details\n";
        for (const auto& r : results) {
            std::string details = r.details;
            for (auto& ch : details)
                if (ch == ',' || ch == '\n') ch = ';';
            std::cout << r.claim_id << "," << to_string(r.status) << "," << details << "\n";
        }
    } else {
        for (const auto& r : results)
            std::printf("[%-7s] %-26s %7.2fs  %s\n", to_string(r.status), r.claim_id.c_str(),
                        r.elapsed_seconds, r.details.c_str());
        std::printf("%d passed, %d failed, %d skipped\n", passed, failed, skipped);
    }
    return failed == 0 ? exit_ok : exit_claim_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral analysis of graphs at friendship-graph scale"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too

    RunConfig cfg;
    app.add_option("--max-vertices", cfg.max_vertices, "search scope cap (1..11)")
        ->check(CLI::Range(1, 11));
    app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--fixtures", cfg.fixture_path, "fixture directory (default $COSPEC_FIXTURES or ./fixtures)");
    app.add_option("--tolerance-eig", cfg.tolerance_eig, "eigenvalue comparison tolerance");

    std::string family, g6, input = "-";
    int param = 0;
    bool as_dot = false;
    std::string claims_csv;

    auto* gen = app.add_subcommand("gen", "print a named graph as graph6");
    gen->add_option("family", family, "friendship|cocktail_party|cycle|path|complete|star")
        ->required();
    gen->add_option("param", param, "size parameter")->required();
    gen->add_flag("--dot", as_dot, "emit DOT instead of graph6");

    auto* spectrum = app.add_subcommand("spectrum", "charpoly + spectrum + main angles per input graph");
    spectrum->add_option("input", input, "graph6 file, or - for stdin");

    auto* search = app.add_subcommand("search", "exhaustive cospectral-mate search");
    search->add_option("target", g6, "target graph in graph6, or - for stdin")->required();

    auto* verify = app.add_subcommand("verify", "replay the desk-checkable claim ledger");
    verify->add_option("--claims", claims_csv, "comma-separated claim ids to run");

    app.add_subcommand("catalog", "list the named case fixtures with their eigenvalue data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (!claims_csv.empty()) {
        std::stringstream ss(claims_csv);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) cfg.claim_filter.push_back(id);
    }

    try {
        if (app.got_subcommand("gen")) return cmd_gen(family, param, as_dot);
        if (app.got_subcommand("spectrum")) return cmd_spectrum(input);
        if (app.got_subcommand("search")) return cmd_search(g6, cfg);
        if (app.got_subcommand("verify")) return cmd_verify(cfg);
        if (app.got_subcommand("catalog")) return cmd_catalog(cfg);
    } catch (const std::exception& e) {
        std::cerr << "cospec: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
