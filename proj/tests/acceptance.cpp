// Acceptance suite: replays every desk-checkable claim with its pinned
// tolerance and prints one line per criterion. Exit status is nonzero if
// any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "cospec/verify.hpp"

using namespace cospec;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claim_ids;
    double budget_seconds;  // 0 = no stated budget
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table = {
        {1, "closed-form friendship charpoly, n=1..40", {"prop2.2.charpoly"}, 10},
        {2, "closed-form friendship spectrum, n=1..31", {"prop2.2.spectrum"}, 0},
        {3, "complement spectrum of CP(n) u K1, n=3..15", {"sec4.complement-spectrum"}, 5},
        {4,
         "DS of F1..F4 by exhaustive search + 9-vertex class count",
         {"thm3.16.ds-f1", "thm3.16.ds-f2", "thm3.16.ds-f3", "ds-f4.extension", "enum.count-9"},
         600},
        {5,
         "minimal cospectral pair and DS complements",
         {"sec4.minimal-pair", "thm4.ds-complement-n3", "thm4.ds-complement-n4"},
         0},
        {6, "length-5 walk identity on all classes up to 7 vertices", {"lemma3.4.exhaustive7"},
         120},
        {7, "spectral bound for C4-free graphs with equality cases", {"thm-niki.bound7"}, 0},
        {8, "quoted second eigenvalues of the case fixtures", {"lemma3.12.fixture-eigs"}, 0},
        {9,
         "attachment-case completeness over the C and D bases",
         {"thm3.13.case-c", "thm3.13.case-d"},
         0},
        {10, "main-angle complement formula on 10^4 random graphs", {"sec4.main-angle-formula"},
         0},
        {11, "candidate quartic reproduces the complement spectrum", {"sec4.quartic-lemma"}, 0},
        {12,
         "structural facts on F_n (degrees, shape, hole scan)",
         {"lemma3.2.min-degree", "prop3.9.d2-bound", "thm2.4.shape", "prop2.9.perfect-scan"},
         0},
        {13, "non-adjacent twins force a zero constant term", {"lemma-lxy.nullspace"}, 0},
    };
    return table;
}

} // namespace

int main() {
    RunConfig cfg;
    cfg.max_vertices = 9;
    unsigned hw = std::thread::hardware_concurrency();
    cfg.workers = hw >= 2 ? 2 : 1;
#ifdef COSPEC_FIXTURE_DIR
    cfg.fixture_path = COSPEC_FIXTURE_DIR;
#endif

    auto results = run_claims(cfg);
    std::map<std::string, const ClaimResult*> by_id;
    for (const auto& r : results) by_id[r.claim_id] = &r;

    int failures = 0;
    for (const auto& crit : criteria()) {
        bool pass = true;
        double elapsed = 0;
        std::string why;
        for (const auto& id : crit.claim_ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                pass = false;
                why = id + " missing from the ledger";
                continue;
            }
            elapsed += it->second->elapsed_seconds;
            if (it->second->status != ClaimStatus::pass) {
                pass = false;
                if (why.empty()) why = id + ": " + it->second->details;
            }
        }
        if (pass && crit.budget_seconds > 0 && elapsed > crit.budget_seconds) {
            pass = false;
            why = "runtime " + std::to_string(elapsed) + "s exceeds the " +
                  std::to_string(crit.budget_seconds) + "s budget";
        }
        std::printf("[%s] criterion %2d (%.2fs): %s%s%s\n", pass ? "PASS" : "FAIL", crit.number,
                    elapsed, crit.title.c_str(), pass ? "" : " -- ", pass ? "" : why.c_str());
        failures += !pass;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria().size());
    return failures == 0 ? 0 : 1;
}
