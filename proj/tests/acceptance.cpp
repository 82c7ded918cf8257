// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances (budgets, time limits, trial counts, seeds) are
// pinned here in code.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "plsphere/suites.hpp"

using namespace plsphere;
using clk = std::chrono::steady_clock;

namespace {

constexpr long long kBudget = 1000000;
constexpr uint64_t kSeed = 0;
constexpr uint64_t kFieldP = 2147483647ull;
constexpr int kTrials = 5;
constexpr int kHuntExtra = 12;

int failures = 0;

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void report(int idx, const std::string& name, bool pass, const std::string& stats,
            double secs, double limit_secs) {
    if (!pass) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s", pass ? "PASS" : "FAIL", idx, name.c_str(),
                stats.c_str(), secs);
    if (limit_secs > 0) std::printf("; limit %.0f s", limit_secs);
    std::printf(")\n");
    std::fflush(stdout);
}

// Run a library property suite as one criterion, with an optional wall
// clock limit on top of the suite's own pass flag.
void suite_criterion(int idx, const SuiteReport& rep, double secs,
                     double limit_secs = 0) {
    bool pass = rep.pass && (limit_secs <= 0 || secs < limit_secs);
    std::string stats;
    for (const auto& [k, v] : rep.stats)
        stats += (stats.empty() ? "" : ", ") + k + " " + std::to_string(v);
    if (!rep.pass)
        for (const std::string& line : rep.lines)
            if (line.rfind("FAIL", 0) == 0) stats += "; " + line;
    report(idx, rep.name, pass, stats, secs, limit_secs);
}

std::vector<std::string> ledger_dump(const std::vector<NamedComplex>& cat,
                                     const ClassifyOptions& opt) {
    std::vector<std::string> out;
    for (const ClassifyResult& res : classify_catalog(cat, opt))
        for (const json& j : ledger_lines(res, opt)) out.push_back(j.dump());
    return out;
}

}  // namespace

int main() {
    // 1. f/h/g calculus on every catalog sphere: exact round trip and
    //    exact h-symmetry, under five seconds total.
    {
        auto t0 = clk::now();
        long spheres = 0;
        bool ok = true;
        for (const NamedComplex& nc : catalog_spheres()) {
            FHGVectors v = fhg_vectors(nc.complex);
            if (f_to_h(v.f, v.d) != v.h || h_to_f(v.h, v.d) != v.f) ok = false;
            if (!dehn_sommerville_holds(v)) ok = false;
            ++spheres;
        }
        double secs = seconds_since(t0);
        report(1, "vector-calculus", ok && spheres > 0 && secs < 5.0,
               "spheres " + std::to_string(spheres) +
                   ", f<->h round trip exact, h-symmetry exact",
               secs, 5.0);
    }

    // 2. Contraction conditions on every edge of every catalog sphere with
    //    at most ten vertices: relational contract holds, four-way
    //    agreement whenever the double deletion is pure, at least 95%
    //    of edges fully decided under the pinned budget.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_contraction_equivalence(kBudget);
        suite_criterion(2, rep, seconds_since(t0), 300.0);
    }

    // 3. Shedding vertices of catalog vertex-decomposable balls lie on the
    //    boundary and deletions never certify as non-balls.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_shedding_boundary(kBudget);
        suite_criterion(3, rep, seconds_since(t0));
    }

    // 4. At least twenty catalog vertex-decomposable balls: the cone over
    //    the boundary closes each into a sphere whose explicit order
    //    (apex, shedding order) validates as a shrinking order, verdict
    //    yes with no unknown, inside two minutes.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_cone_shrinking(kBudget);
        suite_criterion(4, rep, seconds_since(t0), 120.0);
    }

    // 5. Strongly shrinkable catalog spheres are strongly
    //    edge-decomposable, and the contraction identities behind the
    //    implication hold exactly on the certificate orders.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_strong_implication(kBudget);
        suite_criterion(5, rep, seconds_since(t0));
    }

    // 6. Every enumerated shedding order (up to fifty per instance) of
    //    every vertex-decomposable 2- and 3-sphere in the catalog is a
    //    strong shedding order.  Zero violations.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_low_dim_strong_orders(kBudget, 50);
        suite_criterion(6, rep, seconds_since(t0));
    }

    // 7. Every strongly edge-decomposable catalog sphere with at most ten
    //    vertices yields a Lefschetz witness over GF(2147483647) within
    //    five trials at seed zero, and the witness re-verifies over the
    //    exact rationals with identical dims and ranks, inside five
    //    minutes.
    {
        auto t0 = clk::now();
        SuiteReport rep = suite_lefschetz_witness(kBudget, kTrials, kSeed, kFieldP);
        suite_criterion(7, rep, seconds_since(t0), 300.0);
    }

    // 8. Determinism: classifying the full catalog with a fixed (budget,
    //    seed) and timing suppressed produces byte-identical ledger
    //    records across two sequential runs and across one worker vs four.
    {
        auto t0 = clk::now();
        std::vector<NamedComplex> cat = catalog_spheres();
        for (const NamedComplex& nc : catalog_balls()) cat.push_back(nc);
        ClassifyOptions opt;
        opt.budget = kBudget;
        opt.seed = kSeed;
        opt.measure_wall = false;
        std::vector<std::string> a = ledger_dump(cat, opt);
        std::vector<std::string> b = ledger_dump(cat, opt);
        ClassifyOptions par = opt;
        par.jobs = 4;
        std::vector<std::string> c = ledger_dump(cat, par);
        bool ok = !a.empty() && a == b && a == c;
        report(8, "ledger-determinism", ok,
               "instances " + std::to_string(cat.size()) + ", records " +
                   std::to_string(a.size()) + ", rerun " +
                   (a == b ? "identical" : "DIFFERS") + ", jobs 1 vs 4 " +
                   (a == c ? "identical" : "DIFFERS"),
               seconds_since(t0), 0);
    }

    // 9. The default counterexample hunt (catalog plus twelve seeded
    //    suspensions/subdivisions) finishes with zero candidate records.
    {
        auto t0 = clk::now();
        ClassifyOptions opt;
        opt.budget = kBudget;
        opt.seed = kSeed;
        opt.measure_wall = false;
        HuntResult hr = run_hunt(hunt_instances(kSeed, kHuntExtra), opt, {});
        report(9, "counterexample-hunt", hr.candidates == 0,
               "instances " + std::to_string(hr.records.size()) + ", candidates " +
                   std::to_string(hr.candidates) + ", decided " +
                   std::to_string(hr.decided) + ", unknowns " +
                   std::to_string(hr.unknowns),
               seconds_since(t0), 0);
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
