#include <catch2/catch_amalgamated.hpp>

#include "plsphere/classify.hpp"

using namespace plsphere;

namespace {

ClassifyOptions fast_opts() {
    ClassifyOptions opt;
    opt.measure_wall = false;
    return opt;
}

std::vector<NamedComplex> small_spheres() {
    return {{"boundary-simplex-2", simplex_boundary(2)},
            {"boundary-simplex-3", simplex_boundary(3)},
            {"cross-3", cross_polytope_boundary(3)},
            {"susp-boundary-simplex-2", suspension(simplex_boundary(2))}};
}

std::vector<std::string> dump_lines(const std::vector<ClassifyResult>& results,
                                    const ClassifyOptions& opt) {
    std::vector<std::string> out;
    for (const ClassifyResult& res : results)
        for (const json& j : ledger_lines(res, opt)) out.push_back(j.dump());
    return out;
}

}  // namespace

TEST_CASE("class lattice tables") {
    REQUIRE(class_names() ==
            std::vector<std::string>{"sphere", "shellable", "VD", "shrinkable",
                                     "strongVD", "strongShrink", "strongED",
                                     "lefschetz"});
    REQUIRE(containment_arrows().size() == 10);
    for (const auto& [x, y] : containment_arrows()) {
        REQUIRE(std::count(class_names().begin(), class_names().end(), x) == 1);
        REQUIRE(std::count(class_names().begin(), class_names().end(), y) == 1);
    }
}

TEST_CASE("classify a sphere: all classes yes, no violations") {
    ClassifyResult res =
        classify_complex(cross_polytope_boundary(3), "cross-3", fast_opts());
    REQUIRE(res.name == "cross-3");
    REQUIRE(res.records.size() == class_names().size());
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        REQUIRE(res.records[i].cls == class_names()[i]);
        REQUIRE(res.records[i].verdict == "yes");
        REQUIRE_FALSE(res.records[i].certificate.is_null());
    }
    REQUIRE(res.violations.empty());
    REQUIRE(res.records[0].certificate["kind"] == "shelling");
    REQUIRE(res.records[2].certificate["kind"] == "shedding");
    REQUIRE(res.records[6].certificate["kind"] == "two-sphere");
    REQUIRE(res.records[7].certificate["field"] == "gf");
    REQUIRE(res.records[7].certificate["p"] == 2147483647ull);
}

TEST_CASE("classify a ball: sphere no, everything else skipped") {
    ClassifyResult res = classify_complex(simplex(2), "simplex-2", fast_opts());
    REQUIRE(res.records.size() == 8);
    REQUIRE(res.records[0].verdict == "no");
    REQUIRE(res.records[0].obstruction == "non-empty boundary");
    for (std::size_t i = 1; i < res.records.size(); ++i) {
        REQUIRE(res.records[i].verdict == "skipped");
        REQUIRE(res.records[i].obstruction == "input is not a certified sphere");
        REQUIRE(res.records[i].certificate.is_null());
    }
    REQUIRE(res.violations.empty());
}

TEST_CASE("classify with rational promotion attaches exact data") {
    ClassifyOptions opt = fast_opts();
    opt.rational = true;
    ClassifyResult res =
        classify_complex(suspension(simplex_boundary(2)), "bipyramid", opt);
    const ClassRecord& lef = res.records.back();
    REQUIRE(lef.cls == "lefschetz");
    REQUIRE(lef.verdict == "yes");
    REQUIRE(lef.certificate["rational"]["ok"] == true);
    REQUIRE(lef.certificate["rational"]["dims"] == lef.certificate["dims"]);
    REQUIRE(lef.certificate["rational"]["ranks"] == lef.certificate["ranks"]);
}

TEST_CASE("zero budget with cold caches: searches unknown, lefschetz still decides") {
    clear_certify_cache();
    clear_decompose_caches();
    ClassifyOptions opt = fast_opts();
    opt.budget = 0;
    ClassifyResult res =
        classify_complex(cross_polytope_boundary(3), "cross-3", opt);
    for (std::size_t i = 0; i + 1 < res.records.size(); ++i)
        REQUIRE(res.records[i].verdict == "unknown");
    REQUIRE(res.records.back().verdict == "yes");  // witness search is budget-free
    REQUIRE(res.violations.empty());
}

TEST_CASE("ledger line key order and content") {
    ClassifyOptions opt = fast_opts();
    opt.budget = 12345;
    opt.seed = 7;
    ClassifyResult res = classify_complex(simplex_boundary(2), "tri", opt);
    json line = ledger_line(res.name, res.records[0], opt);
    std::vector<std::string> keys;
    for (auto it = line.begin(); it != line.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"name", "class", "verdict",
                                             "certificate", "budget", "seed",
                                             "wall_ms"});
    REQUIRE(line["name"] == "tri");
    REQUIRE(line["class"] == "sphere");
    REQUIRE(line["budget"] == 12345);
    REQUIRE(line["seed"] == 7);
    REQUIRE(line["wall_ms"] == 0);

    // records without a certificate omit the key entirely
    ClassifyResult ball = classify_complex(simplex(1), "edge", opt);
    json skipped = ledger_line(ball.name, ball.records[3], opt);
    std::vector<std::string> skeys;
    for (auto it = skipped.begin(); it != skipped.end(); ++it) skeys.push_back(it.key());
    REQUIRE(skeys == std::vector<std::string>{"name", "class", "verdict", "budget",
                                              "seed", "wall_ms"});
}

TEST_CASE("classify_result_to_json shape") {
    ClassifyOptions opt = fast_opts();
    json j = classify_result_to_json(
        classify_complex(simplex_boundary(2), "tri", opt), opt);
    REQUIRE(j["name"] == "tri");
    REQUIRE(j["classes"].size() == 8);
    REQUIRE(j["classes"][0]["class"] == "sphere");
    REQUIRE(j["classes"][0]["verdict"] == "yes");
    REQUIRE(j["budget"] == opt.budget);
    REQUIRE(j["seed"] == 0);
    REQUIRE(j["violations"] == json::array());
}

TEST_CASE("ledger records are byte-identical across runs and worker counts") {
    std::vector<NamedComplex> cat = small_spheres();
    ClassifyOptions opt = fast_opts();

    std::vector<std::string> seq1 = dump_lines(classify_catalog(cat, opt), opt);
    std::vector<std::string> seq2 = dump_lines(classify_catalog(cat, opt), opt);

    ClassifyOptions par = opt;
    par.jobs = 4;
    std::vector<std::string> par4 = dump_lines(classify_catalog(cat, par), par);

    REQUIRE(seq1.size() == cat.size() * class_names().size());
    REQUIRE(seq1 == seq2);
    REQUIRE(seq1 == par4);
}

TEST_CASE("hunt instance stream") {
    std::vector<NamedComplex> base = hunt_instances(0, 0);
    REQUIRE(base.size() == catalog_spheres().size());
    for (std::size_t i = 0; i < base.size(); ++i)
        REQUIRE(base[i].name == catalog_spheres()[i].name);

    std::vector<NamedComplex> a = hunt_instances(42, 6);
    std::vector<NamedComplex> b = hunt_instances(42, 6);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() >= base.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].name == b[i].name);
        REQUIRE(a[i].complex == b[i].complex);
        // desk-scale cap
        REQUIRE((a[i].complex.vertices().size() <= 11 || a[i].complex.dim() <= 2));
    }
    for (std::size_t i = base.size(); i < a.size(); ++i)
        REQUIRE(a[i].name.substr(0, 5) == "rand-");
}

TEST_CASE("hunt run, ledger replay, and decided-name matching") {
    std::vector<NamedComplex> cat = small_spheres();
    ClassifyOptions opt = fast_opts();

    HuntResult first = run_hunt(cat, opt, {});
    REQUIRE(first.candidates == 0);
    REQUIRE(first.decided == static_cast<long>(cat.size()));
    REQUIRE(first.unknowns == 0);
    REQUIRE(first.skipped == 0);
    REQUIRE(first.records.size() == cat.size());
    std::vector<json> ledger;
    for (const HuntRecord& rec : first.records) {
        REQUIRE(rec.vd_verdict == "yes");
        REQUIRE(rec.sed_verdict == "yes");
        REQUIRE_FALSE(rec.candidate);
        REQUIRE(rec.lines.size() == 2);
        REQUIRE(rec.lines[0]["class"] == "VD");
        REQUIRE(rec.lines[1]["class"] == "strongED");
        for (const json& l : rec.lines) ledger.push_back(l);
    }

    // a matching ledger makes the replay skip every decided instance
    std::set<std::string> decided = hunt_decided_names(ledger, opt);
    REQUIRE(decided.size() == cat.size());
    HuntResult replay = run_hunt(cat, opt, decided);
    REQUIRE(replay.skipped == static_cast<long>(cat.size()));
    REQUIRE(replay.records.empty());

    // records made under a different budget or seed do not count
    ClassifyOptions other = opt;
    other.budget = opt.budget + 1;
    REQUIRE(hunt_decided_names(ledger, other).empty());
    other = opt;
    other.seed = 99;
    REQUIRE(hunt_decided_names(ledger, other).empty());

    // one decided class alone is not enough
    std::vector<json> vd_only(ledger.begin(), ledger.begin() + 1);
    REQUIRE(hunt_decided_names(vd_only, opt).empty());
}

TEST_CASE("catalog lookup by name") {
    std::vector<NamedComplex> cat = catalog_spheres();
    const NamedComplex* hit = catalog_find(cat, "cross-3");
    REQUIRE(hit != nullptr);
    REQUIRE(hit->complex == cross_polytope_boundary(3));
    REQUIRE(catalog_find(cat, "no-such-name") == nullptr);
}
