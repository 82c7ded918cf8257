#pragma once

// Batch classification against the class lattice, the JSON-lines results
// ledger, and the counterexample hunt (vertex-decomposable but not
// strongly edge-decomposable).
//
// Every class decision gets a fresh budget, and every search is
// deterministic, so for fixed (complex, budget, seed) the ledger records
// are byte-identical across runs and across worker counts: records carry
// the budget limit rather than the (cache-warmth-dependent) spent count,
// and wall_ms is the only non-deterministic field, so it is last and can
// be suppressed.

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "plsphere/catalog.hpp"

namespace plsphere {

struct ClassifyOptions {
    long long budget = 1000000;
    uint64_t seed = 0;
    uint64_t field_p = 2147483647ull;
    bool rational = false;
    int trials = 5;
    int jobs = 1;
    bool measure_wall = true;
};

inline const std::vector<std::string>& class_names() {
    static const std::vector<std::string> names{
        "sphere",   "shellable",   "VD",       "shrinkable",
        "strongVD", "strongShrink", "strongED", "lefschetz"};
    return names;
}

// Solid containment arrows of the class lattice, restricted to the
// measured classes: X ⊂ Y means verdict(X) = yes forbids verdict(Y) = no.
inline const std::vector<std::pair<std::string, std::string>>& containment_arrows() {
    static const std::vector<std::pair<std::string, std::string>> arrows{
        {"shellable", "sphere"},      {"shrinkable", "sphere"},
        {"VD", "shellable"},          {"VD", "shrinkable"},
        {"strongVD", "VD"},           {"strongVD", "strongShrink"},
        {"strongShrink", "strongED"}, {"strongShrink", "shrinkable"},
        {"strongED", "sphere"},       {"strongED", "lefschetz"},
    };
    return arrows;
}

struct ClassRecord {
    std::string cls;
    std::string verdict;  // yes | no | unknown | skipped
    json certificate;     // null unless verdict == yes
    std::string obstruction;
    long long budget_spent = 0;
    long long wall_ms = 0;
};

struct ClassifyResult {
    std::string name;
    std::vector<ClassRecord> records;
    std::vector<std::string> violations;
};

namespace detail {

template <class Fn>
ClassRecord timed_record(const std::string& cls, bool measure_wall, const Fn& fn) {
    ClassRecord rec;
    rec.cls = cls;
    auto t0 = std::chrono::steady_clock::now();
    fn(rec);
    auto t1 = std::chrono::steady_clock::now();
    if (measure_wall)
        rec.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rec;
}

template <class Cert, class CertToJson>
void fill_from_tristate(ClassRecord& rec, const TriState<Cert>& r,
                        const CertToJson& to_json) {
    rec.verdict = verdict_name(r.verdict);
    if (r.certificate) rec.certificate = to_json(*r.certificate);
    rec.obstruction = r.obstruction;
    rec.budget_spent = r.budget_spent;
}

}  // namespace detail

inline ClassRecord lefschetz_record(const Complex& c, const ClassifyOptions& opt) {
    return detail::timed_record("lefschetz", opt.measure_wall, [&](ClassRecord& rec) {
        std::optional<LefschetzWitness> w;
        try {
            w = strong_lefschetz_witness(c, opt.field_p, opt.trials, opt.seed);
        } catch (const Error& e) {
            rec.verdict = "unknown";
            rec.obstruction = e.what();
            return;
        }
        if (!w) {
            rec.verdict = "unknown";
            rec.obstruction = "no witness found in " + std::to_string(opt.trials) +
                              " trials (not a disproof)";
            return;
        }
        json cert = witness_to_json(*w);
        if (opt.rational) {
            RationalCheck rc = rational_verify(c, *w);
            if (!rc.ok) {
                rec.verdict = "unknown";
                rec.obstruction = "rational verification failed: " + rc.detail;
                return;
            }
            json r;
            r["ok"] = true;
            r["dims"] = rc.dims;
            r["ranks"] = rc.ranks;
            cert["rational"] = r;
        }
        rec.verdict = "yes";
        rec.certificate = std::move(cert);
    });
}

inline ClassifyResult classify_complex(const Complex& c, const std::string& name,
                                       const ClassifyOptions& opt) {
    ClassifyResult out;
    out.name = name;

    out.records.push_back(detail::timed_record("sphere", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, certify_sphere(c, b), shelling_to_json);
    }));

    const bool is_sphere_no = out.records.front().verdict == "no";
    if (is_sphere_no) {
        for (std::size_t i = 1; i < class_names().size(); ++i) {
            ClassRecord rec;
            rec.cls = class_names()[i];
            rec.verdict = "skipped";
            rec.obstruction = "input is not a certified sphere";
            out.records.push_back(std::move(rec));
        }
        return out;
    }

    out.records.push_back(detail::timed_record("shellable", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, shelling_search(c, b), shelling_to_json);
    }));
    out.records.push_back(detail::timed_record("VD", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, is_vertex_decomposable(c, b), shedding_to_json);
    }));
    out.records.push_back(detail::timed_record("shrinkable", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, find_shrinking_order(c, b), shrinking_to_json);
    }));
    out.records.push_back(detail::timed_record("strongVD", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, is_strongly_vertex_decomposable(c, b),
                                   [](const StrongCertPtr& p) { return strong_to_json(*p); });
    }));
    out.records.push_back(detail::timed_record("strongShrink", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, is_strongly_shrinkable(c, b),
                                   [](const StrongCertPtr& p) { return strong_to_json(*p); });
    }));
    out.records.push_back(detail::timed_record("strongED", opt.measure_wall, [&](ClassRecord& rec) {
        Budget b(opt.budget);
        detail::fill_from_tristate(rec, is_strongly_edge_decomposable(c, b),
                                   [](const StrongCertPtr& p) { return strong_to_json(*p); });
    }));
    out.records.push_back(lefschetz_record(c, opt));

    auto verdict_of = [&](const std::string& cls) -> std::string {
        for (const ClassRecord& r : out.records)
            if (r.cls == cls) return r.verdict;
        return "";
    };
    for (const auto& [x, y] : containment_arrows()) {
        if (verdict_of(x) == "yes" && verdict_of(y) == "no")
            out.violations.push_back("containment violated: " + x + "=yes but " + y +
                                     "=no");
    }
    return out;
}

// ---- ledger ----

inline json ledger_line(const std::string& name, const ClassRecord& rec,
                        const ClassifyOptions& opt) {
    json j;
    j["name"] = name;
    j["class"] = rec.cls;
    j["verdict"] = rec.verdict;
    if (!rec.certificate.is_null()) j["certificate"] = rec.certificate;
    j["budget"] = opt.budget;
    j["seed"] = opt.seed;
    j["wall_ms"] = rec.wall_ms;
    return j;
}

inline std::vector<json> ledger_lines(const ClassifyResult& res, const ClassifyOptions& opt) {
    std::vector<json> out;
    for (const ClassRecord& rec : res.records) out.push_back(ledger_line(res.name, rec, opt));
    return out;
}

inline json classify_result_to_json(const ClassifyResult& res, const ClassifyOptions& opt) {
    json j;
    j["name"] = res.name;
    json classes = json::array();
    for (const ClassRecord& rec : res.records) {
        json r;
        r["class"] = rec.cls;
        r["verdict"] = rec.verdict;
        if (!rec.certificate.is_null()) r["certificate"] = rec.certificate;
        if (!rec.obstruction.empty()) r["obstruction"] = rec.obstruction;
        r["budget_spent"] = rec.budget_spent;
        r["wall_ms"] = rec.wall_ms;
        classes.push_back(std::move(r));
    }
    j["classes"] = classes;
    j["budget"] = opt.budget;
    j["seed"] = opt.seed;
    j["violations"] = res.violations;
    return j;
}

// Classify a list of instances, optionally with instance-level worker
// threads; results come back in input order regardless of job count.
inline std::vector<ClassifyResult> classify_catalog(const std::vector<NamedComplex>& instances,
                                                    const ClassifyOptions& opt) {
    std::vector<ClassifyResult> results(instances.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            results[i] = classify_complex(instances[i].complex, instances[i].name, opt);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            results[i] = classify_complex(instances[i].complex, instances[i].name, opt);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return results;
}

// ---- counterexample hunt: vertex-decomposable, not strongly edge-decomposable ----

struct HuntRecord {
    std::string name;
    std::string vd_verdict;
    std::string sed_verdict;
    bool candidate = false;
    std::vector<json> lines;  // ledger lines for this instance
};

struct HuntResult {
    std::vector<HuntRecord> records;
    long candidates = 0;
    long decided = 0;   // instances with both verdicts decided
    long skipped = 0;   // instances already decided in the ledger
    long unknowns = 0;  // instances with at least one unknown verdict
};

// Default instance stream: the sphere catalog plus seeded random
// suspensions / barycentric subdivisions of catalog spheres, capped at
// desk scale (<= 11 vertices after the operation, subdivisions only of
// small low-dimensional bases).
inline std::vector<NamedComplex> hunt_instances(uint64_t seed, int extra) {
    std::vector<NamedComplex> out = catalog_spheres();
    std::vector<NamedComplex> bases;
    for (const NamedComplex& nc : out)
        if (nc.complex.vertices().size() <= 9) bases.push_back(nc);
    std::mt19937_64 gen(seed);
    for (int t = 0; t < extra; ++t) {
        std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
        const NamedComplex& base = bases[pick(gen)];
        const bool subdivide = (gen() & 1) != 0 && base.complex.dim() <= 2 &&
                               base.complex.facets().size() <= 12;
        NamedComplex nc;
        if (subdivide) {
            nc.name = "rand-" + std::to_string(t) + "-sd-" + base.name;
            nc.complex = barycentric_subdivision(base.complex);
        } else {
            nc.name = "rand-" + std::to_string(t) + "-susp-" + base.name;
            nc.complex = suspension(base.complex);
        }
        if (nc.complex.vertices().size() <= 11 || nc.complex.dim() <= 2)
            out.push_back(std::move(nc));
    }
    return out;
}

// Names already decided (verdict yes or no for both classes) for the same
// (budget, seed) in an existing ledger.
inline std::set<std::string> hunt_decided_names(const std::vector<json>& ledger,
                                                const ClassifyOptions& opt) {
    std::map<std::string, int> decided_classes;
    for (const json& j : ledger) {
        if (!j.is_object()) continue;
        if (j.value("budget", -1LL) != opt.budget) continue;
        if (j.value("seed", uint64_t{0}) != opt.seed) continue;
        std::string v = j.value("verdict", "");
        if (v != "yes" && v != "no") continue;
        std::string cls = j.value("class", "");
        if (cls == "VD" || cls == "strongED")
            decided_classes[j.value("name", "")] |= cls == "VD" ? 1 : 2;
    }
    std::set<std::string> out;
    for (const auto& [name, mask] : decided_classes)
        if (mask == 3) out.insert(name);
    return out;
}

inline HuntResult run_hunt(const std::vector<NamedComplex>& instances,
                           const ClassifyOptions& opt,
                           const std::set<std::string>& already_decided) {
    HuntResult out;
    for (const NamedComplex& nc : instances) {
        if (already_decided.count(nc.name)) {
            ++out.skipped;
            continue;
        }
        HuntRecord rec;
        rec.name = nc.name;

        Budget bv(opt.budget);
        SheddingResult vd = is_vertex_decomposable(nc.complex, bv);
        rec.vd_verdict = verdict_name(vd.verdict);
        ClassRecord vr;
        vr.cls = "VD";
        detail::fill_from_tristate(vr, vd, shedding_to_json);
        rec.lines.push_back(ledger_line(nc.name, vr, opt));

        Budget bs(opt.budget);
        StrongResult sed = is_strongly_edge_decomposable(nc.complex, bs);
        rec.sed_verdict = verdict_name(sed.verdict);
        ClassRecord sr;
        sr.cls = "strongED";
        detail::fill_from_tristate(sr, sed,
                                   [](const StrongCertPtr& p) { return strong_to_json(*p); });
        rec.lines.push_back(ledger_line(nc.name, sr, opt));

        rec.candidate = vd.verdict == Verdict::Yes && sed.verdict == Verdict::No;
        if (rec.candidate) ++out.candidates;
        if (vd.verdict != Verdict::Unknown && sed.verdict != Verdict::Unknown)
            ++out.decided;
        else
            ++out.unknowns;
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace plsphere
