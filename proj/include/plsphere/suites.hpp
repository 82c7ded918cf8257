#pragma once

// Property suites: executable forms of the structural statements the
// library is built around, run over the named catalog at desk scale.
//
//   contraction-equivalence   the contraction conditions satisfy their
//                             relational contract on every decided edge
//                             of every small sphere (four-way agreement
//                             whenever the double deletion is pure)
//   shedding-boundary         shedding vertices of balls lie on the
//                             boundary and deletions never refute ball-ness
//   cone-shrinking            closing a vertex-decomposable ball with a
//                             cone over its boundary yields a shrinkable
//                             sphere, explicit order (apex, shedding order)
//   strong-implication        strongly shrinkable implies strongly
//                             edge-decomposable, with the contraction and
//                             link identities behind the implication
//   low-dim-strong-orders     in dimensions 2 and 3 every shedding order
//                             of a sphere is strong
//   lefschetz-witness         small strongly edge-decomposable spheres
//                             admit GF(p) Lefschetz witnesses that verify
//                             over the exact rationals

#include <sstream>

#include "plsphere/classify.hpp"
#include "plsphere/verify.hpp"

namespace plsphere {

struct SuiteReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;
    std::map<std::string, long> stats;

    void note(const std::string& msg) { lines.push_back(msg); }
    void fail(const std::string& msg) {
        pass = false;
        lines.push_back("FAIL: " + msg);
    }
};

inline SuiteReport suite_contraction_equivalence(long long budget = 1000000) {
    SuiteReport rep;
    rep.name = "contraction-equivalence";
    long edges = 0, decided = 0, inconsistent = 0, pure_deletion = 0, guarded = 0;
    for (const NamedComplex& nc : catalog_spheres()) {
        if (nc.complex.vertices().size() > 10 || nc.complex.dim() < 1) continue;
        for (const Face& e : faces(nc.complex, 1)) {
            ++edges;
            Budget b(budget);
            ContractionReport r = theorem_2_1_report(nc.complex, e[0], e[1], b);
            std::string where = nc.name + " edge {" + std::to_string(e[0]) + "," +
                                std::to_string(e[1]) + "}";
            if (!r.consistent) {
                ++inconsistent;
                rep.fail(where + ": decided conditions disagree");
            }
            bool all_decided = r.deletion_ball.verdict != Verdict::Unknown &&
                               r.star_union_ball.verdict != Verdict::Unknown &&
                               r.contracted_sphere.verdict != Verdict::Unknown &&
                               r.complement_ball.verdict != Verdict::Unknown;
            if (all_decided) ++decided;
            // When the double deletion is pure of full dimension the two
            // clusters must coincide, so all four decided conditions have
            // to give the same answer.
            if (r.deletion_pure_full_dim) {
                ++pure_deletion;
                if (all_decided) {
                    bool want = r.link_condition;
                    for (const ShellingResult* s :
                         {&r.deletion_ball, &r.star_union_ball, &r.contracted_sphere,
                          &r.complement_ball}) {
                        if ((s->verdict == Verdict::Yes) != want) {
                            ++inconsistent;
                            rep.fail(where +
                                     ": pure deletion but the four conditions split");
                            break;
                        }
                    }
                }
            } else if (r.star_union_ball.verdict == Verdict::Yes &&
                       !r.link_condition) {
                // Divergence explained by the purity guard (2-neighbourly
                // instances); counted so the report shows how often the
                // guard carried weight.
                ++guarded;
            }
        }
    }
    rep.stats["edges"] = edges;
    rep.stats["decided"] = decided;
    rep.stats["inconsistent"] = inconsistent;
    rep.stats["pure_deletion_edges"] = pure_deletion;
    rep.stats["purity_guarded_divergences"] = guarded;
    if (edges == 0) rep.fail("no edges tested");
    if (decided * 100 < edges * 95)
        rep.fail("decided fraction below 95%: " + std::to_string(decided) + "/" +
                 std::to_string(edges));
    rep.note("edges " + std::to_string(edges) + ", fully decided " +
             std::to_string(decided) + ", inconsistent " + std::to_string(inconsistent) +
             ", purity-guarded divergences " + std::to_string(guarded));
    return rep;
}

inline SuiteReport suite_shedding_boundary(long long budget = 1000000) {
    SuiteReport rep;
    rep.name = "shedding-boundary";
    long balls = 0, steps = 0;
    for (const NamedComplex& nc : catalog_balls()) {
        Budget b(budget);
        SheddingResult vd = find_shedding_order(nc.complex, b);
        if (vd.verdict != Verdict::Yes) {
            rep.fail(nc.name + ": expected a vertex-decomposable catalog ball, got " +
                     verdict_name(vd.verdict));
            continue;
        }
        ++balls;
        Complex cur = nc.complex;
        for (Label v : vd.certificate->order) {
            ++steps;
            Complex bd = boundary(cur);
            if (bd.empty() || !bd.has_vertex(v)) {
                rep.fail(nc.name + ": shedding vertex " + std::to_string(v) +
                         " is not on the boundary");
                break;
            }
            Complex del = delete_vertex(cur, v);
            Budget b2(budget);
            ShellingResult ball = certify_ball(del, b2);
            if (ball.verdict == Verdict::No) {
                rep.fail(nc.name + ": deletion of " + std::to_string(v) +
                         " refuted as a ball: " + ball.obstruction);
                break;
            }
            cur = std::move(del);
        }
    }
    rep.stats["balls"] = balls;
    rep.stats["steps"] = steps;
    rep.note("balls " + std::to_string(balls) + ", shedding steps " + std::to_string(steps));
    return rep;
}

inline SuiteReport suite_cone_shrinking(long long budget = 1000000) {
    SuiteReport rep;
    rep.name = "cone-shrinking";
    long validated = 0;
    for (const NamedComplex& nc : catalog_balls()) {
        Budget b(budget);
        SheddingResult vd = find_shedding_order(nc.complex, b);
        if (vd.verdict != Verdict::Yes) {
            rep.fail(nc.name + ": expected a vertex-decomposable catalog ball, got " +
                     verdict_name(vd.verdict));
            continue;
        }
        if (boundary(nc.complex).empty()) {
            rep.fail(nc.name + ": catalog ball has empty boundary");
            continue;
        }
        Label apex = fresh_label(nc.complex);
        Complex gamma = cone_over_boundary_union(nc.complex, apex);
        std::vector<Label> order{apex};
        order.insert(order.end(), vd.certificate->order.begin(),
                     vd.certificate->order.end());
        Budget b2(budget);
        ShrinkingResult sr =
            validate_shrinking_order(gamma, vd.certificate->remaining, order, b2);
        if (sr.verdict != Verdict::Yes) {
            rep.fail(nc.name + ": cone closure order not validated: " +
                     verdict_name(sr.verdict) + " (" + sr.obstruction + ")");
            continue;
        }
        if (!check_shrinking_certificate(gamma, *sr.certificate)) {
            rep.fail(nc.name + ": shrinking certificate failed independent re-check");
            continue;
        }
        ++validated;
    }
    rep.stats["validated"] = validated;
    if (validated < 20)
        rep.fail("fewer than 20 vertex-decomposable balls validated: " +
                 std::to_string(validated));
    rep.note("cone closures validated as shrinkable: " + std::to_string(validated));
    return rep;
}

inline SuiteReport suite_strong_implication(long long budget = 1000000) {
    SuiteReport rep;
    rep.name = "strong-implication";
    long yes_pairs = 0, orders_checked = 0;
    for (const NamedComplex& nc : catalog_spheres()) {
        const Complex& c = nc.complex;
        Budget b(budget);
        StrongResult ss = is_strongly_shrinkable(c, b);
        if (ss.verdict != Verdict::Yes) continue;

        Budget b2(budget);
        StrongResult sed = is_strongly_edge_decomposable(c, b2);
        if (sed.verdict != Verdict::Yes) {
            rep.fail(nc.name + ": strongly shrinkable but strongly-edge-decomposable " +
                     std::string(verdict_name(sed.verdict)));
            continue;
        }
        ++yes_pairs;

        // The identities behind the implication, on the root shrinking
        // order (when the certificate carries one with k >= 2).
        const StrongCertificate& cert = **ss.certificate;
        if (!cert.shrinking || cert.shrinking->simplex_base ||
            cert.shrinking->order.size() < 2)
            continue;
        ++orders_checked;
        const std::vector<Label>& order = cert.shrinking->order;
        const Face& sigma = cert.shrinking->base_facet;
        Label v1 = order[0], v2 = order[1];
        if (!is_edge(c, v1, v2)) {
            rep.fail(nc.name + ": first two shrinking vertices are not an edge");
            continue;
        }
        Face e = sorted_face(Face{v1, v2});
        if (link(c, e) != link(link(c, Face{v1}), Face{v2}))
            rep.fail(nc.name + ": lk(e) != lk(v2, lk(v1))");
        if (link(c, Face{v1}) != boundary(nj_complex(c, order, 1)))
            rep.fail(nc.name + ": lk(v1) != boundary of the first star union");
        if (!satisfies_link_condition(c, v1, v2)) {
            rep.fail(nc.name + ": shrinking head edge fails the link condition");
            continue;
        }
        Complex contracted = contract(c, v1, v2);
        std::vector<Label> rest(order.begin() + 1, order.end());
        Budget b3(budget);
        ShrinkingResult sr = validate_shrinking_order(contracted, sigma, rest, b3);
        if (sr.verdict != Verdict::Yes)
            rep.fail(nc.name + ": shrinking order does not survive contraction: " +
                     verdict_name(sr.verdict) + " (" + sr.obstruction + ")");
    }
    rep.stats["implications"] = yes_pairs;
    rep.stats["orders_checked"] = orders_checked;
    if (yes_pairs == 0) rep.fail("no strongly shrinkable catalog sphere decided");
    rep.note("strongly shrinkable spheres: " + std::to_string(yes_pairs) +
             ", contraction identities checked on " + std::to_string(orders_checked));
    return rep;
}

inline SuiteReport suite_low_dim_strong_orders(long long budget = 1000000,
                                               std::size_t orders_per_instance = 50) {
    SuiteReport rep;
    rep.name = "low-dim-strong-orders";
    long instances = 0, orders = 0;
    for (const NamedComplex& nc : catalog_spheres()) {
        const Complex& c = nc.complex;
        if (c.dim() != 2 && c.dim() != 3) continue;
        Budget b(budget);
        if (is_vertex_decomposable(c, b).verdict != Verdict::Yes) {
            rep.fail(nc.name + ": expected a vertex-decomposable low-dimensional sphere");
            continue;
        }
        ++instances;
        Budget b2(budget);
        SheddingEnumeration en = enumerate_shedding_orders(c, orders_per_instance, b2);
        if (en.orders.empty()) {
            rep.fail(nc.name + ": no shedding orders enumerated");
            continue;
        }
        for (const SheddingCertificate& cert : en.orders) {
            ++orders;
            auto kids = detail::strong_children(c, cert.order);
            if (!kids) {
                rep.fail(nc.name + ": order is not strong (vertex missing from a "
                         "star-union boundary)");
                continue;
            }
            for (const Complex& kid : *kids) {
                Budget b3(budget);
                StrongResult sr = is_strongly_vertex_decomposable(kid, b3);
                if (sr.verdict != Verdict::Yes) {
                    rep.fail(nc.name + ": order child not strongly vertex-decomposable (" +
                             verdict_name(sr.verdict) + ")");
                    break;
                }
            }
        }
    }
    rep.stats["instances"] = instances;
    rep.stats["orders"] = orders;
    if (instances == 0) rep.fail("no low-dimensional spheres tested");
    rep.note("instances " + std::to_string(instances) + ", shedding orders validated " +
             std::to_string(orders));
    return rep;
}

inline SuiteReport suite_lefschetz_witness(long long budget = 1000000, int trials = 5,
                                           uint64_t seed = 0,
                                           uint64_t p = 2147483647ull) {
    SuiteReport rep;
    rep.name = "lefschetz-witness";
    long witnesses = 0;
    for (const NamedComplex& nc : catalog_spheres()) {
        const Complex& c = nc.complex;
        if (c.vertices().size() > 10) continue;
        Budget b(budget);
        StrongResult sed = is_strongly_edge_decomposable(c, b);
        if (sed.verdict != Verdict::Yes) continue;

        std::optional<LefschetzWitness> w;
        try {
            w = strong_lefschetz_witness(c, p, trials, seed);
        } catch (const Error& e) {
            rep.fail(nc.name + ": witness search failed: " + e.what());
            continue;
        }
        if (!w) {
            rep.fail(nc.name + ": no witness within " + std::to_string(trials) +
                     " trials");
            continue;
        }
        std::vector<long> h = h_vector_as_long(c);
        bool dims_match = w->dims.size() == h.size();
        for (std::size_t j = 0; dims_match && j < h.size(); ++j)
            if (w->dims[j] != h[j]) dims_match = false;
        if (!dims_match) {
            rep.fail(nc.name + ": witness dims do not equal the h-vector");
            continue;
        }
        RationalCheck rc = rational_verify(c, *w);
        if (!rc.ok) {
            rep.fail(nc.name + ": rational verification failed: " + rc.detail);
            continue;
        }
        if (rc.dims != w->dims || rc.ranks != w->ranks) {
            rep.fail(nc.name + ": rational dims/ranks differ from the GF(p) witness");
            continue;
        }
        ++witnesses;
    }
    rep.stats["witnesses"] = witnesses;
    if (witnesses == 0) rep.fail("no strongly edge-decomposable small sphere tested");
    rep.note("witnesses found and rationally verified: " + std::to_string(witnesses));
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "contraction-equivalence", "shedding-boundary",     "cone-shrinking",
        "strong-implication",      "low-dim-strong-orders", "lefschetz-witness"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, long long budget = 1000000) {
    if (name == "contraction-equivalence") return suite_contraction_equivalence(budget);
    if (name == "shedding-boundary") return suite_shedding_boundary(budget);
    if (name == "cone-shrinking") return suite_cone_shrinking(budget);
    if (name == "strong-implication") return suite_strong_implication(budget);
    if (name == "low-dim-strong-orders") return suite_low_dim_strong_orders(budget);
    if (name == "lefschetz-witness") return suite_lefschetz_witness(budget);
    throw Error("unknown suite: " + name);
}

}  // namespace plsphere
