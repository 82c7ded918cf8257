#pragma once

// Edge contractions and the link condition.
//
// contract(c, u, v) maps u to v on every face and re-canonicalizes.  The
// link condition lk(u) ∩ lk(v) = lk({u,v}) is exact; for a combinatorial
// d-sphere it characterizes the contractions whose result is again a
// d-sphere.  theorem_2_1_report evaluates both sides of that equivalence
// together with the two auxiliary ball statements, so test suites can
// check that every decided answer agrees.

#include "plsphere/certify.hpp"
#include "plsphere/complex.hpp"

namespace plsphere {

inline bool is_edge(const Complex& c, Label u, Label v) {
    if (u == v) return false;
    Face e{u, v};
    std::sort(e.begin(), e.end());
    return c.has_face(e);
}

inline Complex contract(const Complex& c, Label u, Label v) {
    if (!is_edge(c, u, v)) throw Error("not an edge");
    std::vector<Face> fs;
    fs.reserve(c.facets().size());
    for (Face f : c.facets()) {
        if (face_contains(f, u)) {
            f.erase(std::find(f.begin(), f.end(), u));
            if (!face_contains(f, v)) f.push_back(v);
        }
        fs.push_back(std::move(f));
    }
    return Complex::from_faces(std::move(fs));
}

// Contract the edge towards its smaller endpoint (the larger label is
// removed), which keeps repeated contractions deterministic.
inline Complex contract_edge(const Complex& c, const Face& e) {
    if (e.size() != 2) throw Error("not an edge");
    Label u = std::max(e[0], e[1]);
    Label v = std::min(e[0], e[1]);
    return contract(c, u, v);
}

inline bool satisfies_link_condition(const Complex& c, Label u, Label v) {
    if (!is_edge(c, u, v)) throw Error("not an edge");
    Complex lu = link(c, Face{u});
    Complex lv = link(c, Face{v});
    Face e{u, v};
    std::sort(e.begin(), e.end());
    return complex_intersection(lu, lv) == link(c, e);
}

// Joint evaluation of, for an edge e = {u,v} of a combinatorial d-sphere:
//   link_condition   lk(u) ∩ lk(v) = lk(e)                        (exact)
//   deletion_ball    (Σ \ u) \ v is a PL d-ball                   (certified)
//   contracted_sphere  the contraction is again a PL d-sphere     (certified)
//   star_union_ball  st(u) ∪ st(v) is a PL d-ball                 (certified)
//   complement_ball  the complex generated by the facets avoiding
//                    both u and v is a PL d-ball                  (certified)
//
// The first three form one cluster of pairwise-equivalent statements and
// the last two another: the star union and the facet complement tile the
// sphere along a common boundary, so by the complement property of balls
// inside spheres each is a ball exactly when the other is.  A true
// deletion-ball forces the star union to be a ball, and the converse
// holds exactly when the double deletion is pure of full dimension (so
// that it coincides with the facet complement).  On 2-neighbourly
// spheres the deletion can pick up lower-dimensional maximal faces while
// a single facet avoids both endpoints — the cyclic 3-sphere on 7
// vertices with edge {1,3} has star union = sphere minus one open cell,
// a genuine ball, while the link condition fails — so the purity guard
// is part of the contract, not an implementation artifact.  `consistent`
// reports whether the decided subset satisfies this relational contract.
struct ContractionReport {
    Label u = 0, v = 0;
    bool link_condition = false;
    Complex contracted;
    ShellingResult deletion_ball;
    ShellingResult star_union_ball;
    ShellingResult contracted_sphere;
    ShellingResult complement_ball;
    bool deletion_pure_full_dim = false;
    bool consistent = true;
};

inline ContractionReport theorem_2_1_report(const Complex& c, Label u, Label v,
                                            Budget& budget) {
    if (!is_edge(c, u, v)) throw Error("not an edge");
    ContractionReport rep;
    rep.u = u;
    rep.v = v;
    const int d = c.dim();

    rep.link_condition = satisfies_link_condition(c, u, v);
    rep.contracted = contract(c, u, v);

    Complex del = delete_vertex(delete_vertex(c, u), v);
    rep.deletion_ball = certify_ball_of_dim(del, d, budget);
    rep.deletion_pure_full_dim = !del.empty() && del.is_pure() && del.dim() == d;

    Complex stars = complex_union(star(c, Face{u}), star(c, Face{v}));
    rep.star_union_ball = certify_ball_of_dim(stars, d, budget);

    rep.contracted_sphere = certify_sphere_of_dim(rep.contracted, d, budget);

    std::vector<Face> avoiding;
    for (const Face& f : c.facets())
        if (!face_contains(f, u) && !face_contains(f, v)) avoiding.push_back(f);
    if (avoiding.empty()) {
        rep.complement_ball = ShellingResult::no("no facets avoid the edge", 0);
    } else {
        rep.complement_ball =
            certify_ball_of_dim(Complex::from_facets(std::move(avoiding)), d, budget);
    }

    bool a_true = rep.link_condition, a_false = !rep.link_condition;
    for (const ShellingResult* r : {&rep.deletion_ball, &rep.contracted_sphere}) {
        if (r->verdict == Verdict::Yes) a_true = true;
        if (r->verdict == Verdict::No) a_false = true;
    }
    bool b_true = false, b_false = false;
    for (const ShellingResult* r : {&rep.star_union_ball, &rep.complement_ball}) {
        if (r->verdict == Verdict::Yes) b_true = true;
        if (r->verdict == Verdict::No) b_false = true;
    }
    rep.consistent = !((a_true && a_false) || (b_true && b_false) ||
                       (a_true && b_false) ||
                       (rep.deletion_pure_full_dim && b_true && a_false));
    return rep;
}

}  // namespace plsphere
