#pragma once

// Independent certificate checkers.
//
// These re-derive every condition from the definitions instead of
// trusting the search that produced a certificate: shelling steps are
// re-checked face by face, shedding orders re-check purity, dimension and
// link decomposability (the latter through a separate brute-force
// recursion), shrinking orders re-check prefix connectivity and re-derive
// ball-ness of each N_j from its shelling certificate plus the
// pseudomanifold conditions, and strong certificates recompute each child
// complex from scratch before descending.

#include "plsphere/decompose.hpp"

namespace plsphere {

// Exhaustive vertex-decomposability by unfolding the definition; no
// budget, no certificates, memoized separately from the main decider.
inline bool brute_force_vertex_decomposable(const Complex& c) {
    if (c.empty() || !c.is_pure()) return false;
    if (c.facets().size() == 1) return true;
    thread_local std::unordered_map<std::vector<int32_t>, bool, FacetsKeyHash> memo;
    auto key = facets_key(c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (Label v : c.vertices()) {
        Complex del = delete_vertex(c, v);
        if (!del.is_pure() || del.dim() != c.dim()) continue;
        if (brute_force_vertex_decomposable(link(c, Face{v})) &&
            brute_force_vertex_decomposable(del)) {
            ok = true;
            break;
        }
    }
    return memo[key] = ok;
}

inline bool check_shedding_order(const Complex& c, const SheddingCertificate& cert) {
    if (c.empty() || !c.is_pure()) return false;
    Complex cur = c;
    for (Label v : cert.order) {
        if (!cur.has_vertex(v)) return false;
        Complex del = delete_vertex(cur, v);
        if (!del.is_pure() || del.dim() != cur.dim()) return false;
        if (!brute_force_vertex_decomposable(link(cur, Face{v}))) return false;
        cur = std::move(del);
    }
    return cur.facets().size() == 1 && cur.facets().front() == cert.remaining;
}

// Ball-ness re-derived from the certificate: a shelled pseudomanifold
// with non-empty boundary is a PL-ball, so validating those three
// conditions validates the claim without another search.
inline bool check_ball_certificate(const Complex& c, const ShellingCertificate& cert) {
    if (c.empty() || !c.is_pure() || c.dim() < 0) return false;
    if (!check_shelling(c, cert)) return false;
    PseudomanifoldReport pm = pseudomanifold_report(c);
    return pm.is_pseudomanifold && !pm.boundary_ridges.empty();
}

inline bool check_sphere_certificate(const Complex& c, const ShellingCertificate& cert) {
    if (c.empty() || !c.is_pure() || c.dim() < 0) return false;
    if (!check_shelling(c, cert)) return false;
    PseudomanifoldReport pm = pseudomanifold_report(c);
    return pm.is_pseudomanifold && pm.boundary_ridges.empty();
}

inline bool check_shrinking_certificate(const Complex& c, const ShrinkingCertificate& cert) {
    if (c.empty() || !c.is_pure()) return false;
    if (cert.simplex_base) return is_simplex_boundary(c);
    Face sigma = cert.base_facet;
    if (std::find(c.facets().begin(), c.facets().end(), sigma) == c.facets().end())
        return false;
    std::vector<Label> outside = face_minus(c.vertices(), sigma);
    std::vector<Label> sorted_order = cert.order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != outside) return false;
    if (cert.ball_certs.size() != cert.order.size()) return false;
    const Graph skel = one_skeleton(c);
    for (std::size_t j = 1; j <= cert.order.size(); ++j) {
        if (j >= 2) {
            bool adjacent = false;
            for (std::size_t i = 0; i + 1 < j; ++i)
                if (skel.has_edge(cert.order[j - 1], cert.order[i])) {
                    adjacent = true;
                    break;
                }
            if (!adjacent) return false;
        }
        if (!check_ball_certificate(nj_complex(c, cert.order, j), cert.ball_certs[j - 1]))
            return false;
    }
    return true;
}

enum class StrongKind { VertexDecomposable, Shrinkable, EdgeDecomposable };

inline bool check_strong_certificate(const Complex& c, const StrongCertificate& cert,
                                     StrongKind kind) {
    using Node = StrongCertificate::Node;
    const int d = c.dim() + 1;

    auto check_children_of_order = [&](const std::vector<Label>& order) {
        if (order.empty()) return cert.children.empty();
        if (cert.children.size() != order.size() - 1) return false;
        for (std::size_t j = 1; j < order.size(); ++j) {
            Complex bd = boundary(nj_complex(c, order, j));
            if (bd.empty() || !bd.has_vertex(order[j])) return false;
            if (!cert.children[j - 1]) return false;
            if (!check_strong_certificate(link(bd, Face{order[j]}), *cert.children[j - 1],
                                          kind))
                return false;
        }
        return true;
    };

    switch (cert.node) {
        case Node::LowDim:
            if (d > 3) return false;
            if (kind == StrongKind::VertexDecomposable)
                return cert.shedding && check_shedding_order(c, *cert.shedding);
            if (kind == StrongKind::Shrinkable)
                return cert.shrinking && check_shrinking_certificate(c, *cert.shrinking);
            return false;
        case Node::SimplexBoundary:
            return is_simplex_boundary(c);
        case Node::TwoSphere:
            return kind == StrongKind::EdgeDecomposable && c.dim() == 2 &&
                   cert.sphere_shelling &&
                   check_sphere_certificate(c, *cert.sphere_shelling);
        case Node::SheddingOrder:
            return kind == StrongKind::VertexDecomposable && d > 3 && cert.shedding &&
                   check_shedding_order(c, *cert.shedding) &&
                   check_children_of_order(cert.shedding->order);
        case Node::ShrinkingOrder:
            return kind == StrongKind::Shrinkable && d > 3 && cert.shrinking &&
                   check_shrinking_certificate(c, *cert.shrinking) &&
                   check_children_of_order(cert.shrinking->order);
        case Node::EdgeSplit: {
            if (kind != StrongKind::EdgeDecomposable || !cert.edge) return false;
            Label u = cert.edge->first, v = cert.edge->second;
            if (!is_edge(c, u, v)) return false;
            if (!satisfies_link_condition(c, u, v)) return false;
            if (cert.children.size() != 2 || !cert.children[0] || !cert.children[1])
                return false;
            Face e{std::min(u, v), std::max(u, v)};
            return check_strong_certificate(link(c, e), *cert.children[0], kind) &&
                   check_strong_certificate(contract_edge(c, e), *cert.children[1], kind);
        }
    }
    return false;
}

// Closure of the complement: the subcomplex generated by the facets of s
// not belonging to b.
inline Complex complement_complex(const Complex& s, const Complex& b) {
    std::vector<Face> fs;
    for (const Face& f : s.facets()) {
        bool in_b = std::binary_search(b.facets().begin(), b.facets().end(), f);
        if (!in_b) fs.push_back(f);
    }
    return Complex::from_faces(std::move(fs));
}

}  // namespace plsphere
