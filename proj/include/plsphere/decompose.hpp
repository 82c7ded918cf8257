#pragma once

// Decomposability deciders: vertex decomposability, shrinkability, and
// their strong refinements, plus strong edge decomposability.
//
// All searches are deterministic backtracking in ascending label /
// lexicographic order, so the first certificate found is canonical.
// Every decider returns TriState: Yes with a recursive certificate, No
// only after an exhaustive search in which no branch was cut off by the
// budget or by an undecided sub-question, and Unknown otherwise.
// Decided verdicts are memoized per thread on the canonical facet list.

#include <functional>
#include <memory>
#include <unordered_map>

#include "plsphere/certify.hpp"
#include "plsphere/contraction.hpp"
#include "plsphere/homology.hpp"

namespace plsphere {

struct SheddingCertificate {
    std::vector<Label> order;  // vertices shed, in order
    Face remaining;            // facet of the final simplex
};

using SheddingResult = TriState<SheddingCertificate>;

struct SheddingVertexCertificate {
    SheddingCertificate deletion;
    SheddingCertificate link;
};

struct ShrinkingCertificate {
    bool simplex_base = false;  // input was the boundary of a simplex
    Face base_facet;            // σ (or the witnessing facet for the base)
    std::vector<Label> order;   // v_1 .. v_k, the vertices outside σ
    std::vector<ShellingCertificate> ball_certs;  // shelling of N_j, j = 1..k
};

using ShrinkingResult = TriState<ShrinkingCertificate>;

struct StrongCertificate;
using StrongCertPtr = std::shared_ptr<const StrongCertificate>;

// One node of a recursive strong-decomposition certificate.
struct StrongCertificate {
    enum class Node {
        LowDim,           // dim+1 <= 3 base: carries the plain certificate
        SimplexBoundary,  // boundary of a simplex
        TwoSphere,        // strong edge decomposability base: carries a shelling
        SheddingOrder,    // strong shedding order; children: lk(v_{j+1}, ∂N_j)
        ShrinkingOrder,   // strong shrinking order; children as above
        EdgeSplit,        // admissible edge; children: link, contraction
    };
    Node node;
    std::optional<SheddingCertificate> shedding;
    std::optional<ShrinkingCertificate> shrinking;
    std::optional<ShellingCertificate> sphere_shelling;
    std::optional<std::pair<Label, Label>> edge;
    std::vector<StrongCertPtr> children;
};

using StrongResult = TriState<StrongCertPtr>;

enum class SearchStatus { Exhausted, Stopped, BudgetExhausted };

namespace detail {

struct DecompCaches {
    std::unordered_map<std::vector<int32_t>, SheddingResult, FacetsKeyHash> vd;
    std::unordered_map<std::vector<int32_t>, ShrinkingResult, FacetsKeyHash> shrink;
    std::unordered_map<std::vector<int32_t>, StrongResult, FacetsKeyHash> strong_vd;
    std::unordered_map<std::vector<int32_t>, StrongResult, FacetsKeyHash> strong_shrink;
    std::unordered_map<std::vector<int32_t>, StrongResult, FacetsKeyHash> strong_ed;
};

inline DecompCaches& decomp_caches() {
    thread_local DecompCaches c;
    return c;
}

}  // namespace detail

// Drops this thread's memoized decomposition results (see
// clear_certify_cache for the contract).
inline void clear_decompose_caches() {
    auto& cs = detail::decomp_caches();
    cs.vd.clear();
    cs.shrink.clear();
    cs.strong_vd.clear();
    cs.strong_shrink.clear();
    cs.strong_ed.clear();
}

inline SheddingResult is_vertex_decomposable(const Complex& c, Budget& budget);

namespace detail {

// Exact obstruction: a vertex-decomposable pure complex is shellable,
// hence homotopy equivalent to a wedge of top-dimensional spheres, so any
// reduced homology below the top dimension refutes decomposability
// outright.  This keeps dead search branches (annuli, disconnected
// deletions, ...) from being explored facet by facet.
inline bool shellability_homology_obstruction(const Complex& c) {
    if (c.dim() < 1) return false;
    BettiVector b = reduced_betti(c, 2);
    for (int k = 0; k < c.dim(); ++k)
        if (b.betti[static_cast<std::size_t>(k)] != 0) return true;
    return false;
}

}  // namespace detail

// Memoized recursion straight from the definition: v is a shedding vertex
// when the deletion is pure of the same dimension and both the link and
// the deletion are vertex-decomposable; candidates are tried in ascending
// label order, so the first certificate is canonical.
inline SheddingResult is_vertex_decomposable(const Complex& c, Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("vertex decomposability requires pure complex");
    const long long start = budget.spent;
    if (c.facets().size() == 1)
        return SheddingResult::yes({{}, c.facets().front()}, 0);

    auto& cache = detail::decomp_caches().vd;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    if (detail::shellability_homology_obstruction(c))
        return cache[key] = SheddingResult::no(
                   "homology below the top dimension obstructs shellability", 0);

    bool saw_unknown = false;
    bool budget_hit = false;
    for (Label v : c.vertices()) {
        if (!budget.take()) {
            budget_hit = true;
            break;
        }
        Complex del = delete_vertex(c, v);
        if (!del.is_pure() || del.dim() != c.dim()) continue;
        SheddingResult lk_vd = is_vertex_decomposable(link(c, Face{v}), budget);
        if (lk_vd.verdict != Verdict::Yes) {
            if (lk_vd.verdict == Verdict::Unknown) saw_unknown = true;
            continue;
        }
        SheddingResult del_vd = is_vertex_decomposable(del, budget);
        if (del_vd.verdict != Verdict::Yes) {
            if (del_vd.verdict == Verdict::Unknown) saw_unknown = true;
            continue;
        }
        SheddingCertificate cert;
        cert.order.push_back(v);
        cert.order.insert(cert.order.end(), del_vd.certificate->order.begin(),
                          del_vd.certificate->order.end());
        cert.remaining = del_vd.certificate->remaining;
        return cache[key] = SheddingResult::yes(std::move(cert), budget.spent - start);
    }
    if (budget_hit)
        return SheddingResult::unknown("budget exhausted", budget.spent - start);
    if (saw_unknown)
        return SheddingResult::unknown("search exhausted but sub-questions undecided",
                                       budget.spent - start, true);
    return cache[key] = SheddingResult::no("no shedding order exists (exhaustive)",
                                           budget.spent - start);
}

// Enumerates shedding orders of c in lexicographic order.  The callback
// receives (order, remaining facet) for each complete order and returns
// true to stop the search.  Branches are pruned exactly through the
// memoized decider (a prefix extends to a full order iff its deletion is
// vertex-decomposable); any Unknown encountered while pruning sets
// saw_unknown, which poisons a would-be exhaustive No.
inline SearchStatus for_each_shedding_order(
    const Complex& c, Budget& budget, bool& saw_unknown,
    const std::function<bool(const std::vector<Label>&, const Face&)>& yield) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("shedding requires pure complex");

    std::vector<Label> order;
    std::function<SearchStatus(const Complex&)> rec =
        [&](const Complex& cur) -> SearchStatus {
        if (cur.facets().size() == 1)
            return yield(order, cur.facets().front()) ? SearchStatus::Stopped
                                                      : SearchStatus::Exhausted;
        for (Label v : cur.vertices()) {
            if (!budget.take()) return SearchStatus::BudgetExhausted;
            Complex del = delete_vertex(cur, v);
            if (!del.is_pure() || del.dim() != cur.dim()) continue;
            SheddingResult lk_vd = is_vertex_decomposable(link(cur, Face{v}), budget);
            if (lk_vd.verdict == Verdict::Unknown) {
                saw_unknown = true;
                continue;
            }
            if (lk_vd.verdict == Verdict::No) continue;
            SheddingResult del_vd = is_vertex_decomposable(del, budget);
            if (del_vd.verdict == Verdict::Unknown) {
                saw_unknown = true;
                continue;
            }
            if (del_vd.verdict == Verdict::No) continue;
            order.push_back(v);
            SearchStatus st = rec(del);
            if (st != SearchStatus::Exhausted) return st;
            order.pop_back();
        }
        return SearchStatus::Exhausted;
    };
    return rec(c);
}

inline SheddingResult find_shedding_order(const Complex& c, Budget& budget) {
    return is_vertex_decomposable(c, budget);
}

inline TriState<SheddingVertexCertificate> is_shedding_vertex(const Complex& c, Label v,
                                                              Budget& budget) {
    if (!c.is_pure()) throw Error("shedding requires pure complex");
    if (!c.has_vertex(v)) throw Error("not a vertex");
    using R = TriState<SheddingVertexCertificate>;
    const long long start = budget.spent;
    Complex del = delete_vertex(c, v);
    if (!del.is_pure() || del.dim() != c.dim())
        return R::no("deletion is not pure of the same dimension", 0);
    SheddingResult dr = is_vertex_decomposable(del, budget);
    if (dr.verdict == Verdict::No)
        return R::no("deletion not vertex-decomposable", budget.spent - start);
    SheddingResult lr = is_vertex_decomposable(link(c, Face{v}), budget);
    if (lr.verdict == Verdict::No)
        return R::no("link not vertex-decomposable", budget.spent - start);
    if (dr.verdict == Verdict::Yes && lr.verdict == Verdict::Yes)
        return R::yes({*dr.certificate, *lr.certificate}, budget.spent - start);
    return R::unknown("sub-decisions undecided", budget.spent - start);
}

// Enumerate up to `limit` shedding orders.
struct SheddingEnumeration {
    std::vector<SheddingCertificate> orders;
    SearchStatus status = SearchStatus::Exhausted;
    bool saw_unknown = false;
};

inline SheddingEnumeration enumerate_shedding_orders(const Complex& c, std::size_t limit,
                                                     Budget& budget) {
    SheddingEnumeration out;
    out.status = for_each_shedding_order(
        c, budget, out.saw_unknown,
        [&](const std::vector<Label>& order, const Face& remaining) {
            out.orders.push_back({order, remaining});
            return out.orders.size() >= limit;
        });
    return out;
}

// N_j: the union of the closed vertex stars of the first j vertices of
// the order, taken in the original complex.
inline Complex nj_complex(const Complex& c, const std::vector<Label>& order,
                          std::size_t j) {
    if (j < 1 || j > order.size()) throw Error("j out of range");
    std::vector<Face> fs;
    for (const Face& f : c.facets())
        for (std::size_t i = 0; i < j; ++i)
            if (face_contains(f, order[i])) {
                fs.push_back(f);
                break;
            }
    return Complex::from_faces(std::move(fs));
}

// Enumerates shrinking orders (σ, v_1..v_k): σ a facet, the v_i the
// vertices outside σ, each prefix graph connected and each N_j a
// certified ball.  Yields in (facet, order) lexicographic order.
inline SearchStatus for_each_shrinking_order(
    const Complex& c, Budget& budget, bool& saw_unknown,
    const std::function<bool(const Face&, const std::vector<Label>&,
                             const std::vector<ShellingCertificate>&)>& yield) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("shrinking requires pure complex");
    const Graph skel = one_skeleton(c);
    const std::vector<Label> verts = c.vertices();

    for (const Face& sigma : c.facets()) {
        std::vector<Label> outside = face_minus(verts, sigma);
        std::vector<bool> used(outside.size(), false);
        std::vector<Label> order;
        std::vector<ShellingCertificate> certs;
        std::vector<Face> nj_facets;  // facets of N_j so far

        std::function<SearchStatus()> rec = [&]() -> SearchStatus {
            if (order.size() == outside.size())
                return yield(sigma, order, certs) ? SearchStatus::Stopped
                                                  : SearchStatus::Exhausted;
            for (std::size_t i = 0; i < outside.size(); ++i) {
                if (used[i]) continue;
                Label v = outside[i];
                if (!order.empty()) {
                    bool adjacent = false;
                    for (Label w : order)
                        if (skel.has_edge(v, w)) { adjacent = true; break; }
                    if (!adjacent) continue;  // prefix graph would disconnect
                }
                if (!budget.take()) return SearchStatus::BudgetExhausted;
                std::vector<Face> grown = nj_facets;
                for (const Face& f : c.facets())
                    if (face_contains(f, v)) grown.push_back(f);
                std::sort(grown.begin(), grown.end());
                grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
                Complex nj = Complex::from_faces(grown);
                ShellingResult br = certify_ball(nj, budget);
                if (br.verdict == Verdict::Unknown) {
                    saw_unknown = true;
                    continue;
                }
                if (br.verdict == Verdict::No) continue;
                used[i] = true;
                order.push_back(v);
                certs.push_back(*br.certificate);
                std::swap(nj_facets, grown);
                SearchStatus st = rec();
                if (st != SearchStatus::Exhausted) return st;
                std::swap(nj_facets, grown);
                certs.pop_back();
                order.pop_back();
                used[i] = false;
            }
            return SearchStatus::Exhausted;
        };
        SearchStatus st = rec();
        if (st != SearchStatus::Exhausted) return st;
    }
    return SearchStatus::Exhausted;
}

inline ShrinkingResult find_shrinking_order(const Complex& c, Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("shrinking requires pure complex");
    const long long start = budget.spent;
    if (is_simplex_boundary(c)) {
        ShrinkingCertificate cert;
        cert.simplex_base = true;
        cert.base_facet = c.facets().front();
        return ShrinkingResult::yes(std::move(cert), 0);
    }

    auto& cache = detail::decomp_caches().shrink;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    bool saw_unknown = false;
    std::optional<ShrinkingCertificate> found;
    SearchStatus st = for_each_shrinking_order(
        c, budget, saw_unknown,
        [&](const Face& sigma, const std::vector<Label>& order,
            const std::vector<ShellingCertificate>& certs) {
            ShrinkingCertificate cert;
            cert.base_facet = sigma;
            cert.order = order;
            cert.ball_certs = certs;
            found = std::move(cert);
            return true;
        });
    if (found)
        return cache[key] = ShrinkingResult::yes(std::move(*found), budget.spent - start);
    if (st == SearchStatus::BudgetExhausted)
        return ShrinkingResult::unknown("budget exhausted", budget.spent - start);
    if (saw_unknown)
        return ShrinkingResult::unknown("search exhausted but sub-questions undecided",
                                        budget.spent - start, true);
    return cache[key] = ShrinkingResult::no("no shrinking order exists (exhaustive)",
                                            budget.spent - start);
}

// Re-derivation of the shrinking conditions for a proposed order.
inline ShrinkingResult validate_shrinking_order(const Complex& c, const Face& sigma_in,
                                                const std::vector<Label>& order,
                                                Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("shrinking requires pure complex");
    Face sigma = sorted_face(sigma_in);
    if (std::find(c.facets().begin(), c.facets().end(), sigma) == c.facets().end())
        throw Error("not a facet");
    std::vector<Label> outside = face_minus(c.vertices(), sigma);
    std::vector<Label> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != outside)
        throw Error("order is not a permutation of the vertices outside the facet");

    const long long start = budget.spent;
    const Graph skel = one_skeleton(c);
    ShrinkingCertificate cert;
    cert.base_facet = sigma;
    cert.order = order;
    for (std::size_t j = 1; j <= order.size(); ++j) {
        if (j >= 2) {
            bool adjacent = false;
            for (std::size_t i = 0; i + 1 < j; ++i)
                if (skel.has_edge(order[j - 1], order[i])) { adjacent = true; break; }
            if (!adjacent)
                return ShrinkingResult::no(
                    "prefix graph disconnected at step " + std::to_string(j),
                    budget.spent - start);
        }
        ShellingResult br = certify_ball(nj_complex(c, order, j), budget);
        if (br.verdict == Verdict::No)
            return ShrinkingResult::no(
                "N_" + std::to_string(j) + " is not a ball: " + br.obstruction,
                budget.spent - start);
        if (br.verdict == Verdict::Unknown)
            return ShrinkingResult::unknown(
                "N_" + std::to_string(j) + " undecided: " + br.obstruction,
                budget.spent - start, br.exhausted_search);
        cert.ball_certs.push_back(*br.certificate);
    }
    return ShrinkingResult::yes(std::move(cert), budget.spent - start);
}

inline StrongResult is_strongly_vertex_decomposable(const Complex& c, Budget& budget);
inline StrongResult is_strongly_shrinkable(const Complex& c, Budget& budget);

namespace detail {

// Children of a strong order: lk(v_{j+1}, ∂N_j) for 1 <= j < k, with all
// of N_j, its boundary and the link taken in the original complex.
// Returns std::nullopt if the order fails structurally (some v_{j+1} not
// a vertex of ∂N_j).
inline std::optional<std::vector<Complex>> strong_children(
    const Complex& c, const std::vector<Label>& order) {
    std::vector<Complex> out;
    for (std::size_t j = 1; j < order.size(); ++j) {
        Complex bd = boundary(nj_complex(c, order, j));
        if (bd.empty() || !bd.has_vertex(order[j])) return std::nullopt;
        out.push_back(link(bd, Face{order[j]}));
    }
    return out;
}

// Shared search harness for the two strong order classes.  `enumerate`
// runs the underlying order enumeration and `wrap` builds the root
// certificate node from the accepted order plus its children.
template <class Enumerate, class Wrap>
StrongResult strong_order_search(const Complex& c, Budget& budget,
                                 const Enumerate& enumerate, const Wrap& wrap,
                                 const std::function<StrongResult(const Complex&, Budget&)>& recurse) {
    const long long start = budget.spent;
    bool saw_unknown = false;
    std::optional<StrongCertificate> found;

    auto try_order = [&](const std::vector<Label>& order,
                         const std::function<StrongCertificate()>& make_root) -> bool {
        auto kids = strong_children(c, order);
        if (!kids) return false;
        std::vector<StrongCertPtr> child_certs;
        for (const Complex& child : *kids) {
            StrongResult cr = recurse(child, budget);
            if (cr.verdict == Verdict::Unknown) {
                saw_unknown = true;
                return false;
            }
            if (cr.verdict == Verdict::No) return false;
            child_certs.push_back(*cr.certificate);
        }
        StrongCertificate root = make_root();
        root.children = std::move(child_certs);
        found = std::move(root);
        return true;
    };

    SearchStatus st = enumerate(saw_unknown, try_order, wrap);
    if (found)
        return StrongResult::yes(std::make_shared<const StrongCertificate>(std::move(*found)),
                                 budget.spent - start);
    if (st == SearchStatus::BudgetExhausted)
        return StrongResult::unknown("budget exhausted", budget.spent - start);
    if (saw_unknown)
        return StrongResult::unknown("search exhausted but sub-questions undecided",
                                     budget.spent - start, true);
    return StrongResult::no("no strong order exists (exhaustive)", budget.spent - start);
}

}  // namespace detail

inline StrongResult is_strongly_vertex_decomposable(const Complex& c, Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("strong vertex decomposability requires pure complex");
    const long long start = budget.spent;
    const int d = c.dim() + 1;

    auto& cache = detail::decomp_caches().strong_vd;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    if (d <= 3) {
        SheddingResult vd = is_vertex_decomposable(c, budget);
        if (vd.verdict == Verdict::Yes) {
            StrongCertificate cert;
            cert.node = StrongCertificate::Node::LowDim;
            cert.shedding = *vd.certificate;
            return cache[key] = StrongResult::yes(
                       std::make_shared<const StrongCertificate>(std::move(cert)),
                       budget.spent - start);
        }
        if (vd.verdict == Verdict::No)
            return cache[key] = StrongResult::no(
                       "not vertex-decomposable: " + vd.obstruction,
                       budget.spent - start);
        return StrongResult::unknown(vd.obstruction, budget.spent - start,
                                     vd.exhausted_search);
    }

    auto enumerate = [&](bool& saw_unknown, auto&& try_order, auto&& wrap) {
        return for_each_shedding_order(
            c, budget, saw_unknown,
            [&](const std::vector<Label>& order, const Face& remaining) {
                return try_order(order, [&]() { return wrap(order, remaining); });
            });
    };
    auto wrap = [](const std::vector<Label>& order, const Face& remaining) {
        StrongCertificate root;
        root.node = StrongCertificate::Node::SheddingOrder;
        root.shedding = SheddingCertificate{order, remaining};
        return root;
    };
    StrongResult res = detail::strong_order_search(
        c, budget, enumerate, wrap,
        [](const Complex& child, Budget& b) {
            return is_strongly_vertex_decomposable(child, b);
        });
    if (res.verdict != Verdict::Unknown) cache[key] = res;
    return res;
}

inline StrongResult is_strongly_shrinkable(const Complex& c, Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    if (!c.is_pure()) throw Error("strong shrinkability requires pure complex");
    const long long start = budget.spent;
    const int d = c.dim() + 1;

    auto& cache = detail::decomp_caches().strong_shrink;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    if (d <= 3 || is_simplex_boundary(c)) {
        ShrinkingResult sr = find_shrinking_order(c, budget);
        if (sr.verdict == Verdict::Yes) {
            StrongCertificate cert;
            cert.node = sr.certificate->simplex_base
                            ? StrongCertificate::Node::SimplexBoundary
                            : StrongCertificate::Node::LowDim;
            cert.shrinking = *sr.certificate;
            return cache[key] = StrongResult::yes(
                       std::make_shared<const StrongCertificate>(std::move(cert)),
                       budget.spent - start);
        }
        if (sr.verdict == Verdict::No)
            return cache[key] = StrongResult::no("not shrinkable: " + sr.obstruction,
                                                 budget.spent - start);
        return StrongResult::unknown(sr.obstruction, budget.spent - start,
                                     sr.exhausted_search);
    }

    auto enumerate = [&](bool& saw_unknown, auto&& try_order, auto&& wrap) {
        return for_each_shrinking_order(
            c, budget, saw_unknown,
            [&](const Face& sigma, const std::vector<Label>& order,
                const std::vector<ShellingCertificate>& certs) {
                return try_order(order, [&]() { return wrap(sigma, order, certs); });
            });
    };
    auto wrap = [](const Face& sigma, const std::vector<Label>& order,
                   const std::vector<ShellingCertificate>& certs) {
        StrongCertificate root;
        root.node = StrongCertificate::Node::ShrinkingOrder;
        ShrinkingCertificate sc;
        sc.base_facet = sigma;
        sc.order = order;
        sc.ball_certs = certs;
        root.shrinking = std::move(sc);
        return root;
    };
    StrongResult res = detail::strong_order_search(
        c, budget, enumerate, wrap,
        [](const Complex& child, Budget& b) { return is_strongly_shrinkable(child, b); });
    if (res.verdict != Verdict::Unknown) cache[key] = res;
    return res;
}

inline StrongResult is_strongly_edge_decomposable(const Complex& c, Budget& budget) {
    if (c.empty()) throw Error("empty complex");
    const long long start = budget.spent;

    auto& cache = detail::decomp_caches().strong_ed;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    if (is_simplex_boundary(c)) {
        StrongCertificate cert;
        cert.node = StrongCertificate::Node::SimplexBoundary;
        return cache[key] = StrongResult::yes(
                   std::make_shared<const StrongCertificate>(std::move(cert)), 0);
    }
    if (c.dim() == 2) {
        // Every 2-sphere is strongly edge decomposable, so sphere
        // certification settles this dimension outright.
        ShellingResult sp = certify_sphere(c, budget);
        if (sp.verdict == Verdict::Yes) {
            StrongCertificate cert;
            cert.node = StrongCertificate::Node::TwoSphere;
            cert.sphere_shelling = *sp.certificate;
            return cache[key] = StrongResult::yes(
                       std::make_shared<const StrongCertificate>(std::move(cert)),
                       budget.spent - start);
        }
        if (sp.verdict == Verdict::No)
            return cache[key] = StrongResult::no("not a 2-sphere: " + sp.obstruction,
                                                 budget.spent - start);
        return StrongResult::unknown(sp.obstruction, budget.spent - start,
                                     sp.exhausted_search);
    }
    if (c.dim() < 1)
        return cache[key] =
                   StrongResult::no("not the boundary of a simplex and has no edges", 0);

    bool saw_unknown = false;
    for (const Face& e : faces(c, 1)) {
        if (!budget.take())
            return StrongResult::unknown("budget exhausted", budget.spent - start);
        if (!satisfies_link_condition(c, e[0], e[1])) continue;
        StrongResult lk_res = is_strongly_edge_decomposable(link(c, e), budget);
        if (lk_res.verdict == Verdict::Unknown) {
            saw_unknown = true;
            continue;
        }
        if (lk_res.verdict == Verdict::No) continue;
        StrongResult con_res = is_strongly_edge_decomposable(contract_edge(c, e), budget);
        if (con_res.verdict == Verdict::Unknown) {
            saw_unknown = true;
            continue;
        }
        if (con_res.verdict == Verdict::No) continue;
        StrongCertificate cert;
        cert.node = StrongCertificate::Node::EdgeSplit;
        cert.edge = {e[0], e[1]};
        cert.children = {*lk_res.certificate, *con_res.certificate};
        return cache[key] = StrongResult::yes(
                   std::make_shared<const StrongCertificate>(std::move(cert)),
                   budget.spent - start);
    }
    if (saw_unknown)
        return StrongResult::unknown("all edges exhausted but sub-questions undecided",
                                     budget.spent - start, true);
    return cache[key] = StrongResult::no("no admissible edge decomposes (exhaustive)",
                                         budget.spent - start);
}

}  // namespace plsphere
