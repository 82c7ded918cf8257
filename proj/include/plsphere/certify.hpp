#pragma once

// PL-sphere / PL-ball certification.
//
// A shellable pseudomanifold without boundary is a PL-sphere, and one with
// non-empty boundary is a PL-ball, so a shelling order is a complete
// positive certificate.  Negative answers come from exact obstructions
// (purity, pseudomanifold defects, boundary presence, homology over two
// prime fields).  When neither route lands within budget the verdict is
// Unknown: a shelling search that exhausts its tree without success is
// still Unknown, flagged with exhausted_search, because non-shellable
// spheres exist.

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "plsphere/complex.hpp"
#include "plsphere/homology.hpp"

namespace plsphere {

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unknown";
    }
}

struct Budget {
    long long limit = 1000000;
    long long spent = 0;

    explicit Budget(long long lim = 1000000) : limit(lim) {}

    bool take(long long n = 1) {
        if (spent + n > limit) {
            spent = limit;
            return false;
        }
        spent += n;
        return true;
    }

    bool exhausted() const { return spent >= limit; }
};

template <class Cert>
struct TriState {
    Verdict verdict = Verdict::Unknown;
    std::optional<Cert> certificate;   // present iff verdict == Yes
    std::string obstruction;           // populated for No (and notes for Unknown)
    long long budget_spent = 0;
    bool exhausted_search = false;     // search space exhausted, not the budget

    static TriState yes(Cert cert, long long spent) {
        TriState t;
        t.verdict = Verdict::Yes;
        t.certificate = std::move(cert);
        t.budget_spent = spent;
        return t;
    }
    static TriState no(std::string why, long long spent) {
        TriState t;
        t.verdict = Verdict::No;
        t.obstruction = std::move(why);
        t.budget_spent = spent;
        return t;
    }
    static TriState unknown(std::string note, long long spent, bool exhausted_tree = false) {
        TriState t;
        t.obstruction = std::move(note);
        t.budget_spent = spent;
        t.exhausted_search = exhausted_tree;
        return t;
    }
};

struct ShellingCertificate {
    std::vector<Face> order;
};

using ShellingResult = TriState<ShellingCertificate>;

struct PseudomanifoldReport {
    bool is_pseudomanifold = false;
    std::string reason;                 // set when false
    std::vector<Face> boundary_ridges;  // ridges in exactly one facet
};

inline PseudomanifoldReport pseudomanifold_report(const Complex& c) {
    if (!c.is_pure()) throw Error("pseudomanifold check requires pure complex");
    PseudomanifoldReport rep;
    if (c.empty() || c.dim() < 0) {
        rep.reason = "no positive-dimensional facets";
        return rep;
    }
    const auto& fs = c.facets();
    std::map<Face, std::vector<std::size_t>> ridge_facets;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Face& f = fs[i];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face r = f;
            r.erase(r.begin() + static_cast<long>(j));
            ridge_facets[r].push_back(i);
        }
    }
    for (const auto& [r, owners] : ridge_facets) {
        if (owners.size() > 2) {
            rep.reason = "ridge contained in more than two facets";
            return rep;
        }
        if (owners.size() == 1) rep.boundary_ridges.push_back(r);
    }
    // facet adjacency connectivity via union-find
    std::vector<std::size_t> parent(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [r, owners] : ridge_facets)
        if (owners.size() == 2) parent[find(owners[0])] = find(owners[1]);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (find(i) != find(0)) {
            rep.reason = "facet adjacency graph disconnected";
            rep.boundary_ridges.clear();
            return rep;
        }
    }
    rep.is_pseudomanifold = true;
    return rep;
}

// Shelling condition for appending facet F after the facets in `used`:
// with I = {F ∩ G : G used}, the subfamily R of intersections of size
// |F|-1 must be non-empty and every member of I must lie in some member
// of R.  The empty face counts as the codimension-1 face of a vertex, so
// the same rule certifies 0-dimensional shellings.
inline bool shelling_step_ok(const std::vector<Face>& used, const Face& f) {
    std::vector<Face> inter;
    inter.reserve(used.size());
    for (const Face& g : used) inter.push_back(face_intersection(f, g));
    std::vector<const Face*> big;
    for (const Face& x : inter)
        if (x.size() + 1 == f.size()) big.push_back(&x);
    if (big.empty()) return false;
    for (const Face& x : inter) {
        bool covered = false;
        for (const Face* r : big)
            if (face_subset(x, *r)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

namespace detail {

inline bool shelling_dfs(const std::vector<Face>& fs, std::vector<Face>& order,
                         std::vector<bool>& used, Budget& budget, bool& budget_hit) {
    if (order.size() == fs.size()) return true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (used[i]) continue;
        if (!budget.take()) {
            budget_hit = true;
            return false;
        }
        if (!order.empty() && !shelling_step_ok(order, fs[i])) continue;
        used[i] = true;
        order.push_back(fs[i]);
        if (shelling_dfs(fs, order, used, budget, budget_hit)) return true;
        if (budget_hit) return false;
        order.pop_back();
        used[i] = false;
    }
    return false;
}

}  // namespace detail

// Backtracking search for a shelling order, lexicographically first.
inline ShellingResult shelling_search(const Complex& c, Budget& budget) {
    const long long start = budget.spent;
    if (c.empty() || c.dim() < 0)
        return ShellingResult::no("no positive-dimensional facets", 0);
    if (!c.is_pure())
        return ShellingResult::no("not pure", 0);
    const auto& fs = c.facets();
    std::vector<Face> order;
    std::vector<bool> used(fs.size(), false);
    bool budget_hit = false;
    if (detail::shelling_dfs(fs, order, used, budget, budget_hit))
        return ShellingResult::yes(ShellingCertificate{std::move(order)},
                                   budget.spent - start);
    if (budget_hit)
        return ShellingResult::unknown("budget exhausted", budget.spent - start);
    return ShellingResult::unknown("no shelling found (search space exhausted)",
                                   budget.spent - start, true);
}

// Independent certificate validation: re-checks the shelling condition
// step by step and that the order is a permutation of the facet list.
inline bool check_shelling(const Complex& c, const ShellingCertificate& cert) {
    if (cert.order.size() != c.facets().size()) return false;
    std::vector<Face> sorted = cert.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets()) return false;
    std::vector<Face> used;
    for (const Face& f : cert.order) {
        if (!used.empty() && !shelling_step_ok(used, f)) return false;
        used.push_back(f);
    }
    return true;
}

namespace detail {

enum class CertKind { Sphere, Ball };

struct CertCache {
    std::unordered_map<std::vector<int32_t>, ShellingResult, FacetsKeyHash> sphere;
    std::unordered_map<std::vector<int32_t>, ShellingResult, FacetsKeyHash> ball;
};

inline CertCache& cert_cache() {
    thread_local CertCache cache;
    return cache;
}

inline ShellingResult certify_impl(const Complex& c, Budget& budget, CertKind kind) {
    const long long start = budget.spent;
    if (c.empty() || c.dim() < 0)
        return ShellingResult::no("no positive-dimensional facets", 0);
    if (!c.is_pure()) return ShellingResult::no("not pure", 0);

    auto& cache = kind == CertKind::Sphere ? cert_cache().sphere : cert_cache().ball;
    auto key = facets_key(c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    PseudomanifoldReport pm = pseudomanifold_report(c);
    if (!pm.is_pseudomanifold)
        return cache[key] = ShellingResult::no("not a pseudomanifold: " + pm.reason, 0);
    if (kind == CertKind::Sphere && !pm.boundary_ridges.empty())
        return cache[key] = ShellingResult::no("non-empty boundary", 0);
    if (kind == CertKind::Ball && pm.boundary_ridges.empty())
        return cache[key] = ShellingResult::no("empty boundary", 0);

    for (uint64_t p : {uint64_t{2}, uint64_t{2147483647}}) {
        BettiVector b = reduced_betti(c, p);
        bool ok = kind == CertKind::Sphere ? betti_matches_sphere(b, c.dim())
                                           : betti_all_zero(b);
        if (!ok)
            return cache[key] =
                       ShellingResult::no("homology mismatch over GF(" +
                                              std::to_string(p) + ")",
                                          0);
    }

    ShellingResult sh = shelling_search(c, budget);
    if (sh.verdict == Verdict::Yes) {
        cache[key] = sh;
        return sh;
    }
    // Unknown: all obstruction tests passed but no shelling landed.
    ShellingResult out = ShellingResult::unknown(
        sh.exhausted_search ? "passes all obstruction tests but no shelling found"
                            : "budget exhausted during shelling search",
        budget.spent - start, sh.exhausted_search);
    return out;  // not cached: a bigger budget might still decide it
}

}  // namespace detail

// Drops this thread's memoized certification results.  Decided verdicts
// are warmth-independent, so this only matters for exercising budget
// semantics from a cold start.
inline void clear_certify_cache() {
    detail::cert_cache().sphere.clear();
    detail::cert_cache().ball.clear();
}

// Is c a PL (dim c)-sphere?  Yes certificates carry a shelling order.
inline ShellingResult certify_sphere(const Complex& c, Budget& budget) {
    return detail::certify_impl(c, budget, detail::CertKind::Sphere);
}

// Is c a PL (dim c)-ball?
inline ShellingResult certify_ball(const Complex& c, Budget& budget) {
    return detail::certify_impl(c, budget, detail::CertKind::Ball);
}

// Dimension-guarded variants: certifying "a d-ball" fails outright when
// the complex does not even have dimension d.
inline ShellingResult certify_ball_of_dim(const Complex& c, int want_dim, Budget& budget) {
    if (c.dim() != want_dim)
        return ShellingResult::no("wrong dimension: expected " + std::to_string(want_dim) +
                                      ", got " + std::to_string(c.dim()),
                                  0);
    return certify_ball(c, budget);
}

inline ShellingResult certify_sphere_of_dim(const Complex& c, int want_dim, Budget& budget) {
    if (c.dim() != want_dim)
        return ShellingResult::no("wrong dimension: expected " + std::to_string(want_dim) +
                                      ", got " + std::to_string(c.dim()),
                                  0);
    return certify_sphere(c, budget);
}

}  // namespace plsphere
