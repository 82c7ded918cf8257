#pragma once

// Stanley-Reisner face rings, artinian reductions and strong-Lefschetz
// witness search.
//
// The face ring A = F[x_v : v] / (monomials with non-face support) is
// handled degree by degree through monomial bases (exponent vectors whose
// support is a face).  An artinian reduction fixes d = dim+1 linear forms
// Θ and computes W_j = Σ_i θ_i·A_{j-1} by incremental column reduction;
// the quotient dimensions must equal the h-vector exactly when Θ is an
// l.s.o.p.  A strong-Lefschetz witness additionally certifies that
// multiplication by ω^{d-2j} has rank h_j from (A/Θ)_j to (A/Θ)_{d-j}.
//
// Random search runs over GF(p) (default p = 2^31-1) as a deliberate
// finite proxy for the infinite fields of the underlying theory.
// rational_verify then promotes a GF(p) witness to an exact statement
// over Q without ever running rational elimination: integer-verified
// Koszul syzygy columns give an upper bound on the rational rank of each
// W_j, the mod-p echelon gives the lower bound, and when the two meet the
// rational quotient dimensions and map ranks provably coincide with the
// GF(p) values.

#include <random>

#include "plsphere/gf.hpp"
#include "plsphere/vectors.hpp"

namespace plsphere {

// Coefficient vector aligned with the ascending vertex list of the
// complex in play.
using LinearForm = std::vector<fp_t>;

struct MonomialBasis {
    int degree = 0;
    std::vector<std::vector<int>> monomials;       // exponent vectors, lex order
    std::map<std::vector<int>, std::size_t> index;
};

namespace detail {

inline void enumerate_monomials(const Complex& c, const std::vector<Label>& verts,
                                std::vector<int>& exp, Face& support, std::size_t pos,
                                int remaining, MonomialBasis& out) {
    if (remaining == 0) {
        out.index[exp] = out.monomials.size();
        out.monomials.push_back(exp);
        return;
    }
    if (pos == verts.size()) return;
    // exponent 0 first keeps the enumeration in ascending lex order
    enumerate_monomials(c, verts, exp, support, pos + 1, remaining, out);
    support.push_back(verts[pos]);
    if (c.has_face(support)) {
        for (int e = 1; e <= remaining; ++e) {
            exp[pos] = e;
            enumerate_monomials(c, verts, exp, support, pos + 1, remaining - e, out);
        }
        exp[pos] = 0;
    }
    support.pop_back();
}

}  // namespace detail

inline MonomialBasis monomial_basis(const Complex& c, int j) {
    if (j < 0) throw Error("degree must be non-negative");
    MonomialBasis b;
    b.degree = j;
    const std::vector<Label> verts = c.vertices();
    std::vector<int> exp(verts.size(), 0);
    Face support;
    detail::enumerate_monomials(c, verts, exp, support, 0, j, b);
    return b;
}

namespace detail {

// Walk the expansion of θ·m inside A: for every vertex position t with a
// face-supported product, report (index of m·x_t in `next`, θ_t).
template <class Fn>
void for_each_product(const std::vector<Label>& verts, const MonomialBasis& next,
                      const std::vector<int>& m, const Fn& fn) {
    std::vector<int> prod = m;
    for (std::size_t t = 0; t < verts.size(); ++t) {
        ++prod[t];
        auto it = next.index.find(prod);
        if (it != next.index.end()) fn(it->second, t);
        --prod[t];
    }
}

}  // namespace detail

// Matrix of multiplication by θ from A_j to A_{j+1}, dense over GF(p).
inline FpMatrix multiplication_map(const Complex& c, const LinearForm& theta, int j,
                                   uint64_t p) {
    Fp F(p);
    const std::vector<Label> verts = c.vertices();
    if (theta.size() != verts.size()) throw Error("linear form has wrong length");
    MonomialBasis dom = monomial_basis(c, j);
    MonomialBasis codom = monomial_basis(c, j + 1);
    FpMatrix out = fp_matrix(codom.monomials.size(), dom.monomials.size());
    for (std::size_t col = 0; col < dom.monomials.size(); ++col)
        detail::for_each_product(verts, codom, dom.monomials[col],
                                 [&](std::size_t row, std::size_t t) {
                                     out.at(row, col) =
                                         F.add(out.at(row, col), F.reduce64(theta[t]));
                                 });
    return out;
}

struct ArtinianReduction {
    uint64_t p = 0;
    std::vector<Label> verts;
    std::vector<MonomialBasis> bases;  // degrees 0..d
    std::vector<ColumnReducer> w;      // echelon of W_j = Σ_i θ_i·A_{j-1}
    std::vector<long> dims;            // dim (A/Θ)_j
    std::vector<std::vector<std::vector<int>>> quotient_bases;  // non-pivot monomials
};

namespace detail {

// Column of θ_i·m over GF(p) inside basis `next`.
inline std::vector<fp_t> theta_column(const std::vector<Label>& verts, const Fp& F,
                                      const MonomialBasis& next, const LinearForm& theta,
                                      const std::vector<int>& m) {
    std::vector<fp_t> col(next.monomials.size(), 0);
    for_each_product(verts, next, m, [&](std::size_t row, std::size_t t) {
        col[row] = F.add(col[row], F.reduce64(theta[t]));
    });
    return col;
}

// expect: when non-null, abort as soon as some dim differs (witness
// search fails most trials early, at low degrees).
inline ArtinianReduction reduction_impl(const Complex& c,
                                        const std::vector<LinearForm>& thetas,
                                        uint64_t p, const std::vector<long>* expect,
                                        bool* matched) {
    if (c.empty() || !c.is_pure()) throw Error("artinian reduction requires pure complex");
    Fp F(p);
    const int d = c.dim() + 1;
    if (thetas.size() != static_cast<std::size_t>(d))
        throw Error("expected dim+1 linear forms");
    ArtinianReduction red;
    red.p = p;
    red.verts = c.vertices();
    for (const LinearForm& th : thetas)
        if (th.size() != red.verts.size()) throw Error("linear form has wrong length");
    if (matched) *matched = true;

    for (int j = 0; j <= d; ++j) {
        red.bases.push_back(monomial_basis(c, j));
        const MonomialBasis& basis = red.bases.back();
        ColumnReducer reducer(F, basis.monomials.size());
        if (j > 0) {
            const MonomialBasis& prev = red.bases[static_cast<std::size_t>(j) - 1];
            for (const LinearForm& th : thetas)
                for (const std::vector<int>& m : prev.monomials)
                    reducer.add(theta_column(red.verts, F, basis, th, m));
        }
        red.dims.push_back(static_cast<long>(basis.monomials.size() - reducer.rank()));
        std::vector<std::vector<int>> qb;
        for (std::size_t r : reducer.non_pivot_rows()) qb.push_back(basis.monomials[r]);
        red.quotient_bases.push_back(std::move(qb));
        red.w.push_back(std::move(reducer));
        if (expect && red.dims.back() != (*expect)[static_cast<std::size_t>(j)]) {
            if (matched) *matched = false;
            return red;
        }
    }
    return red;
}

}  // namespace detail

inline ArtinianReduction artinian_reduction(const Complex& c,
                                            const std::vector<LinearForm>& thetas,
                                            uint64_t p) {
    return detail::reduction_impl(c, thetas, p, nullptr, nullptr);
}

inline std::vector<long> h_vector_as_long(const Complex& c) {
    FHGVectors v = fhg_vectors(c);
    std::vector<long> h;
    for (const BigInt& x : v.h) h.push_back(x.convert_to<long>());
    return h;
}

inline bool check_lsop(const Complex& c, const std::vector<LinearForm>& thetas,
                       uint64_t p) {
    std::vector<long> h = h_vector_as_long(c);
    bool matched = false;
    detail::reduction_impl(c, thetas, p, &h, &matched);
    return matched;
}

struct LefschetzWitness {
    uint64_t p = 0;
    std::vector<Label> verts;               // coefficient order
    std::vector<LinearForm> thetas;         // d forms
    LinearForm omega;
    std::vector<long> dims;                 // quotient dims, degrees 0..d
    std::vector<long> ranks;                // rank of ω^{d-2j}, j = 0..⌊d/2⌋
    uint64_t seed = 0;
};

namespace detail {

// vec over A_s -> (multiplication by form) -> vec over A_{s+1}
inline std::vector<fp_t> apply_form(const std::vector<Label>& verts, const Fp& F,
                                    const MonomialBasis& dom, const MonomialBasis& codom,
                                    const LinearForm& form, const std::vector<fp_t>& vec) {
    std::vector<fp_t> out(codom.monomials.size(), 0);
    for (std::size_t i = 0; i < vec.size(); ++i) {
        if (vec[i] == 0) continue;
        for_each_product(verts, codom, dom.monomials[i],
                         [&](std::size_t row, std::size_t t) {
                             out[row] = F.add(out[row], F.mul(vec[i], F.reduce64(form[t])));
                         });
    }
    return out;
}

// Ranks of the maps ω^{d-2j}: (A/Θ)_j -> (A/Θ)_{d-j}: residual rank of
// the image columns modulo W_{d-j}.
inline std::vector<long> lefschetz_ranks(const ArtinianReduction& red,
                                         const LinearForm& omega) {
    Fp F(red.p);
    const int d = static_cast<int>(red.bases.size()) - 1;
    std::vector<long> ranks;
    for (int j = 0; 2 * j <= d; ++j) {
        const int target = d - j;
        ResidualRank rr(red.w[static_cast<std::size_t>(target)]);
        const std::size_t nj = red.bases[static_cast<std::size_t>(j)].monomials.size();
        for (std::size_t m = 0; m < nj; ++m) {
            std::vector<fp_t> vec(nj, 0);
            vec[m] = 1;
            for (int s = j; s < target; ++s)
                vec = apply_form(red.verts, F, red.bases[static_cast<std::size_t>(s)],
                                 red.bases[static_cast<std::size_t>(s) + 1], omega, vec);
            rr.add(vec);
        }
        ranks.push_back(static_cast<long>(rr.rank()));
    }
    return ranks;
}

}  // namespace detail

// Randomized witness search: up to `trials` independent draws of
// (thetas, ω) with coefficients uniform in [1, p-1]; a draw succeeds when
// the quotient dims equal the h-vector and every Lefschetz map has full
// rank h_j.  Trial t derives its RNG from (seed, t), so the result is
// deterministic and independent of scheduling.  Returning nullopt is not
// a disproof.
inline std::optional<LefschetzWitness> strong_lefschetz_witness(
    const Complex& c, uint64_t p, int trials, uint64_t seed,
    std::size_t quotient_dim_cap = 20000) {
    if (c.empty() || !c.is_pure()) throw Error("witness search requires pure complex");
    Fp F(p);
    FHGVectors v = fhg_vectors(c);
    if (!dehn_sommerville_holds(v)) throw Error("h-vector not symmetric");
    std::vector<long> h = h_vector_as_long(c);
    const int d = c.dim() + 1;
    const std::vector<Label> verts = c.vertices();
    const std::size_t n = verts.size();
    {
        MonomialBasis mid = monomial_basis(c, (d + 1) / 2);
        if (mid.monomials.size() > quotient_dim_cap)
            throw Error("quotient dimension cap exceeded");
    }

    for (int t = 0; t < trials; ++t) {
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                          static_cast<uint32_t>(t)};
        std::mt19937_64 gen(seq);
        std::uniform_int_distribution<uint64_t> dist(1, p - 1);
        std::vector<LinearForm> thetas(static_cast<std::size_t>(d));
        for (LinearForm& th : thetas) {
            th.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                th[i] = static_cast<fp_t>(dist(gen));
        }
        LinearForm omega(n);
        for (std::size_t i = 0; i < n; ++i)
            omega[i] = static_cast<fp_t>(dist(gen));

        bool matched = false;
        ArtinianReduction red = detail::reduction_impl(c, thetas, p, &h, &matched);
        if (!matched) continue;
        std::vector<long> ranks = detail::lefschetz_ranks(red, omega);
        bool full = true;
        for (std::size_t j = 0; j < ranks.size(); ++j)
            if (ranks[j] != h[j]) { full = false; break; }
        if (!full) continue;

        LefschetzWitness w;
        w.p = p;
        w.verts = verts;
        w.thetas = std::move(thetas);
        w.omega = std::move(omega);
        w.dims = red.dims;
        w.ranks = std::move(ranks);
        w.seed = seed;
        return w;
    }
    return std::nullopt;
}

// ---- exact-rational verification of a GF(p) witness ----

struct RationalCheck {
    bool ok = false;
    std::vector<long> dims;   // certified rational quotient dims
    std::vector<long> ranks;  // certified rational map ranks
    std::string detail;       // failure diagnostics
};

namespace detail {

// Integer-exact column of θ·m (coefficients lifted to [1, p-1] ⊂ Z),
// sparse as (row, value) pairs.
inline std::vector<std::pair<std::size_t, long long>> theta_column_int(
    const std::vector<Label>& verts, const MonomialBasis& next, const LinearForm& theta,
    const std::vector<int>& m) {
    std::vector<std::pair<std::size_t, long long>> col;
    for_each_product(verts, next, m, [&](std::size_t row, std::size_t t) {
        col.emplace_back(row, static_cast<long long>(theta[t]));
    });
    return col;
}

}  // namespace detail

// Promotes a GF(p) witness to characteristic zero.  For each degree j,
// the Koszul columns m''·(θ_l e_i − θ_i e_l) are verified to lie in the
// kernel of W_j by exact integer arithmetic; their rank mod p bounds the
// rational kernel from below, while the mod-p rank of W_j bounds its
// rational rank from below.  When the two meet the column count, the
// rational rank of W_j equals the GF(p) rank, hence the rational quotient
// dims equal the GF(p) dims.  The map ranks are then pinned between their
// mod-p values and the certified codomain dimensions, which coincide
// exactly when the witness is bijective and h is symmetric.  Any gap is
// reported as a failure; nothing is assumed.
inline RationalCheck rational_verify(const Complex& c, const LefschetzWitness& wit) {
    RationalCheck out;
    Fp F(wit.p);
    const int d = c.dim() + 1;

    FHGVectors v = fhg_vectors(c);
    if (!dehn_sommerville_holds(v)) {
        out.detail = "h-vector not symmetric";
        return out;
    }

    ArtinianReduction red = artinian_reduction(c, wit.thetas, wit.p);
    if (red.verts != wit.verts) {
        out.detail = "witness vertex order does not match complex";
        return out;
    }
    if (red.dims != wit.dims) {
        out.detail = "witness dims do not revalidate over GF(p)";
        return out;
    }
    std::vector<long> ranks = detail::lefschetz_ranks(red, wit.omega);
    if (ranks != wit.ranks) {
        out.detail = "witness ranks do not revalidate over GF(p)";
        return out;
    }

    for (int j = 1; j <= d; ++j) {
        const MonomialBasis& basis = red.bases[static_cast<std::size_t>(j)];
        const MonomialBasis& prev = red.bases[static_cast<std::size_t>(j) - 1];
        const std::size_t block = prev.monomials.size();
        const std::size_t cols = static_cast<std::size_t>(d) * block;
        const std::size_t w_rank = red.w[static_cast<std::size_t>(j)].rank();

        ColumnReducer syz(F, cols);
        if (j >= 2) {
            const MonomialBasis& pprev = red.bases[static_cast<std::size_t>(j) - 2];
            for (int i = 0; i < d; ++i) {
                for (int l = i + 1; l < d; ++l) {
                    for (const std::vector<int>& m2 : pprev.monomials) {
                        // syzygy column over the (form, monomial) index space
                        auto ei = detail::theta_column_int(
                            red.verts, prev, wit.thetas[static_cast<std::size_t>(l)], m2);
                        auto el = detail::theta_column_int(
                            red.verts, prev, wit.thetas[static_cast<std::size_t>(i)], m2);
                        std::vector<std::pair<std::size_t, long long>> entries;
                        for (auto& [row, val] : ei)
                            entries.emplace_back(static_cast<std::size_t>(i) * block + row,
                                                 val);
                        for (auto& [row, val] : el)
                            entries.emplace_back(static_cast<std::size_t>(l) * block + row,
                                                 -val);
                        // exact check: W_j (as an integer matrix) kills the column
                        std::vector<__int128> acc(basis.monomials.size(), 0);
                        for (auto& [pos, val] : entries) {
                            const std::size_t form_ix = pos / block;
                            const std::vector<int>& m = prev.monomials[pos % block];
                            for (auto& [row, coeff] : detail::theta_column_int(
                                     red.verts, basis, wit.thetas[form_ix], m))
                                acc[row] += static_cast<__int128>(val) * coeff;
                        }
                        for (__int128 a : acc)
                            if (a != 0) {
                                out.detail = "integer syzygy verification failed at degree " +
                                             std::to_string(j);
                                return out;
                            }
                        std::vector<fp_t> colp(cols, 0);
                        for (auto& [pos, val] : entries)
                            colp[pos] = F.add(colp[pos], F.from_int(val));
                        syz.add(std::move(colp));
                    }
                }
            }
        }
        if (w_rank + syz.rank() != cols) {
            out.detail = "rational rank bounds do not meet at degree " + std::to_string(j) +
                         " (rank " + std::to_string(w_rank) + " + kernel " +
                         std::to_string(syz.rank()) + " != " + std::to_string(cols) + ")";
            return out;
        }
    }

    for (int j = 0; 2 * j <= d; ++j) {
        const int target = d - j;
        const long quotient_dim =
            static_cast<long>(red.bases[static_cast<std::size_t>(target)].monomials.size() -
                              red.w[static_cast<std::size_t>(target)].rank());
        if (ranks[static_cast<std::size_t>(j)] != quotient_dim) {
            out.detail = "map rank not certified at j=" + std::to_string(j);
            return out;
        }
    }

    out.ok = true;
    out.dims = red.dims;
    out.ranks = ranks;
    return out;
}

}  // namespace plsphere
