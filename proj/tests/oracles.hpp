#pragma once

// Independent reference computations for the test suite.  Everything here
// recomputes results through a different route than the library — brute
// subset enumeration, polynomial convolution, exact rational elimination —
// so library outputs can be cross-checked value by value instead of being
// compared against themselves.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plsphere/complex.hpp"

namespace oracle {

using plsphere::Complex;
using plsphere::Face;
using plsphere::Label;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Every face of the complex (including the empty face), by enumerating
// all subsets of every facet.
inline std::set<Face> all_faces(const Complex& c) {
    std::set<Face> out;
    for (const Face& f : c.facets()) {
        const std::size_t n = f.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            Face s;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

// f[j] counts faces of cardinality j (f_{j-1} in the usual indexing).
inline std::vector<BigInt> f_vector(const Complex& c) {
    std::vector<BigInt> f(static_cast<std::size_t>(c.dim() + 2), 0);
    for (const Face& s : all_faces(c)) f[s.size()] += 1;
    return f;
}

// h-vector by expanding sum_i f_{i-1}(x-1)^{d-i} with explicit polynomial
// convolution and reading off the coefficient of x^{d-j}.
inline std::vector<BigInt> h_vector(const std::vector<BigInt>& f, int d) {
    std::vector<BigInt> poly(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        std::vector<BigInt> term{1};
        for (int t = 0; t < d - i; ++t) {
            std::vector<BigInt> next(term.size() + 1, 0);
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k + 1] += term[k];
                next[k] -= term[k];
            }
            term = std::move(next);
        }
        for (std::size_t k = 0; k < term.size(); ++k)
            poly[k] += f[static_cast<std::size_t>(i)] * term[k];
    }
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        h[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(d - j)];
    return h;
}

// Faces of star/link/antistar/deletion straight from the definitions.
inline std::set<Face> star_faces(const Complex& c, const Face& sigma) {
    std::set<Face> fs = all_faces(c), out;
    for (const Face& t : fs) {
        Face u;
        std::set_union(t.begin(), t.end(), sigma.begin(), sigma.end(),
                       std::back_inserter(u));
        if (fs.count(u)) out.insert(t);
    }
    return out;
}

inline std::set<Face> link_faces(const Complex& c, const Face& sigma) {
    std::set<Face> out;
    for (const Face& t : star_faces(c, sigma)) {
        bool disjoint = true;
        for (Label v : sigma)
            if (plsphere::face_contains(t, v)) disjoint = false;
        if (disjoint) out.insert(t);
    }
    return out;
}

inline std::set<Face> antistar_faces(const Complex& c, const Face& sigma) {
    std::set<Face> out;
    for (const Face& t : all_faces(c)) {
        bool disjoint = true;
        for (Label v : sigma)
            if (plsphere::face_contains(t, v)) disjoint = false;
        if (disjoint) out.insert(t);
    }
    return out;
}

inline std::set<Face> deletion_faces(const Complex& c, const Face& sigma) {
    std::set<Face> out;
    for (const Face& t : all_faces(c)) {
        bool contains_all = true;
        for (Label v : sigma)
            if (!plsphere::face_contains(t, v)) contains_all = false;
        if (!contains_all) out.insert(t);
    }
    return out;
}

// Boundary faces: subsets of ridges lying in exactly one facet.
inline std::set<Face> boundary_faces(const Complex& c) {
    std::map<Face, int> ridge_count;
    for (const Face& f : c.facets())
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            ++ridge_count[r];
        }
    std::set<Face> out;
    for (const auto& [r, n] : ridge_count) {
        if (n != 1) continue;
        const std::size_t k = r.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            Face s;
            for (std::size_t i = 0; i < k; ++i)
                if (m >> i & 1) s.push_back(r[i]);
            out.insert(s);
        }
    }
    return out;
}

// Library complex compared against an oracle face set.
inline bool faces_equal(const Complex& c, const std::set<Face>& want) {
    return all_faces(c) == want;
}

// Rank of a dense rational matrix by exact Gaussian elimination.
inline long rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[row][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] -= factor * m[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Reduced Betti numbers over the rationals from the augmented chain
// complex, built out of the brute-force face list.
inline std::vector<long> reduced_betti_q(const Complex& c) {
    const int d = c.dim();
    if (d < 0) return {};
    std::vector<std::vector<Face>> by_card(static_cast<std::size_t>(d) + 2);
    for (const Face& s : all_faces(c)) by_card[s.size()].push_back(s);
    for (auto& v : by_card) std::sort(v.begin(), v.end());

    // rank of the boundary map from cardinality k+1 to cardinality k
    std::vector<long> brank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 0; k <= d; ++k) {
        const auto& dom = by_card[static_cast<std::size_t>(k) + 1];
        const auto& cod = by_card[static_cast<std::size_t>(k)];
        std::map<Face, std::size_t> row;
        for (std::size_t i = 0; i < cod.size(); ++i) row[cod[i]] = i;
        std::vector<std::vector<Rat>> m(cod.size(), std::vector<Rat>(dom.size(), 0));
        for (std::size_t j = 0; j < dom.size(); ++j) {
            int sign = 1;
            for (std::size_t i = 0; i < dom[j].size(); ++i) {
                Face r = dom[j];
                r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
                m[row.at(r)][j] += sign;
                sign = -sign;
            }
        }
        brank[static_cast<std::size_t>(k) + 1] = rational_rank(std::move(m));
    }
    std::vector<long> betti(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long faces_k = static_cast<long>(by_card[static_cast<std::size_t>(k) + 1].size());
        betti[static_cast<std::size_t>(k)] =
            faces_k - brank[static_cast<std::size_t>(k) + 1] -
            (k + 2 <= d + 1 ? brank[static_cast<std::size_t>(k) + 2] : 0);
    }
    return betti;
}

// Independent shelling checker: the "old" part of each facet (subsets
// already covered by earlier facets) must have all its maximal members of
// cardinality |facet|-1, and at least one old subset must exist.
inline bool check_shelling_brute(const std::vector<Face>& order) {
    for (std::size_t j = 1; j < order.size(); ++j) {
        const Face& f = order[j];
        const std::size_t n = f.size();
        std::vector<Face> old_subsets;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            Face s;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) s.push_back(f[i]);
            bool old = false;
            for (std::size_t i = 0; i < j && !old; ++i)
                old = plsphere::face_subset(s, order[i]);
            if (old) old_subsets.push_back(s);
        }
        if (old_subsets.empty()) return false;
        for (const Face& s : old_subsets) {
            bool maximal = true;
            for (const Face& t : old_subsets)
                if (t.size() == s.size() + 1 && plsphere::face_subset(s, t))
                    maximal = false;
            if (maximal && s.size() + 1 != n) return false;
        }
    }
    return !order.empty();
}

// Monomials of degree j on the vertex set whose support is a face,
// enumerated independently of the library's basis builder.
inline std::vector<std::vector<int>> monomials(const Complex& c, int j) {
    const std::vector<Label> verts = c.vertices();
    const std::set<Face> fs = all_faces(c);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(verts.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == verts.size()) {
            if (left == 0) {
                Face supp;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (cur[i] > 0) supp.push_back(verts[i]);
                if (fs.count(supp)) out.push_back(cur);
            }
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, j);
    std::sort(out.begin(), out.end());
    return out;
}

struct RationalReduction {
    std::vector<long> dims;   // quotient dimensions, degrees 0..d
    std::vector<long> ranks;  // rank of omega^{d-2j} on the quotient, j = 0..floor(d/2)
};

// Exact rational artinian reduction: dims via rank of the column space
// spanned by theta_i * (degree j-1 monomials), Lefschetz ranks via
// rank([W | M]) - rank(W) where M multiplies by the omega power.  All
// arithmetic is dense cpp_rational elimination; intended for small
// instances only.
inline RationalReduction rational_reduction(
    const Complex& c, const std::vector<std::vector<long long>>& thetas,
    const std::vector<long long>& omega) {
    const int d = c.dim() + 1;
    const std::vector<Label> verts = c.vertices();
    const std::set<Face> fs = all_faces(c);

    std::vector<std::vector<std::vector<int>>> bases;
    for (int j = 0; j <= d; ++j) bases.push_back(monomials(c, j));

    auto index_of = [](const std::vector<std::vector<int>>& basis) {
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
        return idx;
    };

    // multiply a polynomial (map monomial -> coefficient) by sum_t coef[t]*x_t,
    // dropping monomials whose support is not a face
    auto multiply = [&](const std::map<std::vector<int>, Rat>& poly,
                        const std::vector<long long>& form) {
        std::map<std::vector<int>, Rat> out;
        for (const auto& [m, coef] : poly) {
            for (std::size_t t = 0; t < verts.size(); ++t) {
                if (form[t] == 0) continue;
                std::vector<int> prod = m;
                ++prod[t];
                Face supp;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (prod[i] > 0) supp.push_back(verts[i]);
                if (!fs.count(supp)) continue;
                out[prod] += coef * form[t];
            }
        }
        return out;
    };

    // W_j columns: theta_i * m over all i and all degree-(j-1) monomials m
    auto w_matrix = [&](int j) {
        const auto idx = index_of(bases[static_cast<std::size_t>(j)]);
        std::vector<std::vector<Rat>> cols;
        for (const auto& theta : thetas)
            for (const auto& mono : bases[static_cast<std::size_t>(j) - 1]) {
                std::map<std::vector<int>, Rat> poly{{mono, 1}};
                auto prod = multiply(poly, theta);
                std::vector<Rat> col(bases[static_cast<std::size_t>(j)].size(), 0);
                for (const auto& [mm, coef] : prod) col[idx.at(mm)] = coef;
                cols.push_back(std::move(col));
            }
        std::vector<std::vector<Rat>> out(bases[static_cast<std::size_t>(j)].size(),
                                          std::vector<Rat>(cols.size(), 0));
        for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
            for (std::size_t r = 0; r < cols[cidx].size(); ++r)
                out[r][cidx] = cols[cidx][r];
        return out;
    };

    RationalReduction red;
    red.dims.assign(static_cast<std::size_t>(d) + 1, 0);
    red.dims[0] = static_cast<long>(bases[0].size());
    std::vector<long> wrank(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 1; j <= d; ++j) {
        auto w = w_matrix(j);
        wrank[static_cast<std::size_t>(j)] = rational_rank(w);
        red.dims[static_cast<std::size_t>(j)] =
            static_cast<long>(bases[static_cast<std::size_t>(j)].size()) -
            wrank[static_cast<std::size_t>(j)];
    }

    for (int j = 0; 2 * j <= d; ++j) {
        const int power = d - 2 * j, target = d - j;
        const auto idx = index_of(bases[static_cast<std::size_t>(target)]);
        std::vector<std::vector<Rat>> aug = w_matrix(target);
        for (const auto& mono : bases[static_cast<std::size_t>(j)]) {
            std::map<std::vector<int>, Rat> poly{{mono, 1}};
            for (int t = 0; t < power; ++t) poly = multiply(poly, omega);
            std::vector<Rat> col(bases[static_cast<std::size_t>(target)].size(), 0);
            for (const auto& [mm, coef] : poly) col[idx.at(mm)] = coef;
            for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(col[r]);
        }
        long combined = rational_rank(std::move(aug));
        red.ranks.push_back(combined - wrank[static_cast<std::size_t>(target)]);
    }
    return red;
}

}  // namespace oracle
