#pragma once

// Reduced simplicial homology ranks over GF(p).
//
// Uses the augmented chain complex (the empty face generates C_{-1}), so
// reduced Betti numbers come out directly:
//   b~_k = dim C_k - rank d_k - rank d_{k+1}.

#include <map>

#include "plsphere/complex.hpp"
#include "plsphere/gf.hpp"

namespace plsphere {

struct BettiVector {
    uint64_t p = 0;
    std::vector<long> betti;  // b~_0 .. b~_dim
};

inline BettiVector reduced_betti(const Complex& c, uint64_t p) {
    Fp F(p);
    BettiVector out;
    out.p = p;
    const int d = c.dim();
    if (d < 0) return out;

    std::vector<std::vector<Face>> fk(static_cast<std::size_t>(d) + 2);
    std::vector<std::map<Face, std::size_t>> index(static_cast<std::size_t>(d) + 2);
    for (int k = -1; k <= d; ++k) {
        fk[static_cast<std::size_t>(k + 1)] = faces(c, k);
        auto& ix = index[static_cast<std::size_t>(k + 1)];
        for (std::size_t i = 0; i < fk[static_cast<std::size_t>(k + 1)].size(); ++i)
            ix[fk[static_cast<std::size_t>(k + 1)][i]] = i;
    }

    // rank of each boundary map d_k : C_k -> C_{k-1}, for k = 0..d
    std::vector<std::size_t> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 0; k <= d; ++k) {
        const auto& dom = fk[static_cast<std::size_t>(k + 1)];
        const auto& codom_ix = index[static_cast<std::size_t>(k)];
        ColumnReducer red(F, fk[static_cast<std::size_t>(k)].size());
        std::vector<fp_t> col;
        for (const Face& s : dom) {
            col.assign(red.height(), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Face t = s;
                t.erase(t.begin() + static_cast<long>(i));
                fp_t sign = (i % 2 == 0) ? 1 : F.neg(1);
                col[codom_ix.at(t)] = sign;
            }
            red.add(col);
        }
        rank[static_cast<std::size_t>(k)] = red.rank();
    }

    out.betti.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        std::size_t nk = fk[static_cast<std::size_t>(k + 1)].size();
        std::size_t rk = rank[static_cast<std::size_t>(k)];
        std::size_t rk1 = (k + 1 <= d) ? rank[static_cast<std::size_t>(k + 1)] : 0;
        out.betti[static_cast<std::size_t>(k)] = static_cast<long>(nk - rk - rk1);
    }
    return out;
}

// Betti vector expected of a (dim)-sphere: (0, ..., 0, 1).
inline bool betti_matches_sphere(const BettiVector& b, int dim) {
    if (b.betti.size() != static_cast<std::size_t>(dim) + 1) return false;
    for (int k = 0; k < dim; ++k)
        if (b.betti[static_cast<std::size_t>(k)] != 0) return false;
    return b.betti[static_cast<std::size_t>(dim)] == 1;
}

inline bool betti_all_zero(const BettiVector& b) {
    for (long x : b.betti)
        if (x != 0) return false;
    return true;
}

}  // namespace plsphere
