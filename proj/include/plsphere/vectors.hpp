#pragma once

// Face-count calculus: f-, h- and g-vectors with arbitrary-precision
// integer entries, plus the inverse transform and the Dehn–Sommerville
// symmetry test.

#include <boost/multiprecision/cpp_int.hpp>

#include "plsphere/complex.hpp"

namespace plsphere {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Convention: indices run over j = 0..d where d = dim + 1, with
// f[-1] stored at position 0 (so f[j] holds f_{j-1}, the number of
// (j-1)-dimensional faces, and f[0] = 1 for the empty face).
struct FHGVectors {
    int d = 0;                 // dim + 1
    std::vector<BigInt> f;     // length d+1, f[j] = f_{j-1}
    std::vector<BigInt> h;     // length d+1
    std::vector<BigInt> g;     // length floor(d/2)+1, g[j] = h_j - h_{j-1}
};

// h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}
inline std::vector<BigInt> f_to_h(const std::vector<BigInt>& f, int d) {
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        BigInt s = 0;
        for (int i = 0; i <= j; ++i) {
            BigInt t = binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
            if ((j - i) % 2 == 0)
                s += t;
            else
                s -= t;
        }
        h[static_cast<std::size_t>(j)] = s;
    }
    return h;
}

// Inverse transform: f_{j-1} = sum_{i=0}^{j} C(d-i, j-i) h_i.
// Requires h of length d+1 with h_0 = 1.
inline std::vector<BigInt> h_to_f(const std::vector<BigInt>& h, int d) {
    if (h.size() != static_cast<std::size_t>(d) + 1)
        throw Error("h-vector has wrong length");
    if (h.empty() || h[0] != 1) throw Error("h-vector must start with 1");
    std::vector<BigInt> f(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        BigInt s = 0;
        for (int i = 0; i <= j; ++i)
            s += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(j)] = s;
    }
    return f;
}

inline FHGVectors fhg_vectors(const Complex& c) {
    if (c.empty()) throw Error("empty complex has no face vector");
    if (!c.is_pure()) throw Error("h-vector requires pure complex");
    FHGVectors v;
    v.d = c.dim() + 1;
    v.f.resize(static_cast<std::size_t>(v.d) + 1);
    for (int j = 0; j <= v.d; ++j)
        v.f[static_cast<std::size_t>(j)] = static_cast<long>(faces(c, j - 1).size());
    v.h = f_to_h(v.f, v.d);
    v.g.resize(static_cast<std::size_t>(v.d / 2) + 1);
    v.g[0] = 1;
    for (int j = 1; j <= v.d / 2; ++j)
        v.g[static_cast<std::size_t>(j)] =
            v.h[static_cast<std::size_t>(j)] - v.h[static_cast<std::size_t>(j) - 1];
    return v;
}

inline bool dehn_sommerville_holds(const FHGVectors& v) {
    for (int j = 0; j <= v.d; ++j)
        if (v.h[static_cast<std::size_t>(j)] != v.h[static_cast<std::size_t>(v.d - j)])
            return false;
    return true;
}

}  // namespace plsphere
