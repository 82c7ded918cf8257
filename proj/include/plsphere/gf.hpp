#pragma once

// Dense linear algebra over a prime field GF(p), p < 2^31.
//
// The workhorse is ColumnReducer, an incremental column-echelon structure
// supporting three operations: insert a column (tracking rank), reduce a
// column against the current basis without inserting it (residual /
// membership query), and read off the non-pivot row indices (a basis of
// the cokernel).  All arithmetic fits in uint64_t; p = 2^31 - 1 gets a
// branch-free Mersenne reduction since it dominates the workloads here.

#include <cstdint>
#include <vector>

#include "plsphere/complex.hpp"

namespace plsphere {

using fp_t = uint32_t;

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Fp {
    uint64_t p;
    bool mersenne31;

    explicit Fp(uint64_t p_) : p(p_), mersenne31(p_ == 2147483647ull) {
        if (!is_prime_u64(p_)) throw Error("field modulus not prime");
        if (p_ > 2147483647ull) throw Error("field modulus too large");
    }

    fp_t reduce64(uint64_t x) const {
        if (mersenne31) {
            x = (x & 0x7fffffffull) + (x >> 31);
            x = (x & 0x7fffffffull) + (x >> 31);
            if (x >= p) x -= p;
            return static_cast<fp_t>(x);
        }
        return static_cast<fp_t>(x % p);
    }

    fp_t add(fp_t a, fp_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        if (s >= p) s -= p;
        return static_cast<fp_t>(s);
    }

    fp_t sub(fp_t a, fp_t b) const {
        return a >= b ? a - b : static_cast<fp_t>(a + p - b);
    }

    fp_t neg(fp_t a) const { return a == 0 ? 0 : static_cast<fp_t>(p - a); }

    fp_t mul(fp_t a, fp_t b) const {
        return reduce64(static_cast<uint64_t>(a) * b);
    }

    fp_t pow(fp_t a, uint64_t e) const {
        fp_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    fp_t inv(fp_t a) const {
        if (a == 0) throw Error("division by zero in GF(p)");
        return pow(a, p - 2);
    }

    // signed integer -> field element
    fp_t from_int(long long x) const {
        long long m = x % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<fp_t>(m);
    }
};

// dst -= k * src, elementwise over GF(p)
inline void axpy_sub(const Fp& F, std::vector<fp_t>& dst, fp_t k,
                     const std::vector<fp_t>& src) {
    if (k == 0) return;
    const std::size_t n = dst.size();
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = F.sub(dst[i], F.mul(k, src[i]));
}

class ColumnReducer {
public:
    ColumnReducer(Fp field, std::size_t height)
        : field_(field), height_(height), pivot_of_row_(height, -1) {}

    std::size_t rank() const { return basis_.size(); }
    std::size_t height() const { return height_; }
    const Fp& field() const { return field_; }

    // Reduce `col` against the stored basis; the result has zeros in all
    // pivot rows.  Does not modify the reducer.
    std::vector<fp_t> residual(std::vector<fp_t> col) const {
        for (std::size_t r = 0; r < height_; ++r) {
            if (col[r] == 0) continue;
            int b = pivot_of_row_[r];
            if (b < 0) continue;
            axpy_sub(field_, col, col[r], basis_[static_cast<std::size_t>(b)]);
        }
        return col;
    }

    // Insert a column; returns true if it increased the rank.
    bool add(std::vector<fp_t> col) {
        for (std::size_t r = 0; r < height_; ++r) {
            if (col[r] == 0) continue;
            int b = pivot_of_row_[r];
            if (b >= 0) {
                axpy_sub(field_, col, col[r], basis_[static_cast<std::size_t>(b)]);
                continue;
            }
            // new pivot at row r: normalize so the pivot entry is 1
            fp_t s = field_.inv(col[r]);
            for (std::size_t i = r; i < height_; ++i)
                if (col[i] != 0) col[i] = field_.mul(col[i], s);
            pivot_of_row_[r] = static_cast<int>(basis_.size());
            basis_.push_back(std::move(col));
            return true;
        }
        return false;
    }

    std::vector<std::size_t> non_pivot_rows() const {
        std::vector<std::size_t> out;
        for (std::size_t r = 0; r < height_; ++r)
            if (pivot_of_row_[r] < 0) out.push_back(r);
        return out;
    }

private:
    Fp field_;
    std::size_t height_;
    std::vector<int> pivot_of_row_;           // row -> basis index, -1 if free
    std::vector<std::vector<fp_t>> basis_;    // reduced columns, pivot entry 1
};

// Rank of the span of a set of extra columns modulo an existing column
// space: reduce each column to its residual, then eliminate the residuals
// against each other.
class ResidualRank {
public:
    explicit ResidualRank(const ColumnReducer& base)
        : base_(base), side_(base.field(), base.height()) {}

    bool add(const std::vector<fp_t>& col) { return side_.add(base_.residual(col)); }
    std::size_t rank() const { return side_.rank(); }

private:
    const ColumnReducer& base_;
    ColumnReducer side_;
};

struct FpMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<fp_t> a;  // row-major

    fp_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    fp_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::vector<fp_t> column(std::size_t c) const {
        std::vector<fp_t> out(rows);
        for (std::size_t r = 0; r < rows; ++r) out[r] = a[r * cols + c];
        return out;
    }
};

inline FpMatrix fp_matrix(std::size_t rows, std::size_t cols) {
    FpMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows * cols, 0);
    return m;
}

inline std::size_t fp_rank(const Fp& F, const FpMatrix& m) {
    ColumnReducer red(F, m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) red.add(m.column(c));
    return red.rank();
}

}  // namespace plsphere
