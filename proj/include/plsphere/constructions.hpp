#pragma once

// Generators for the standard sphere and ball families.
//
// Label conventions: simplex boundaries and crosspolytopes use 0-based
// labels; cyclic polytopes use 1..n so Gale evenness reads off the labels
// directly.  join(a, b) relabels b by an offset to keep vertex sets
// disjoint; cone and suspension keep the input labels and add fresh apex
// labels above the current maximum.

#include <functional>
#include <numeric>

#include "plsphere/complex.hpp"

namespace plsphere {

inline Complex simplex(int d) {
    if (d < 0) throw Error("dimension must be non-negative");
    Face f(static_cast<std::size_t>(d) + 1);
    std::iota(f.begin(), f.end(), 0);
    return Complex::from_faces({f});
}

inline Complex simplex_boundary(int d) {
    if (d < 1) throw Error("simplex boundary requires dimension >= 1");
    std::vector<Face> fs;
    for (int skip = 0; skip <= d; ++skip) {
        Face f;
        for (int v = 0; v <= d; ++v)
            if (v != skip) f.push_back(v);
        fs.push_back(std::move(f));
    }
    return Complex::from_faces(std::move(fs));
}

// Boundary of the d-dimensional crosspolytope: vertices i and i+d are
// antipodal, facets pick one vertex from each antipodal pair.
inline Complex cross_polytope_boundary(int d) {
    if (d < 1) throw Error("crosspolytope requires dimension >= 1");
    std::vector<Face> fs;
    for (int mask = 0; mask < (1 << d); ++mask) {
        Face f;
        for (int i = 0; i < d; ++i)
            f.push_back((mask >> i) & 1 ? i + d : i);
        fs.push_back(sorted_face(std::move(f)));
    }
    return Complex::from_faces(std::move(fs));
}

// Boundary of the cyclic polytope C(n, d) on labels 1..n by Gale's
// evenness condition: S is a facet iff any two labels outside S have an
// even number of elements of S strictly between them.
inline Complex cyclic_polytope_boundary(int n, int d) {
    if (d < 2) throw Error("cyclic polytope requires dimension >= 2");
    if (n < d + 1) throw Error("cyclic polytope requires at least d+1 vertices");
    std::vector<Face> fs;
    std::vector<int> comb(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == d) {
            Face s(comb.begin(), comb.end());
            for (int i = 1; i <= n; ++i) {
                if (face_contains(s, i)) continue;
                for (int j = i + 1; j <= n; ++j) {
                    if (face_contains(s, j)) continue;
                    int between = 0;
                    for (int k : s)
                        if (i < k && k < j) ++between;
                    if (between % 2 != 0) return;
                }
            }
            fs.push_back(s);
            return;
        }
        for (int v = start; v <= n; ++v) {
            comb[static_cast<std::size_t>(chosen)] = v;
            rec(v + 1, chosen + 1);
        }
    };
    rec(1, 0);
    return Complex::from_faces(std::move(fs));
}

// Simplicial join; the second factor is relabelled above the first.
inline Complex join(const Complex& a, const Complex& b) {
    if (a.empty() || b.empty()) throw Error("join of empty complex");
    Label offset = 0;
    for (Label v : a.vertices()) offset = std::max(offset, v + 1);
    std::vector<Face> fs;
    for (const Face& f : a.facets())
        for (const Face& g : b.facets()) {
            Face h = f;
            for (Label v : g) h.push_back(v + offset);
            fs.push_back(sorted_face(std::move(h)));
        }
    return Complex::from_faces(std::move(fs));
}

inline Complex cone(const Complex& c, Label apex) {
    if (c.empty()) throw Error("cone over empty complex");
    if (c.has_vertex(apex)) throw Error("apex already a vertex");
    std::vector<Face> fs;
    for (Face f : c.facets()) {
        f.push_back(apex);
        fs.push_back(sorted_face(std::move(f)));
    }
    return Complex::from_faces(std::move(fs));
}

inline Label fresh_label(const Complex& c) {
    Label m = 0;
    for (Label v : c.vertices()) m = std::max(m, v + 1);
    return m;
}

inline Complex cone(const Complex& c) { return cone(c, fresh_label(c)); }

inline Complex suspension(const Complex& c) {
    if (c.empty()) throw Error("suspension of empty complex");
    Label north = fresh_label(c);
    Label south = north + 1;
    std::vector<Face> fs;
    for (const Face& f : c.facets()) {
        Face fn = f;
        fn.push_back(north);
        fs.push_back(sorted_face(std::move(fn)));
        Face fsouth = f;
        fsouth.push_back(south);
        fs.push_back(sorted_face(std::move(fsouth)));
    }
    return Complex::from_faces(std::move(fs));
}

// Γ(Σ) = (v0 * ∂Σ) ∪ Σ for a ball Σ: coning the boundary with a fresh
// apex closes the ball into a sphere of the same dimension.
inline Complex cone_over_boundary_union(const Complex& c, Label apex) {
    Complex bd = boundary(c);
    if (bd.empty()) throw Error("complex has empty boundary");
    if (c.has_vertex(apex)) throw Error("apex already a vertex");
    return complex_union(cone(bd, apex), c);
}

inline Complex cone_over_boundary_union(const Complex& c) {
    return cone_over_boundary_union(c, fresh_label(c));
}

inline std::string face_alias(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    s += "}";
    return s;
}

// Barycentric subdivision: one vertex per non-empty face (labelled by its
// index in the (size, lex)-ordering, with a readable alias), one facet
// per maximal chain of faces.
inline Complex barycentric_subdivision(const Complex& c) {
    if (c.empty() || c.dim() < 0) throw Error("subdivision of empty complex");
    std::vector<Face> all;
    for (int k = 0; k <= c.dim(); ++k) {
        auto fk = faces(c, k);
        all.insert(all.end(), fk.begin(), fk.end());
    }
    std::map<Face, Label> index;
    std::map<Label, std::string> aliases;
    for (std::size_t i = 0; i < all.size(); ++i) {
        index[all[i]] = static_cast<Label>(i);
        aliases[static_cast<Label>(i)] = face_alias(all[i]);
    }
    std::vector<Face> fs;
    // maximal chains: start from a facet and peel one vertex at a time
    std::function<void(const Face&, Face&)> descend = [&](const Face& cur, Face& chain) {
        chain.push_back(index.at(cur));
        if (cur.size() == 1) {
            fs.push_back(sorted_face(chain));
        } else {
            for (std::size_t i = 0; i < cur.size(); ++i) {
                Face next = cur;
                next.erase(next.begin() + static_cast<long>(i));
                descend(next, chain);
            }
        }
        chain.pop_back();
    };
    for (const Face& f : c.facets()) {
        Face chain;
        descend(f, chain);
    }
    Complex sd = Complex::from_faces(std::move(fs));
    sd.set_aliases(std::move(aliases));
    return sd;
}

}  // namespace plsphere
