#pragma once

// Pure simplicial complexes stored by their inclusion-maximal faces.
//
// Canonical form: every facet is a sorted vector of non-negative vertex
// labels, and the facet list itself is sorted lexicographically.  Equality
// is equality of this representation (label-sensitive, no isomorphism
// testing).  All values are immutable after construction and every
// operation is a pure function, so complexes can be shared freely across
// threads.
//
// Two degenerate complexes are representable (but rejected by the public
// parser entry point `from_facets`):
//   * the empty complex, with no faces at all (facet list = {}),
//   * the void complex {∅}, whose only face is the empty face
//     (facet list = {{}}); this is the boundary of a 0-simplex and shows
//     up as the link of an edge in a 1-sphere.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plsphere {

using Label = int;
using Face = std::vector<Label>;  // sorted ascending, no duplicates

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- sorted-vector set helpers ----

inline bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool face_contains(const Face& f, Label v) {
    return std::binary_search(f.begin(), f.end(), v);
}

inline Face face_union(const Face& a, const Face& b) {
    Face out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_minus(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face sorted_face(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

class Complex {
public:
    Complex() = default;  // the empty complex

    // Strict public constructor: rejects empty input, empty facets,
    // negative labels and duplicate labels within a facet.  Unsorted and
    // inclusion-subsumed input is fine; it is canonicalized here.
    static Complex from_facets(const std::vector<Face>& input) {
        if (input.empty()) throw Error("empty complex");
        std::vector<Face> fs;
        fs.reserve(input.size());
        for (const Face& f : input) {
            if (f.empty()) throw Error("empty facet");
            Face g = f;
            std::sort(g.begin(), g.end());
            if (!g.empty() && g.front() < 0) throw Error("negative vertex label");
            if (std::adjacent_find(g.begin(), g.end()) != g.end())
                throw Error("duplicate vertex in facet");
            fs.push_back(std::move(g));
        }
        return from_faces(std::move(fs));
    }

    // Internal constructor: any family of faces (possibly including the
    // empty face), generates the complex they span.
    static Complex from_faces(std::vector<Face> faces) {
        for (Face& f : faces) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
        }
        // keep only inclusion-maximal faces
        std::sort(faces.begin(), faces.end(),
                  [](const Face& a, const Face& b) { return a.size() > b.size(); });
        std::vector<Face> kept;
        for (const Face& f : faces) {
            bool covered = false;
            for (const Face& k : kept) {
                if (face_subset(f, k)) { covered = true; break; }
            }
            if (!covered) kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end());
        Complex c;
        c.facets_ = std::move(kept);
        return c;
    }

    const std::vector<Face>& facets() const { return facets_; }

    bool empty() const { return facets_.empty(); }

    // Dimension: -2 for the empty complex, -1 for {∅}.
    int dim() const {
        if (facets_.empty()) return -2;
        std::size_t m = 0;
        for (const Face& f : facets_) m = std::max(m, f.size());
        return static_cast<int>(m) - 1;
    }

    bool is_pure() const {
        for (const Face& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    std::vector<Label> vertices() const {
        Face v;
        for (const Face& f : facets_) v = face_union(v, f);
        return v;
    }

    bool has_vertex(Label v) const {
        for (const Face& f : facets_)
            if (face_contains(f, v)) return true;
        return false;
    }

    bool has_face(const Face& f) const {
        if (facets_.empty()) return false;
        for (const Face& g : facets_)
            if (face_subset(f, g)) return true;
        return false;
    }

    bool operator==(const Complex& o) const { return facets_ == o.facets_; }
    bool operator!=(const Complex& o) const { return facets_ != o.facets_; }

    // Optional display names for vertices (e.g. the face-index table of a
    // barycentric subdivision).  Not part of canonical equality.
    const std::map<Label, std::string>& aliases() const { return aliases_; }
    void set_aliases(std::map<Label, std::string> a) { aliases_ = std::move(a); }

private:
    std::vector<Face> facets_;
    std::map<Label, std::string> aliases_;
};

// All k-faces, deduplicated and lexicographically sorted.  k = -1 yields
// the empty face; k out of range yields the empty set.
inline std::vector<Face> faces(const Complex& c, int k) {
    if (c.empty()) return {};
    if (k == -1) return {Face{}};
    if (k < -1 || k > c.dim()) return {};
    const std::size_t want = static_cast<std::size_t>(k) + 1;
    std::vector<Face> out;
    Face comb;
    for (const Face& f : c.facets()) {
        if (f.size() < want) continue;
        // enumerate all `want`-subsets of f
        std::vector<std::size_t> idx(want);
        for (std::size_t i = 0; i < want; ++i) idx[i] = i;
        while (true) {
            comb.clear();
            for (std::size_t i : idx) comb.push_back(f[i]);
            out.push_back(comb);
            // next combination
            std::size_t i = want;
            while (i > 0 && idx[i - 1] == f.size() - (want - i) - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < want; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Number of k-faces without materializing them is not worth the code at
// desk scale; f-vectors just count the enumeration.

// st(σ, Σ): all τ with σ ∪ τ ∈ Σ.  Generated by the facets containing σ.
inline Complex star(const Complex& c, const Face& sigma_in) {
    Face sigma = sorted_face(sigma_in);
    if (!c.has_face(sigma)) throw Error("not a face");
    std::vector<Face> fs;
    for (const Face& f : c.facets())
        if (face_subset(sigma, f)) fs.push_back(f);
    return Complex::from_faces(std::move(fs));
}

// ast(σ, Σ): all τ with σ ∩ τ = ∅.
inline Complex antistar(const Complex& c, const Face& sigma_in) {
    Face sigma = sorted_face(sigma_in);
    std::vector<Face> fs;
    for (const Face& f : c.facets()) fs.push_back(face_minus(f, sigma));
    return Complex::from_faces(std::move(fs));
}

// lk(σ, Σ) = st(σ, Σ) ∩ ast(σ, Σ).
inline Complex link(const Complex& c, const Face& sigma_in) {
    Face sigma = sorted_face(sigma_in);
    if (!c.has_face(sigma)) throw Error("not a face");
    std::vector<Face> fs;
    for (const Face& f : c.facets())
        if (face_subset(sigma, f)) fs.push_back(face_minus(f, sigma));
    return Complex::from_faces(std::move(fs));
}

// Σ \ σ: all faces that do not contain σ.
inline Complex delete_face(const Complex& c, const Face& sigma_in) {
    Face sigma = sorted_face(sigma_in);
    std::vector<Face> fs;
    for (const Face& f : c.facets()) {
        if (!face_subset(sigma, f)) {
            fs.push_back(f);
        } else {
            // maximal subsets of f missing at least one vertex of σ
            for (Label v : sigma) {
                Face g = face_minus(f, Face{v});
                fs.push_back(std::move(g));
            }
        }
    }
    return Complex::from_faces(std::move(fs));
}

inline Complex delete_vertex(const Complex& c, Label v) {
    return delete_face(c, Face{v});
}

// Face-set intersection of two complexes.
inline Complex complex_intersection(const Complex& a, const Complex& b) {
    if (a.empty() || b.empty()) return Complex();
    std::vector<Face> fs;
    for (const Face& f : a.facets())
        for (const Face& g : b.facets())
            fs.push_back(face_intersection(f, g));
    return Complex::from_faces(std::move(fs));
}

// Face-set union of two complexes.
inline Complex complex_union(const Complex& a, const Complex& b) {
    std::vector<Face> fs = a.facets();
    fs.insert(fs.end(), b.facets().begin(), b.facets().end());
    return Complex::from_faces(std::move(fs));
}

struct Graph {
    std::vector<Label> vertices;
    std::vector<std::pair<Label, Label>> edges;  // pairs (u,v) with u < v, sorted

    bool has_edge(Label u, Label v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }
};

inline Graph one_skeleton(const Complex& c) {
    Graph g;
    g.vertices = c.vertices();
    for (const Face& e : faces(c, 1)) g.edges.emplace_back(e[0], e[1]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Complex generated by the codimension-1 faces lying in exactly one facet.
// Empty complex when the boundary is empty.
inline Complex boundary(const Complex& c) {
    if (!c.is_pure()) throw Error("boundary requires pure complex");
    if (c.empty() || c.dim() < 0) return Complex();
    std::map<Face, int> count;
    for (const Face& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face r = f;
            r.erase(r.begin() + static_cast<long>(i));
            ++count[r];
        }
    }
    std::vector<Face> ridges;
    for (const auto& [r, n] : count)
        if (n == 1) ridges.push_back(r);
    if (ridges.empty()) return Complex();
    return Complex::from_faces(std::move(ridges));
}

// True iff c is the boundary of a simplex: all (n-1)-subsets of an n-set.
// The void complex {∅} counts as the boundary of a 0-simplex.
inline bool is_simplex_boundary(const Complex& c) {
    if (c.empty()) return false;
    if (c.facets().size() == 1 && c.facets().front().empty()) return true;
    const std::vector<Label> verts = c.vertices();
    const std::size_t n = verts.size();
    if (c.facets().size() != n) return false;
    for (const Face& f : c.facets())
        if (f.size() + 1 != n) return false;
    return true;  // n distinct (n-1)-subsets of an n-set are all of them
}

// Flat integer key for memoization maps: sizes and labels of all facets.
inline std::vector<int32_t> facets_key(const Complex& c) {
    std::vector<int32_t> key;
    for (const Face& f : c.facets()) {
        key.push_back(static_cast<int32_t>(f.size()));
        for (Label v : f) key.push_back(v);
    }
    return key;
}

struct FacetsKeyHash {
    std::size_t operator()(const std::vector<int32_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int32_t x : k) {
            h ^= static_cast<std::size_t>(static_cast<uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace plsphere
