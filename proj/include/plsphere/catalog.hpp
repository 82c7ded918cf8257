#pragma once

// Named desk-scale instance catalog: standard sphere families (simplex
// boundaries, crosspolytopes, cyclic polytopes, suspensions, barycentric
// subdivisions) and a stock of vertex-decomposable balls (simplices,
// paths, fans, vertex stars and deletions, subdivisions, cones).

#include "plsphere/constructions.hpp"
#include "plsphere/json_io.hpp"

namespace plsphere {

inline Complex path_complex(int k) {
    if (k < 1) throw Error("path needs at least one edge");
    std::vector<Face> fs;
    for (int i = 0; i < k; ++i) fs.push_back({i, i + 1});
    return Complex::from_faces(std::move(fs));
}

// Fan of k triangles: cone over a path with k edges.
inline Complex fan_complex(int k) { return cone(path_complex(k)); }

inline std::vector<NamedComplex> catalog_spheres() {
    std::vector<NamedComplex> out;
    for (int d = 1; d <= 6; ++d)
        out.push_back({"boundary-simplex-" + std::to_string(d), simplex_boundary(d)});
    for (int d = 2; d <= 5; ++d)
        out.push_back({"cross-" + std::to_string(d), cross_polytope_boundary(d)});
    for (int n = 5; n <= 8; ++n)
        out.push_back({"cyclic-" + std::to_string(n) + "-4", cyclic_polytope_boundary(n, 4)});
    out.push_back({"susp-boundary-simplex-2", suspension(simplex_boundary(2))});
    out.push_back({"susp-susp-boundary-simplex-2",
                   suspension(suspension(simplex_boundary(2)))});
    out.push_back({"susp-cross-3", suspension(cross_polytope_boundary(3))});
    out.push_back({"susp-cyclic-6-4", suspension(cyclic_polytope_boundary(6, 4))});
    out.push_back({"sd-boundary-simplex-3", barycentric_subdivision(simplex_boundary(3))});
    out.push_back({"sd-cross-3", barycentric_subdivision(cross_polytope_boundary(3))});
    return out;
}

inline std::vector<NamedComplex> catalog_balls() {
    std::vector<NamedComplex> out;
    for (int d = 1; d <= 6; ++d)
        out.push_back({"simplex-" + std::to_string(d), simplex(d)});
    for (int k = 2; k <= 4; ++k)
        out.push_back({"path-" + std::to_string(k), path_complex(k)});
    for (int k = 2; k <= 5; ++k)
        out.push_back({"fan-" + std::to_string(k), fan_complex(k)});
    out.push_back({"sd-simplex-2", barycentric_subdivision(simplex(2))});
    out.push_back({"star-cross-3-0", star(cross_polytope_boundary(3), Face{0})});
    out.push_back({"del-cross-3-0", delete_vertex(cross_polytope_boundary(3), 0)});
    out.push_back({"star-cross-4-0", star(cross_polytope_boundary(4), Face{0})});
    out.push_back({"del-cross-4-0", delete_vertex(cross_polytope_boundary(4), 0)});
    out.push_back({"star-cyclic-6-4-1", star(cyclic_polytope_boundary(6, 4), Face{1})});
    out.push_back({"del-cyclic-6-4-1", delete_vertex(cyclic_polytope_boundary(6, 4), 1)});
    out.push_back({"cone-fan-3", cone(fan_complex(3))});
    out.push_back({"cone-sd-simplex-2", cone(barycentric_subdivision(simplex(2)))});
    out.push_back(
        {"star-sd-cross-3-0", star(barycentric_subdivision(cross_polytope_boundary(3)), Face{0})});
    return out;
}

inline const NamedComplex* catalog_find(const std::vector<NamedComplex>& cat,
                                        const std::string& name) {
    for (const NamedComplex& nc : cat)
        if (nc.name == name) return &nc;
    return nullptr;
}

}  // namespace plsphere
