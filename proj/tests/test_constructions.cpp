#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "plsphere/certify.hpp"
#include "plsphere/constructions.hpp"
#include "plsphere/homology.hpp"

using namespace plsphere;

TEST_CASE("simplex and simplex boundary") {
    REQUIRE(simplex(0) == Complex::from_facets({{0}}));
    REQUIRE(simplex(3).facets() == std::vector<Face>{{0, 1, 2, 3}});
    REQUIRE_THROWS_WITH(simplex(-1), "dimension must be non-negative");

    Complex t = simplex_boundary(3);
    REQUIRE(t.dim() == 2);
    REQUIRE(t.facets().size() == 4);
    REQUIRE(t == boundary(simplex(3)));
    REQUIRE_THROWS_WITH(simplex_boundary(0), "simplex boundary requires dimension >= 1");
}

TEST_CASE("cross polytope boundary") {
    Complex s0 = cross_polytope_boundary(1);
    REQUIRE(s0 == Complex::from_facets({{0}, {1}}));

    Complex oct = cross_polytope_boundary(3);
    REQUIRE(oct.dim() == 2);
    REQUIRE(oct.vertices().size() == 6);
    REQUIRE(oct.facets().size() == 8);
    // i and i+d are antipodal: never in a common facet
    for (const Face& f : oct.facets())
        for (Label i : {0, 1, 2})
            REQUIRE_FALSE((face_contains(f, i) && face_contains(f, i + 3)));

    REQUIRE(cross_polytope_boundary(5).facets().size() == 32);
    REQUIRE_THROWS_WITH(cross_polytope_boundary(0), "crosspolytope requires dimension >= 1");
}

TEST_CASE("cyclic polytope boundary via Gale evenness") {
    // facet counts n(n-3)/2 for d = 4
    REQUIRE(cyclic_polytope_boundary(6, 4).facets().size() == 9);
    REQUIRE(cyclic_polytope_boundary(7, 4).facets().size() == 14);
    REQUIRE(cyclic_polytope_boundary(8, 4).facets().size() == 20);

    // labels run 1..n
    Complex c = cyclic_polytope_boundary(7, 4);
    REQUIRE(c.vertices().front() == 1);
    REQUIRE(c.vertices().back() == 7);

    // 2-neighbourly: every vertex pair is an edge
    REQUIRE(faces(c, 1).size() == 21);

    // contiguous runs satisfy Gale evenness: {1,2,3,4} is a facet,
    // {1,3,5,7} leaves odd gaps and is not
    REQUIRE(c.has_face(Face{1, 2, 3, 4}));
    REQUIRE_FALSE(c.has_face(Face{1, 3, 5, 7}));

    // C(d+1, d) is the boundary of a simplex on shifted labels
    Complex minimal = cyclic_polytope_boundary(5, 4);
    REQUIRE(is_simplex_boundary(minimal));
    REQUIRE(minimal != simplex_boundary(4));  // labels 1..5 vs 0..4

    // 3-dimensional instance: stacked-like sphere with n(n-3)/2 + something
    Complex c63 = cyclic_polytope_boundary(6, 3);
    REQUIRE(c63.dim() == 2);
    Budget b;
    REQUIRE(certify_sphere(c63, b).verdict == Verdict::Yes);

    REQUIRE_THROWS_WITH(cyclic_polytope_boundary(6, 1),
                        "cyclic polytope requires dimension >= 2");
    REQUIRE_THROWS_WITH(cyclic_polytope_boundary(4, 4),
                        "cyclic polytope requires at least d+1 vertices");
}

TEST_CASE("join relabels the second factor") {
    Complex s0 = Complex::from_facets({{0}, {1}});
    Complex square = join(s0, s0);
    REQUIRE(square == Complex::from_facets({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

    // join of sphere boundaries is a sphere: S0 * S0 * S0 = octahedron-like
    Complex oct = join(join(s0, s0), s0);
    REQUIRE(oct.dim() == 2);
    REQUIRE(oct.facets().size() == 8);
    Budget b;
    REQUIRE(certify_sphere(oct, b).verdict == Verdict::Yes);

    REQUIRE_THROWS_WITH(join(Complex(), s0), "join of empty complex");
}

TEST_CASE("cone and suspension") {
    Complex tri = simplex_boundary(2);
    Complex c = cone(tri, 5);
    REQUIRE(c == Complex::from_facets({{0, 1, 5}, {0, 2, 5}, {1, 2, 5}}));
    REQUIRE_THROWS_WITH(cone(tri, 1), "apex already a vertex");
    REQUIRE_THROWS_WITH(cone(Complex(), 0), "cone over empty complex");
    REQUIRE(fresh_label(tri) == 3);
    REQUIRE(cone(tri) == cone(tri, 3));

    Complex s0 = Complex::from_facets({{0}, {1}});
    REQUIRE(suspension(s0) == Complex::from_facets({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    REQUIRE_THROWS_WITH(suspension(Complex()), "suspension of empty complex");

    // suspension preserves sphericity one dimension up
    Budget b;
    Complex s2 = suspension(suspension(s0));
    REQUIRE(s2.dim() == 2);
    REQUIRE(certify_sphere(s2, b).verdict == Verdict::Yes);
}

TEST_CASE("coning the boundary closes a ball into a sphere") {
    // the closure of a solid triangle is the tetrahedron boundary, on the
    // nose: the fresh apex is the next label
    REQUIRE(cone_over_boundary_union(simplex(2)) == simplex_boundary(3));

    Complex fan = star(cross_polytope_boundary(3), Face{0});
    Complex closed = cone_over_boundary_union(fan);
    Budget b;
    REQUIRE(certify_sphere(closed, b).verdict == Verdict::Yes);
    REQUIRE(closed.dim() == fan.dim());

    REQUIRE_THROWS_WITH(cone_over_boundary_union(simplex_boundary(3)),
                        "complex has empty boundary");
}

TEST_CASE("barycentric subdivision") {
    // sd of a single edge: apex vertex 2 = face {0,1}, two small edges
    Complex e = barycentric_subdivision(simplex(1));
    REQUIRE(e == Complex::from_facets({{0, 2}, {1, 2}}));
    REQUIRE(e.aliases().at(2) == "{0,1}");
    REQUIRE(e.aliases().at(0) == "{0}");

    // facet counts multiply by (dim+1)!
    REQUIRE(barycentric_subdivision(simplex_boundary(2)).facets().size() == 6);
    REQUIRE(barycentric_subdivision(simplex_boundary(3)).facets().size() == 24);
    REQUIRE(barycentric_subdivision(cross_polytope_boundary(3)).facets().size() == 48);

    // subdivision preserves homology
    Complex oct = cross_polytope_boundary(3);
    Complex sd = barycentric_subdivision(oct);
    REQUIRE(reduced_betti(sd, 2).betti == reduced_betti(oct, 2).betti);
    REQUIRE(reduced_betti(sd, 2147483647).betti == reduced_betti(oct, 2147483647).betti);
    Budget b;
    REQUIRE(certify_sphere(sd, b).verdict == Verdict::Yes);

    REQUIRE_THROWS_WITH(barycentric_subdivision(Complex()), "subdivision of empty complex");
}
