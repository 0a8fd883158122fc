#include <catch2/catch_amalgamated.hpp>

#include "surfmap/genlab.hpp"
#include "surfmap/io.hpp"
#include "surfmap/map.hpp"

using namespace surfmap;

TEST_CASE("single triangle doubles into a sphere") {
    auto m = fixture_sphere_triangle();
    CHECK(m.vertex_count == 3);
    CHECK(m.num_edges() == 3);
    CHECK(m.num_faces() == 2);
    for (const auto& w : m.faces) {
        CHECK(w.length == 3);
        CHECK(w.is_simple);
    }
    auto g = euler_genus(m);
    CHECK(g.genus == 0);
    CHECK(g.orientable);
}

TEST_CASE("toroidal K7 fixture") {
    auto m = fixture_k7_torus();
    CHECK(m.vertex_count == 7);
    CHECK(m.num_edges() == 21);
    CHECK(m.num_faces() == 14);
    auto g = euler_genus(m);
    CHECK(g.genus == 2);
    CHECK(g.orientable);
    CHECK(is_closed_triangulation(m));
}

TEST_CASE("projective K6 fixture") {
    auto m = fixture_k6_projective();
    CHECK(m.vertex_count == 6);
    CHECK(m.num_edges() == 15);
    CHECK(m.num_faces() == 10);
    auto g = euler_genus(m);
    CHECK(g.genus == 1);
    CHECK_FALSE(g.orientable);
    CHECK(is_closed_triangulation(m));
}

TEST_CASE("torus grids") {
    auto m = torus_grid(3, 3);
    CHECK(m.vertex_count == 9);
    CHECK(m.num_edges() == 27);
    CHECK(m.num_faces() == 18);
    auto g = euler_genus(m);
    CHECK(g.genus == 2);
    CHECK(g.orientable);
    CHECK(is_closed_triangulation(m));
    for (const auto& w : m.faces) CHECK((w.length == 3 && w.is_simple));
    CHECK_THROWS_AS(torus_grid(2, 5), Error);

    auto big = torus_grid(5, 5);
    CHECK(validate_triangulation(big).ok);
    CHECK(euler_genus(big).genus == 2);
}

TEST_CASE("face subdivision counts and tags") {
    auto k7 = face_subdivision(fixture_k7_torus());
    CHECK(k7.vertex_count == 21);
    CHECK(k7.num_edges() == 63);
    CHECK(k7.num_faces() == 42);
    auto g7 = euler_genus(k7);
    CHECK(g7.genus == 2);
    CHECK(g7.orientable);
    CHECK(is_closed_triangulation(k7));

    auto k6 = face_subdivision(fixture_k6_projective());
    CHECK(k6.vertex_count == 16);
    CHECK(k6.num_edges() == 45);
    CHECK(k6.num_faces() == 30);
    auto g6 = euler_genus(k6);
    CHECK(g6.genus == 1);
    CHECK_FALSE(g6.orientable);
    CHECK(is_closed_triangulation(k6));
}

TEST_CASE("connected sum of two grids") {
    auto a = torus_grid(6, 6);
    auto b = torus_grid(6, 6);
    auto s = connected_sum(a, b, 0, 0);
    CHECK(s.map.vertex_count == 69);
    CHECK(s.map.num_edges() == 213);
    CHECK(s.map.num_faces() == 142);
    auto g = euler_genus(s.map);
    CHECK(g.genus == 4);
    CHECK(g.orientable);
    CHECK(is_closed_triangulation(s.map));
}

TEST_CASE("round trip through text format") {
    auto m = fixture_k6_projective();
    auto text = serialize_map(m);
    auto m2 = parse_map(text);
    CHECK(serialize_map(m2) == text);
    CHECK(m2.num_faces() == 10);
}
