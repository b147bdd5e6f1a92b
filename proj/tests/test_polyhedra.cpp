#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "tropfano/complex.hpp"
#include "tropfano/dd.hpp"

using namespace tropfano;
using namespace tropfano::testutil;

namespace {

// cone pos(rays) + R*1 in R^n as an H-polyhedron
HPolyhedron cone_mod_ones(int n, const std::vector<std::vector<long>>& rays) {
    VPolyhedron v;
    v.ambient = n;
    v.vertices.push_back(std::vector<Rational>(n, Rational(0)));
    for (const auto& r : rays) v.rays.push_back(qv(r));
    v.lineality.push_back(std::vector<Rational>(n, Rational(1)));
    return vh_convert(v);
}

std::vector<long> unit(int n, int i, long scale = 1) {
    std::vector<long> e(n, 0);
    e[i] = scale;
    return e;
}

// fan of the cones pos(e_i, e_j) + R*1, the tropicalization of a generic
// plane with trivial valuations
PolyComplex standard_plane_fan(int n) {
    PolyComplex k(n, true);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) k.cells.push_back(cone_mod_ones(n, {unit(n, i), unit(n, j)}));
    return k;
}

}  // namespace

TEST_CASE("feasible") {
    HPolyhedron p(1);
    p.add(qv({-1}), 0).add(qv({1}), 1);
    auto w = feasible(p);
    REQUIRE(w.has_value());
    CHECK(p.contains_point(*w));

    HPolyhedron q(1);
    q.add(qv({1}), 0, Rel::LT).add(qv({-1}), 0, Rel::LT);
    CHECK(!feasible(q).has_value());

    HPolyhedron r(2);
    r.add(qv({1, 1}), 1, Rel::EQ).add(qv({-1, 0}), -2).add(qv({0, -1}), -2);
    CHECK(!feasible(r).has_value());
}

TEST_CASE("hv_convert and vh_convert") {
    SUBCASE("standard simplex has three vertices") {
        HPolyhedron p(3);
        p.add(qv({-1, 0, 0}), 0).add(qv({0, -1, 0}), 0).add(qv({0, 0, -1}), 0);
        p.add(qv({1, 1, 1}), 1, Rel::EQ);
        VPolyhedron v = hv_convert(p);
        CHECK(v.vertices.size() == 3);
        CHECK(v.rays.empty());
        CHECK(v.lineality.empty());
    }
    SUBCASE("coordinate cone in the plane") {
        HPolyhedron p(2);
        p.add(qv({-1, 0}), 0).add(qv({0, -1}), 0);
        VPolyhedron v = hv_convert(p);
        CHECK(v.vertices.size() == 1);
        CHECK(v.rays.size() == 2);
        CHECK(v.lineality.empty());
    }
    SUBCASE("halfspace") {
        HPolyhedron p(2);
        p.add(qv({-1, 0}), 0);
        VPolyhedron v = hv_convert(p);
        CHECK(v.vertices.size() == 1);
        CHECK(v.rays.size() == 1);
        CHECK(v.lineality.size() == 1);
    }
    SUBCASE("round trip on random polyhedra") {
        std::mt19937 rng(23);
        std::uniform_int_distribution<int> coeff(-3, 3), ncons(1, 5);
        for (int it = 0; it < 60; ++it) {
            HPolyhedron p(3);
            int m = ncons(rng);
            for (int i = 0; i < m; ++i) {
                std::vector<Rational> a(3);
                for (auto& x : a) x = coeff(rng);
                p.add(std::move(a), Rational(coeff(rng)));
            }
            if (!feasible(p)) continue;
            HPolyhedron back = vh_convert(hv_convert(p));
            CHECK(poly_equal(p, back));
        }
    }
}

TEST_CASE("fm_project") {
    SUBCASE("triangle to segment") {
        HPolyhedron p(2);
        p.add(qv({1, 1}), 1).add(qv({-1, 0}), 0).add(qv({0, -1}), 0);
        HPolyhedron q = fm_project(p, {0});
        HPolyhedron expect(2);
        expect.add(qv({-1, 0}), 0).add(qv({1, 0}), 1);
        CHECK(poly_equal(q, expect));
    }
    SUBCASE("strictness propagates") {
        HPolyhedron p(3);
        p.add(qv({1, -1, 0}), 0, Rel::LT).add(qv({0, 1, -1}), 0, Rel::LT);
        HPolyhedron q = fm_project(p, {0, 2});
        HPolyhedron expect(3);
        expect.add(qv({1, 0, -1}), 0, Rel::LT);
        CHECK(poly_equal(q, expect));
    }
    SUBCASE("projection is the shadow") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> coeff(-3, 3), ncons(2, 5);
        for (int it = 0; it < 40; ++it) {
            HPolyhedron p(3);
            int m = ncons(rng);
            for (int i = 0; i < m; ++i) {
                std::vector<Rational> a(3);
                for (auto& x : a) x = coeff(rng);
                p.add(std::move(a), Rational(coeff(rng)), rng() % 3 ? Rel::LE : Rel::LT);
            }
            HPolyhedron proj = fm_project(p, {0, 1});
            // sample integer points of the shadow box
            for (long x = -4; x <= 4; x += 2)
                for (long y = -4; y <= 4; y += 2) {
                    HPolyhedron fiber(p);
                    fiber.add(qv({1, 0, 0}), Rational(x), Rel::EQ);
                    fiber.add(qv({0, 1, 0}), Rational(y), Rel::EQ);
                    bool lifts = feasible(fiber).has_value();
                    bool in_proj = proj.contains_point({Rational(x), Rational(y), Rational(0)});
                    CHECK(lifts == in_proj);
                }
        }
    }
}

TEST_CASE("complement_pieces") {
    SUBCASE("halfline") {
        HPolyhedron p(1);
        p.add(qv({1}), 0);
        auto pieces = complement_pieces(p);
        REQUIRE(pieces.size() == 1);
        CHECK(pieces[0].contains_point({Rational(1)}));
        CHECK(!pieces[0].contains_point({Rational(0)}));
    }
    SUBCASE("square complement has four disjoint pieces") {
        HPolyhedron p(2);
        p.add(qv({-1, 0}), 0).add(qv({1, 0}), 1).add(qv({0, -1}), 0).add(qv({0, 1}), 1);
        auto pieces = complement_pieces(p);
        CHECK(pieces.size() == 4);
        for (size_t i = 0; i < pieces.size(); ++i) {
            CHECK(!feasible(intersect(pieces[i], p)).has_value());
            for (size_t j = i + 1; j < pieces.size(); ++j)
                CHECK(!feasible(intersect(pieces[i], pieces[j])).has_value());
        }
        // the union covers: sample points outside the square land in a piece
        for (long x = -2; x <= 3; ++x)
            for (long y = -2; y <= 3; ++y) {
                std::vector<Rational> pt{Rational(x), Rational(y)};
                bool inside = p.contains_point(pt);
                int hits = 0;
                for (const auto& piece : pieces)
                    if (piece.contains_point(pt)) ++hits;
                CHECK(hits == (inside ? 0 : 1));
            }
    }
    SUBCASE("hyperplane complement") {
        HPolyhedron p(1);
        p.add(qv({1}), 0, Rel::EQ);
        auto pieces = complement_pieces(p);
        REQUIRE(pieces.size() == 2);
        int pos = 0, neg = 0;
        for (const auto& piece : pieces) {
            if (piece.contains_point({Rational(1)})) ++pos;
            if (piece.contains_point({Rational(-1)})) ++neg;
        }
        CHECK(pos == 1);
        CHECK(neg == 1);
    }
}

TEST_CASE("contained_in_complex") {
    PolyComplex fan = standard_plane_fan(6);
    SUBCASE("ray inside a maximal cone") {
        HPolyhedron ray = cone_mod_ones(6, {{1, 1, 0, 0, 0, 0}});
        CHECK(contained_in_complex(ray, fan).contained);
    }
    SUBCASE("ray escaping the fan") {
        HPolyhedron ray = cone_mod_ones(6, {{1, 2, -1, 0, 0, 0}});
        auto res = contained_in_complex(ray, fan);
        CHECK(!res.contained);
        REQUIRE(res.witness.has_value());
        CHECK(ray.contains_point(*res.witness));
        for (const auto& cell : fan.cells) CHECK(!cell.contains_point(*res.witness));
    }
    SUBCASE("a cell of the complex") {
        CHECK(contained_in_complex(fan.cells[3], fan).contained);
    }
    SUBCASE("agrees with grid sampling in the plane") {
        std::mt19937 rng(41);
        std::uniform_int_distribution<int> coord(-3, 3);
        for (int it = 0; it < 25; ++it) {
            // complex: two random triangles
            PolyComplex k(2);
            for (int c = 0; c < 2; ++c) {
                VPolyhedron v;
                v.ambient = 2;
                for (int i = 0; i < 3; ++i) v.vertices.push_back(qv({coord(rng), coord(rng)}));
                HPolyhedron cell = vh_convert(v);
                if (feasible(cell)) k.cells.push_back(cell);
            }
            if (k.cells.empty()) continue;
            VPolyhedron v;
            v.ambient = 2;
            for (int i = 0; i < 3; ++i) v.vertices.push_back(qv({coord(rng), coord(rng)}));
            HPolyhedron p = vh_convert(v);
            if (!feasible(p)) continue;

            auto res = contained_in_complex(p, k);
            if (!res.contained) {
                REQUIRE(res.witness.has_value());
                CHECK(p.contains_point(*res.witness));
                for (const auto& cell : k.cells) CHECK(!cell.contains_point(*res.witness));
            } else {
                // dense-ish rational grid inside the bounding box
                for (long x = -12; x <= 12; ++x)
                    for (long y = -12; y <= 12; ++y) {
                        std::vector<Rational> pt{Rational(x, 4), Rational(y, 4)};
                        if (!p.contains_point(pt)) continue;
                        bool hit = false;
                        for (const auto& cell : k.cells)
                            if (cell.contains_point(pt)) hit = true;
                        CHECK(hit);
                    }
            }
        }
    }
}

TEST_CASE("refine") {
    SUBCASE("refine(K, K) keeps the maximal cells") {
        PolyComplex k(2, true);
        for (int sx : {-1, 1})
            for (int sy : {-1, 1}) {
                HPolyhedron q(2);
                q.add(qv({-sx, 0}), 0).add(qv({0, -sy}), 0);
                k.cells.push_back(q);
            }
        PolyComplex r = refine(k, k);
        PolyComplex rmax = maximal_cells(r);
        REQUIRE(rmax.cells.size() == 4);
        std::set<std::string> want, got;
        for (const auto& c : k.cells) want.insert(poly_key(c));
        for (const auto& c : rmax.cells) got.insert(poly_key(c));
        CHECK(want == got);
    }
    SUBCASE("two crossing lines split into four rays and the origin") {
        PolyComplex k1(2), k2(2);
        HPolyhedron l1(2), l2(2);
        l1.add(qv({1, -1}), 0, Rel::EQ);
        l2.add(qv({1, 1}), 0, Rel::EQ);
        k1.cells.push_back(l1);
        k1.cells.push_back(l2);
        PolyComplex r = refine(k1, k1);
        int rays = 0, points = 0;
        for (const auto& c : r.cells) {
            int d = affine_dim(c);
            if (d == 1) ++rays;
            if (d == 0) ++points;
        }
        CHECK(rays == 4);
        CHECK(points == 1);
    }
}

TEST_CASE("fan_stats") {
    SUBCASE("standard plane fan") {
        FanStats st = fan_stats(standard_plane_fan(6));
        CHECK(st.dim == 2);
        CHECK(st.lineality_dim == 0);
        CHECK(st.max_cells_by_dim[2] == 15);
    }
    SUBCASE("single ray") {
        PolyComplex k(2, true);
        HPolyhedron ray(2);
        ray.add(qv({0, 1}), 0, Rel::EQ).add(qv({-1, 0}), 0);
        k.cells.push_back(ray);
        FanStats st = fan_stats(k);
        CHECK(st.dim == 1);
        CHECK(st.max_cells_by_dim[1] == 1);
    }
}

TEST_CASE("quotient_dim and canonical points") {
    HPolyhedron line(3);
    line.add(qv({1, -1, 0}), 0, Rel::EQ).add(qv({0, 1, -1}), 0, Rel::EQ);
    CHECK(quotient_dim(line) == 0);  // the all-ones line itself
    CHECK(trop_canonical_point({Rational(3), Rational(4), Rational(5)}) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
}
