#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tropfano/dd.hpp"
#include "tropfano/prevariety.hpp"
#include "tropfano/subsets.hpp"

using namespace tropfano;
using namespace tropfano::testutil;

namespace {

TropTerm term(TropValue c, std::vector<long> exp) {
    TropTerm t;
    t.coeff = std::move(c);
    t.exp = std::move(exp);
    return t;
}

// min(x_0, ..., x_{n-1}) with unit coefficients
TropPolynomial coord_min(int n) {
    TropPolynomial f;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        f.terms.push_back(term(TropValue(Rational(0)), e));
    }
    return f;
}

HPolyhedron cone_mod_ones(int n, std::vector<std::vector<long>> rays) {
    VPolyhedron v(n);
    v.vertices.push_back(std::vector<Rational>(n, 0));
    for (auto& r : rays) {
        std::vector<Rational> q;
        for (long x : r) q.push_back(Rational(x));
        v.rays.push_back(std::move(q));
    }
    v.lineality.push_back(std::vector<Rational>(n, 1));
    return canonical_form(vh_convert(v));
}

}  // namespace

TEST_CASE("orbit_terms drops infinite and orbit-supported terms") {
    TropPolynomial f = coord_min(4);
    f.terms[3].coeff = TropValue::infinity();
    Orbit o;
    o.inf = {1};
    auto terms = orbit_terms(f, o, 4);
    REQUIRE(terms.size() == 2);  // x0 and x2 survive
    CHECK(terms[0].exp == std::vector<long>({1, 0, 0}));
    CHECK(terms[1].exp == std::vector<long>({0, 1, 0}));
    CHECK(terms[0].coeff.value() == 0);
}

TEST_CASE("tropical hypersurface of min(x0, x1, x2)") {
    PolyComplex k = trop_hypersurface(coord_min(3), 3);
    REQUIRE(k.cells.size() == 3);
    std::vector<Rational> origin(3, 0);
    for (const auto& c : k.cells) {
        CHECK(quotient_dim(c) == 1);
        CHECK(affine_dim(c) == 2);
        CHECK(c.contains_point(origin));
    }
    // x0 = x1 <= x2 contains (0, 0, 1) but not (1, 0, 0)
    bool found = false;
    for (const auto& c : k.cells)
        if (c.contains_point(qv({0, 0, 1}))) {
            found = true;
            CHECK(!c.contains_point(qv({1, 0, 0})));
        }
    CHECK(found);
}

TEST_CASE("hypersurface of a binomial is a hyperplane") {
    // min(x0 + x2, x1 + x3)
    TropPolynomial f;
    f.terms.push_back(term(TropValue(Rational(0)), {1, 0, 1, 0}));
    f.terms.push_back(term(TropValue(Rational(0)), {0, 1, 0, 1}));
    PolyComplex k = trop_hypersurface(f, 4);
    REQUIRE(k.cells.size() == 1);
    CHECK(affine_dim(k.cells[0]) == 3);
    CHECK(k.cells[0].contains_point(qv({1, 0, 0, 1})));
    CHECK(!k.cells[0].contains_point(qv({1, 0, 0, 0})));
}

TEST_CASE("hypersurface with coefficients shifts the tie locus") {
    // min(1 + x0, x1): tie on x1 = x0 + 1
    TropPolynomial f;
    f.terms.push_back(term(TropValue(Rational(1)), {1, 0}));
    f.terms.push_back(term(TropValue(Rational(0)), {0, 1}));
    PolyComplex k = trop_hypersurface(f, 2);
    REQUIRE(k.cells.size() == 1);
    CHECK(k.cells[0].contains_point(qv({0, 1})));
    CHECK(!k.cells[0].contains_point(qv({0, 0})));
}

TEST_CASE("hypersurface needs two finite terms") {
    TropPolynomial f = coord_min(3);
    f.terms[1].coeff = TropValue::infinity();
    f.terms[2].coeff = TropValue::infinity();
    CHECK_THROWS_AS(trop_hypersurface(f, 3), DegenerateSystem);
    Orbit o;
    o.inf = {1, 2};
    CHECK_THROWS_AS(trop_hypersurface(coord_min(3), o, 3), DegenerateSystem);

    // restricting to an orbit can also resurrect feasibility checks
    PolyComplex k = trop_hypersurface(coord_min(3), Orbit{{2}}, 3);
    REQUIRE(k.cells.size() == 1);
    CHECK(k.cells[0].ambient == 2);
    CHECK(k.cells[0].contains_point(qv({5, 5})));
    CHECK(!k.cells[0].contains_point(qv({5, 6})));
}

namespace {

// all circuit polynomials of the rank-(k-1) uniform valuated matroid with
// zero values: min over each k-subset of coordinates
TropSystem uniform_system(int n, int k) {
    TropSystem s;
    s.ambient = n;
    for (const auto& t : k_subsets(n, k)) {
        TropPolynomial f;
        for (int i : t) {
            std::vector<long> e(n, 0);
            e[i] = 1;
            f.terms.push_back(term(TropValue(Rational(0)), e));
        }
        s.polys.push_back(std::move(f));
    }
    return s;
}

}  // namespace

TEST_CASE("prevariety of the uniform 4-subset system is the plane fan") {
    PolyComplex k = intersect_system(uniform_system(6, 4));
    REQUIRE(k.cells.size() == 15);
    auto pairs = k_subsets(6, 2);
    for (const auto& pr : pairs) {
        std::vector<long> r1(6, 0), r2(6, 0);
        r1[pr[0]] = 1;
        r2[pr[1]] = 1;
        HPolyhedron cone = cone_mod_ones(6, {r1, r2});
        bool found = false;
        for (const auto& c : k.cells)
            if (poly_equal(c, cone)) found = true;
        CHECK(found);
    }
    FanStats st = fan_stats(k);
    CHECK(st.dim == 2);
    CHECK(st.max_cells_by_dim[2] == 15);
}

TEST_CASE("intersect_system on an orbit") {
    // min(x0, x1) restricted to the orbit x1 = infinity has a single term
    TropSystem s;
    s.ambient = 2;
    s.polys.push_back(coord_min(2));
    s.orbit.inf = {1};
    PolyComplex k = intersect_system(s);
    CHECK(k.cells.empty());

    // identically infinite polynomials are vacuous
    TropSystem v;
    v.ambient = 3;
    TropPolynomial f = coord_min(3);
    for (auto& t : f.terms) t.coeff = TropValue::infinity();
    v.polys.push_back(f);
    PolyComplex all = intersect_system(v);
    REQUIRE(all.cells.size() == 1);
    CHECK(affine_dim(all.cells[0]) == 3);
}

TEST_CASE("membership in the uniform system") {
    TropSystem s = uniform_system(6, 4);
    auto pt = [](std::vector<long> v) {
        std::vector<TropValue> out;
        for (long x : v) out.push_back(TropValue(Rational(x)));
        return out;
    };
    CHECK(member(pt({0, 0, 0, 0, 0, 0}), s));
    CHECK(member(pt({7, 0, 0, 0, 0, 0}), s));
    CHECK(member(pt({3, 5, 0, 0, 0, 0}), s));
    CHECK(!member(pt({-1, 0, 0, 0, 0, 0}), s));
    CHECK(!member(pt({3, 5, 7, 0, 0, 0}), s));
    // shifts along (1,...,1) do not matter
    CHECK(member(pt({5, 7, 2, 2, 2, 2}), s));
}

TEST_CASE("member checks the orbit") {
    // the single polynomial min(x0, x2) in three coordinates
    TropSystem s;
    s.ambient = 3;
    TropPolynomial f;
    f.terms.push_back(term(TropValue(Rational(0)), {1, 0, 0}));
    f.terms.push_back(term(TropValue(Rational(0)), {0, 0, 1}));
    s.polys.push_back(f);
    std::vector<TropValue> x{TropValue(Rational(0)), TropValue::infinity(),
                             TropValue(Rational(0))};
    CHECK_THROWS_AS(member(x, s), OrbitMismatch);
    s.orbit.inf = {1};
    CHECK(member(x, s));  // min(x0, x2) ties at (0, inf, 0)
    std::vector<TropValue> y{TropValue(Rational(0)), TropValue::infinity(),
                             TropValue(Rational(1))};
    CHECK(!member(y, s));

    // a polynomial reduced to one term on the orbit is never satisfied
    TropSystem u = uniform_system(3, 2);
    u.orbit.inf = {1};
    CHECK(!member(x, u));
}

TEST_CASE("membership respects coefficients and sampling agrees with cells") {
    // two generic hyperplane polynomials in R^4
    TropSystem s;
    s.ambient = 4;
    TropPolynomial f;
    f.terms.push_back(term(TropValue(Rational(1)), {1, 0, 0, 0}));
    f.terms.push_back(term(TropValue(Rational(0)), {0, 1, 0, 0}));
    f.terms.push_back(term(TropValue(Rational(0)), {0, 0, 1, 0}));
    TropPolynomial g;
    g.terms.push_back(term(TropValue(Rational(0)), {0, 1, 0, 0}));
    g.terms.push_back(term(TropValue(Rational(2)), {0, 0, 1, 0}));
    g.terms.push_back(term(TropValue(Rational(0)), {0, 0, 0, 1}));
    s.polys = {f, g};
    PolyComplex k = intersect_system(s);
    REQUIRE(!k.cells.empty());
    // grid sample: membership iff covered by some cell
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                std::vector<Rational> x = qv({a, b, c, 0});
                std::vector<TropValue> tx;
                for (const auto& v : x) tx.push_back(TropValue(v));
                bool in_cells = false;
                for (const auto& cell : k.cells)
                    if (cell.contains_point(x)) in_cells = true;
                CHECK(member(tx, s) == in_cells);
            }
}
