#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exampledata.hpp"
#include "tropfano/numkernel.hpp"

using namespace tropfano;
using namespace tropfano::testutil;

TEST_CASE("tval of rational functions") {
    CHECK(tval(tratfn_parse("5")) == TropValue(Rational(0)));
    CHECK(tval(tratfn_parse("t^2+3t")) == TropValue(Rational(1)));
    CHECK(tval(tratfn_parse("(t+1)/t")) == TropValue(Rational(-1)));
    CHECK(tval(TRatFn(0)).is_inf());
}

namespace {

TRatFn random_ratfn(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 3);
    auto rand_poly = [&] {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c) x = coeff(rng);
        return QPoly(std::move(c));
    };
    QPoly num = rand_poly();
    if (!allow_zero && num.is_zero()) num = QPoly(Rational(1));
    QPoly den = rand_poly();
    if (den.is_zero()) den = QPoly(Rational(1));
    return TRatFn(num, den);
}

}  // namespace

TEST_CASE("tval is a valuation") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        TRatFn f = random_ratfn(rng), g = random_ratfn(rng);
        CHECK(tval(f * g) == tmul(tval(f), tval(g)));
        TropValue s = tval(f + g);
        TropValue m = tadd(tval(f), tval(g));
        if (!s.is_inf()) {
            REQUIRE(!m.is_inf());
            CHECK(s.value() >= m.value());
        }
    }
}

TEST_CASE("kminors_val") {
    SUBCASE("plane with trivial valuations: all 20 entries zero") {
        TropPluecker p = kminors_val(plane_L(), 3);
        REQUIRE(p.entries.size() == 20);
        for (const auto& e : p.entries) CHECK(e == TropValue(Rational(0)));
    }
    SUBCASE("identity matrix") {
        TropPluecker p = kminors_val(tmat(std::vector<std::vector<long>>{
                                         {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                     3);
        REQUIRE(p.entries.size() == 1);
        CHECK(p.entries[0] == TropValue(Rational(0)));
    }
    SUBCASE("first two rows of the function-field plane") {
        TMatrix m = plane_Lsecond();
        TMatrix top(2, 6);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) top.at(r, c) = m.at(r, c);
        TropPluecker p = kminors_val(top, 2);
        for (const auto& s : k_subsets(6, 2)) {
            TropValue expect(Rational(0));
            if (s == Subset{0, 1} || s == Subset{2, 3} || s == Subset{4, 5})
                expect = TropValue(Rational(1));
            CHECK(p.at(s) == expect);
        }
    }
    SUBCASE("rank below k") {
        TMatrix m = tmat(std::vector<std::vector<long>>{{1, 2}, {2, 4}});
        CHECK_THROWS_AS(kminors_val(m, 2), DegenerateInput);
    }
    SUBCASE("invariant under unit-valuation row operations") {
        TMatrix m = plane_Lsecond();
        TropPluecker before = kminors_val(m, 3);
        // G with tval(det G) = 0
        TMatrix g = tmat(std::vector<std::vector<std::string>>{
            {"1", "t", "0"}, {"1", "2", "0"}, {"t^2", "0", "1"}});
        TMatrix gm(3, 6);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 6; ++c) {
                TRatFn s(0);
                for (int k = 0; k < 3; ++k) s += g.at(r, k) * m.at(k, c);
                gm.at(r, c) = s;
            }
        CHECK(tval(det_bareiss(g)) == TropValue(Rational(0)));
        CHECK(kminors_val(gm, 3) == before);
    }
}

TEST_CASE("lattice_kernel") {
    SUBCASE("quadric surface lattice points") {
        auto k = lattice_kernel(toric_A_quadric());
        REQUIRE(k.size() == 1);
        std::vector<long> l = k[0];
        if (l[0] < 0)
            for (auto& x : l) x = -x;
        CHECK(l == std::vector<long>{1, -1, 1, -1});
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(lattice_kernel(imat({{1, 0}, {0, 1}})).empty());
    }
    SUBCASE("threefold lattice points") {
        auto k = lattice_kernel(toric_A_threefold());
        REQUIRE(k.size() == 1);
        std::vector<long> l = k[0];
        if (l[4] > 0)
            for (auto& x : l) x = -x;
        CHECK(l == std::vector<long>{0, 0, 1, 1, -2});
    }
    SUBCASE("kernel vectors annihilate and count matches corank") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> entry(-4, 4), dim(1, 5);
        for (int it = 0; it < 100; ++it) {
            int r = dim(rng), c = dim(rng);
            IntMatrix a(r, c);
            QMatrix aq(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    long v = entry(rng);
                    a.at(i, j) = v;
                    aq.at(i, j) = Rational(v);
                }
            auto k = lattice_kernel(a);
            CHECK(int(k.size()) == c - exact_rank(aq));
            for (const auto& l : k)
                for (int i = 0; i < r; ++i) {
                    long s = 0;
                    for (int j = 0; j < c; ++j) s += a.at(i, j) * l[j];
                    CHECK(s == 0);
                }
        }
    }
}

TEST_CASE("exact_rank") {
    CHECK(exact_rank(qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(exact_rank(plane_L()) == 3);
    CHECK(exact_rank(qmat({{0, 0}, {0, 0}})) == 0);
}
