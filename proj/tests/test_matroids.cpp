#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exampledata.hpp"
#include "tropfano/dd.hpp"
#include "tropfano/matroid.hpp"

using namespace tropfano;
using namespace tropfano::testutil;

namespace {

// rows = pairwise wedge of the rows of a 3-row matrix; columns indexed by
// 2-subsets of the columns in lex order
QMatrix wedge_rows(const QMatrix& m) {
    auto cols = k_subsets(m.cols(), 2);
    auto rws = k_subsets(m.rows(), 2);
    QMatrix out(int(rws.size()), int(cols.size()));
    for (size_t r = 0; r < rws.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out.at(int(r), int(c)) = m.at(rws[r][0], cols[c][0]) * m.at(rws[r][1], cols[c][1]) -
                                     m.at(rws[r][0], cols[c][1]) * m.at(rws[r][1], cols[c][0]);
    return out;
}

QMatrix q_of(const TMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const TRatFn& f = m.at(r, c);
            if (f.den().degree() != 0 || f.num().degree() > 0)
                throw std::runtime_error("not a constant matrix");
            out.at(r, c) = f.num().coeff(0) / f.den().coeff(0);
        }
    return out;
}

}  // namespace

TEST_CASE("matroid_from_columns") {
    SUBCASE("generic matrix gives the uniform matroid") {
        QMatrix v(3, 6);
        for (int c = 0; c < 6; ++c) {
            v.at(0, c) = 1;
            v.at(1, c) = c + 1;
            v.at(2, c) = (c + 1) * (c + 1);
        }
        CHECK(matroid_from_columns(v) == uniform_matroid(3, 6));
    }
    SUBCASE("zero column is a loop") {
        QMatrix m = qmat({{1, 0, 0}, {0, 0, 1}});
        Matroid mt = matroid_from_columns(m);
        CHECK(mt.is_loop(1));
        CHECK(mt.has_loops());
    }
    SUBCASE("wedge matrix of the trivial-valuation plane") {
        Matroid mt = matroid_from_columns(wedge_rows(q_of(plane_L())));
        CHECK(mt.size == 15);
        CHECK(mt.rank == 3);
        CHECK(!mt.has_loops());
    }
}

TEST_CASE("matroid_from_plucker") {
    SUBCASE("all-zero vector gives the uniform matroid") {
        TropPluecker p(2, 5);
        for (auto& e : p.entries) e = TropValue(Rational(0));
        CHECK(matroid_from_plucker(p) == uniform_matroid(3, 6));
    }
    SUBCASE("line with a parallel class") {
        // basis of the line {x0+x1+x2 = 0, x2 = x3 = x4}
        TMatrix b = tmat(std::vector<std::vector<long>>{{1, -1, 0, 0, 0}, {0, -1, 1, 1, 1}});
        TropPluecker p = kminors_val(b, 2);
        CHECK(p.at({2, 3}).is_inf());
        CHECK(p.at({2, 4}).is_inf());
        CHECK(p.at({3, 4}).is_inf());
        Matroid mt = matroid_from_plucker(p);
        CHECK(mt.rank == 2);
        // {2,3,4} is a parallel class: its closure is itself and no basis
        // uses two of its elements
        CHECK(mt.closure({2}) == Subset{2, 3, 4});
        for (const auto& bs : mt.bases)
            CHECK(!(subset_contains(bs, 2) && subset_contains(bs, 3)));
    }
    SUBCASE("rank one") {
        TropPluecker p(0, 2);
        p.set({0}, TropValue(Rational(1)));
        p.set({2}, TropValue(Rational(0)));
        Matroid mt = matroid_from_plucker(p);
        CHECK(mt.rank == 1);
        CHECK(mt.bases == std::vector<Subset>{{0}, {2}});
    }
    SUBCASE("all infinite input is rejected") {
        TropPluecker p(1, 3);
        CHECK_THROWS_AS(matroid_from_plucker(p), DegenerateInput);
    }
    SUBCASE("agrees with the column matroid") {
        TMatrix m = plane_Lsecond();
        CHECK(matroid_from_plucker(kminors_val(m, 3)) == matroid_from_columns(m));
    }
}

TEST_CASE("flats_minimal_and_chains") {
    SUBCASE("uniform matroid has singleton minimal flats") {
        FlatData fd = flats_minimal_and_chains(uniform_matroid(3, 6));
        REQUIRE(fd.minimal_flats.size() == 6);
        for (int i = 0; i < 6; ++i) CHECK(fd.minimal_flats[i] == Subset{i});
        for (const auto& ch : fd.maximal_chains) CHECK(ch.size() == 3);
    }
    SUBCASE("line in the toric threefold") {
        // rank-2 matroid with parallel classes {1} and {0,2,3,4}
        Matroid m;
        m.size = 5;
        m.rank = 2;
        m.bases = {{0, 1}, {1, 2}, {1, 3}, {1, 4}};
        FlatData fd = flats_minimal_and_chains(m);
        REQUIRE(fd.minimal_flats.size() == 2);
        CHECK(fd.minimal_flats[0] == Subset{0, 2, 3, 4});
        CHECK(fd.minimal_flats[1] == Subset{1});
    }
    SUBCASE("rank one: one chain per minimal flat") {
        Matroid m;
        m.size = 3;
        m.rank = 1;
        m.bases = {{0}, {1}, {2}};
        FlatData fd = flats_minimal_and_chains(m);
        CHECK(fd.minimal_flats == std::vector<Subset>{{0, 1, 2}});
        REQUIRE(fd.maximal_chains.size() == 1);
        CHECK(fd.maximal_chains[0].size() == 1);
    }
    SUBCASE("minimal flats partition the ground set") {
        std::vector<Matroid> ms{uniform_matroid(2, 4), uniform_matroid(3, 5)};
        Matroid par;
        par.size = 4;
        par.rank = 2;
        par.bases = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        ms.push_back(par);
        for (const auto& m : ms) {
            FlatData fd = flats_minimal_and_chains(m);
            std::vector<int> cover(m.size, 0);
            for (const auto& f : fd.minimal_flats)
                for (int e : f) cover[e]++;
            for (int c : cover) CHECK(c == 1);
        }
    }
    SUBCASE("loops are rejected") {
        Matroid m;
        m.size = 3;
        m.rank = 1;
        m.bases = {{0}};
        CHECK_THROWS_AS(flats_minimal_and_chains(m), LoopsPresent);
        CHECK_THROWS_AS(bergman_fan(m), LoopsPresent);
    }
}

namespace {

HPolyhedron cone_mod_ones(int n, const std::vector<std::vector<long>>& rays) {
    VPolyhedron v;
    v.ambient = n;
    v.vertices.push_back(std::vector<Rational>(n, Rational(0)));
    for (const auto& r : rays) v.rays.push_back(qv(r));
    v.lineality.push_back(std::vector<Rational>(n, Rational(1)));
    return vh_convert(v);
}

}  // namespace

TEST_CASE("bergman_fan") {
    SUBCASE("uniform rank 3 on 6 elements: the standard plane") {
        PolyComplex fan = bergman_fan(uniform_matroid(3, 6));
        FanStats st = fan_stats(fan);
        CHECK(st.dim == 2);
        CHECK(st.max_cells_by_dim[2] == 15);
        // coarse cones pos(e_i, e_j) all appear
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                std::vector<long> ei(6, 0), ej(6, 0);
                ei[i] = 1;
                ej[j] = 1;
                HPolyhedron cone = cone_mod_ones(6, {ei, ej});
                bool found = false;
                for (const auto& c : fan.cells)
                    if (poly_equal(c, cone)) found = true;
                CHECK(found);
            }
        // cells by quotient dimension: 1 lineality cell, 6 rays, 15 cones
        std::map<int, int> count;
        for (const auto& c : fan.cells) count[quotient_dim(c)]++;
        CHECK(count[0] == 1);
        CHECK(count[1] == 6);
        CHECK(count[2] == 15);
    }
    SUBCASE("star tree of a rank-2 matroid with three parallel classes") {
        PolyComplex fan = bergman_fan(uniform_matroid(2, 3));
        FanStats st = fan_stats(fan);
        CHECK(st.dim == 1);
        CHECK(st.max_cells_by_dim[1] == 3);
        // rays are e_0, e_1, e_2, which sum to 0 modulo the all-ones line
        for (int i = 0; i < 3; ++i) {
            std::vector<long> e(3, 0);
            e[i] = 1;
            HPolyhedron ray = cone_mod_ones(3, {e});
            bool found = false;
            for (const auto& c : fan.cells)
                if (poly_equal(c, ray)) found = true;
            CHECK(found);
        }
    }
    SUBCASE("rank-1 matroid collapses to the lineality") {
        Matroid m;
        m.size = 3;
        m.rank = 1;
        m.bases = {{0}, {1}, {2}};
        PolyComplex fan = bergman_fan(m);
        REQUIRE(fan.cells.size() == 1);
        CHECK(quotient_dim(fan.cells[0]) == 0);
    }
    SUBCASE("chain-count invariant for uniform matroids") {
        for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}}) {
            PolyComplex fan = bergman_fan(uniform_matroid(r, n));
            std::map<int, int> count;
            for (const auto& c : fan.cells) count[quotient_dim(c)]++;
            for (int k = 0; k < r; ++k) {
                long binom = 1;
                for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
                CHECK(count[k] == binom);
            }
        }
    }
}
