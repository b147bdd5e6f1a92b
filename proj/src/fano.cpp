#include "tropfano/fano.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

namespace tropfano {

namespace {

std::string term_key(const TropTerm& t) {
    std::string k = t.coeff.str() + ":";
    for (long e : t.exp) k += std::to_string(e) + ",";
    return k;
}

std::string poly_term_key(const TropPolynomial& f) {
    std::vector<std::string> ks;
    for (const auto& t : f.terms) ks.push_back(term_key(t));
    std::sort(ks.begin(), ks.end());
    std::string out;
    for (const auto& k : ks) out += k + ";";
    return out;
}

}  // namespace

TropSystem plucker_relations(int d, int n) {
    if (d < 0 || d >= n) throw BadDimensions("plucker_relations: need 0 <= d < n");
    TropSystem s;
    s.ambient = int(k_subsets(n + 1, d + 1).size());
    std::set<std::string> seen;
    for (const auto& sub : k_subsets(n + 1, d)) {
        for (const auto& t : k_subsets(n + 1, d + 2)) {
            std::vector<int> rest;
            for (int i : t)
                if (!subset_contains(sub, i)) rest.push_back(i);
            if (int(rest.size()) != 3) continue;
            TropPolynomial f;
            for (int i : rest) {
                TropTerm term;
                term.coeff = TropValue(Rational(0));
                term.exp.assign(s.ambient, 0);
                term.exp[subset_rank(subset_insert(sub, i), n + 1)] += 1;
                term.exp[subset_rank(subset_erase(t, i), n + 1)] += 1;
                f.terms.push_back(std::move(term));
            }
            if (seen.insert(poly_term_key(f)).second) s.polys.push_back(std::move(f));
        }
    }
    return s;
}

TropSystem incidence_system(const TropPluecker& w, int d) {
    if (d < 0 || d >= w.d) throw BadDimensions("incidence_system: need 0 <= d < dim of w");
    int n = w.n;
    TropSystem s = plucker_relations(d, n);
    std::set<std::string> seen;
    for (const auto& t : k_subsets(n + 1, w.d + 2)) {
        for (const auto& sub : k_subsets(n + 1, d)) {
            bool inside = true;
            for (int i : sub)
                if (!subset_contains(t, i)) inside = false;
            if (!inside) continue;
            TropPolynomial f;
            for (int i : t) {
                if (subset_contains(sub, i)) continue;
                TropTerm term;
                term.coeff = w.at(subset_erase(t, i));
                term.exp.assign(s.ambient, 0);
                term.exp[subset_rank(subset_insert(sub, i), n + 1)] = 1;
                f.terms.push_back(std::move(term));
            }
            if (seen.insert(poly_term_key(f)).second) s.polys.push_back(std::move(f));
        }
    }
    return s;
}

FanoResult fano_linear(const TropPluecker& w, int d, const Orbit& o) {
    TropSystem s = incidence_system(w, d);
    s.orbit = o;
    FanoResult res;
    res.d = d;
    res.n = w.n;
    res.orbit = o;
    res.cells = intersect_system(s);
    res.provenance = "incidence";
    return res;
}

namespace {

// disjoint pieces covering the complement of a polyhedron that may have
// strict constraints: piece i negates constraint i and keeps the earlier ones
std::vector<HPolyhedron> complement_any(const HPolyhedron& p) {
    std::vector<HPolyhedron> out;
    HPolyhedron prefix(p.ambient);
    auto flipped = [](Constraint c) {
        for (auto& v : c.a) v = -v;
        c.b = -c.b;
        return c;
    };
    for (const auto& c : p.cons) {
        if (c.rel == Rel::EQ) {
            // both open sides of the hyperplane
            for (bool side : {false, true}) {
                HPolyhedron piece = prefix;
                Constraint nc = side ? flipped(c) : c;
                nc.rel = Rel::LT;
                piece.cons.push_back(std::move(nc));
                out.push_back(std::move(piece));
            }
        } else {
            HPolyhedron piece = prefix;
            Constraint nc = flipped(c);
            nc.rel = (c.rel == Rel::LE) ? Rel::LT : Rel::LE;
            piece.cons.push_back(std::move(nc));
            out.push_back(std::move(piece));
        }
        prefix.cons.push_back(c);
    }
    return out;
}

Constraint zero_extend(const Constraint& c, int total, int offset) {
    Constraint out;
    out.a.assign(total, Rational(0));
    for (size_t k = 0; k < c.a.size(); ++k) out.a[offset + int(k)] = c.a[k];
    out.b = c.b;
    out.rel = c.rel;
    return out;
}

}  // namespace

FanoResult fano_general(const PolyComplex& tropx, int d, int n, const Orbit& o) {
    if (d != 1 || n < 2 || n > 5)
        throw OutOfScope("fano_general: implemented for lines (d = 1) with n <= 5");
    auto pairs = k_subsets(n + 1, 2);
    int np = int(pairs.size());

    // orbit of the x-space: a coordinate is infinite when every Pluecker
    // coordinate containing it is
    Orbit xo;
    for (int i = 0; i <= n; ++i) {
        bool all_inf = true;
        for (int r = 0; r < np; ++r)
            if (subset_contains(pairs[r], i) && !o.contains(r)) all_inf = false;
        if (all_inf) xo.inf.push_back(i);
    }
    std::vector<int> pkeep = o.finite_coords(np);
    std::vector<int> xkeep = xo.finite_coords(n + 1);
    int mp = int(pkeep.size()), nx = int(xkeep.size());
    if (mp == 0) throw OrbitMismatch("fano_general: empty Pluecker orbit");
    if (tropx.ambient != nx)
        throw OrbitMismatch("fano_general: tropx ambient does not match the orbit");

    std::vector<int> ppos(np, -1), xpos(n + 1, -1);
    for (int k = 0; k < mp; ++k) ppos[pkeep[k]] = k;
    for (int k = 0; k < nx; ++k) xpos[xkeep[k]] = k;

    TropSystem ps = plucker_relations(d, n);
    ps.orbit = o;
    PolyComplex dress = intersect_system(ps);

    int lift = mp + nx;
    std::vector<int> pcoords(mp);
    for (int k = 0; k < mp; ++k) pcoords[k] = k;

    PolyComplex out(mp);
    std::set<std::string> seen;
    auto emit = [&](HPolyhedron cell) {
        cell = canonical_form(cell);
        if (!feasible(cell)) return;
        if (seen.insert(poly_key(cell)).second) out.cells.push_back(std::move(cell));
    };

    bool trace = std::getenv("TROPFANO_TRACE") != nullptr;

    // complement of the target support, computed once in the x coordinates:
    // peel cell by cell, skipping cells a region already avoids; canonical
    // forms keep the constraint systems small as the fold deepens
    std::vector<HPolyhedron> comp_lifted;
    {
        std::vector<HPolyhedron> regions{HPolyhedron(nx)};
        for (const auto& sigma : tropx.cells) {
            std::vector<HPolyhedron> next;
            for (const auto& r : regions) {
                if (!feasible(intersect(r, sigma))) {
                    next.push_back(r);
                    continue;
                }
                for (const auto& piece : complement_any(sigma)) {
                    HPolyhedron s = canonical_form(intersect(r, piece));
                    if (feasible(s)) next.push_back(std::move(s));
                }
            }
            regions = std::move(next);
            if (regions.empty()) break;
        }
        if (trace)
            std::fprintf(stderr, "fano_general: target complement has %zu pieces\n",
                         regions.size());
        for (const auto& r : regions) {
            HPolyhedron rl(lift);
            for (const auto& c : r.cons) rl.cons.push_back(zero_extend(c, lift, mp));
            comp_lifted.push_back(std::move(rl));
        }
    }
    size_t cone_idx = 0;
    for (const auto& cone : dress.cells) {
        if (trace)
            std::fprintf(stderr, "fano_general: cone %zu/%zu, %zu cells emitted\n", ++cone_idx,
                         dress.cells.size(), out.cells.size());
        auto pv_opt = relint_point(cone);
        if (!pv_opt) continue;
        const auto& pv = *pv_opt;

        TropPluecker pstar(d, n);
        for (int k = 0; k < mp; ++k) pstar.entries[pkeep[k]] = TropValue(pv[k]);

        // circuits alive on the orbit; a one-term circuit forces its
        // coordinate to infinity, so the orbit carries no points of Gamma
        struct Circ {
            std::vector<std::pair<int, int>> alive;  // (x position, p position)
        };
        std::vector<Circ> circs;
        bool orbit_empty = false;
        for (const auto& t : k_subsets(n + 1, d + 2)) {
            Circ c;
            for (int i : t) {
                int r = subset_rank(subset_erase(t, i), n + 1);
                if (xpos[i] >= 0 && ppos[r] >= 0) c.alive.push_back({xpos[i], ppos[r]});
            }
            if (c.alive.size() == 1) orbit_empty = true;
            if (c.alive.size() >= 2) circs.push_back(std::move(c));
        }

        PolyComplex gam(nx);
        if (!orbit_empty) gam = realize_space(pstar, xo).cells;
        if (gam.cells.empty()) {
            // no points of the line in this orbit: containment is vacuous
            emit(cone);
            continue;
        }

        HPolyhedron base(lift);
        for (const auto& c : cone.cons) base.cons.push_back(zero_extend(c, lift, 0));

        // subtract each projected bad piece from the cone as soon as it is
        // found: most cones die on the first few pieces, and a region already
        // disjoint from a piece passes unsplit
        std::vector<HPolyhedron> good{cone};
        auto subtract_bad = [&](const HPolyhedron& b) {
            std::vector<HPolyhedron> pieces = complement_any(b);
            std::vector<HPolyhedron> next;
            for (const auto& g : good) {
                if (!feasible(intersect(g, b))) {
                    next.push_back(g);
                    continue;
                }
                for (const auto& piece : pieces) {
                    HPolyhedron s = intersect(g, piece);
                    if (feasible(s)) next.push_back(std::move(s));
                }
            }
            good = std::move(next);
        };

        for (const auto& cell : gam.cells) {
            if (good.empty()) break;
            auto xh_opt = relint_point(cell);
            if (!xh_opt) continue;
            const auto& xh = *xh_opt;

            // lifted cell: the interior achiever pattern of every circuit,
            // imposed as equations and inequalities linear in (p, x)
            HPolyhedron q = base;
            for (const auto& circ : circs) {
                std::optional<Rational> best;
                for (const auto& [xk, pk] : circ.alive) {
                    Rational v = xh[xk] + pv[pk];
                    if (!best || v < *best) best = v;
                }
                int a0x = -1, a0p = -1;
                for (const auto& [xk, pk] : circ.alive)
                    if (a0x < 0 && xh[xk] + pv[pk] == *best) {
                        a0x = xk;
                        a0p = pk;
                    }
                for (const auto& [xk, pk] : circ.alive) {
                    if (xk == a0x && pk == a0p) continue;
                    Rational v = xh[xk] + pv[pk];
                    Constraint c;
                    c.a.assign(lift, Rational(0));
                    c.a[a0p] += 1;
                    c.a[mp + a0x] += 1;
                    c.a[pk] -= 1;
                    c.a[mp + xk] -= 1;
                    c.b = 0;
                    c.rel = (v == *best) ? Rel::EQ : Rel::LE;
                    q.cons.push_back(std::move(c));
                }
            }
            q = canonical_form(q);
            if (!feasible(q)) continue;

            // parameters whose line cell leaves the target: intersect with
            // each complement piece and project out the x coordinates
            for (const auto& piece : comp_lifted) {
                if (good.empty()) break;
                HPolyhedron s = intersect(q, piece);
                if (!feasible(s)) continue;
                HPolyhedron b = restrict_coords(fm_project(s, pcoords), pcoords);
                if (!feasible(b)) continue;
                // a small representation keeps the subtraction fold cheap
                prune_redundant(b);
                subtract_bad(b);
            }
        }
        // the Fano scheme is closed, so closures of the pieces are sound
        for (const auto& g : good) emit(g.weakened());
    }

    out = maximal_cells(out);
    out.is_fan = true;
    for (const auto& c : out.cells)
        if (!is_cone(c)) out.is_fan = false;

    FanoResult res;
    res.d = d;
    res.n = n;
    res.orbit = o;
    res.cells = std::move(out);
    res.provenance = "projection";
    return res;
}

LineContainment contains_line(const TropPluecker& p, const PolyComplex& tropx, const Orbit& o) {
    TropLinearSpace g = realize_space(p, o);
    if (g.cells.ambient != tropx.ambient)
        throw OrbitMismatch("contains_line: ambient mismatch between line and target");
    for (const auto& cell : g.cells.cells) {
        ContainmentResult r = contained_in_complex(cell, tropx);
        if (!r.contained) return {false, r.witness};
    }
    return {true, std::nullopt};
}

TMatrix wedge_square(const TMatrix& m) {
    auto rpairs = k_subsets(m.rows(), 2);
    auto cpairs = k_subsets(m.cols(), 2);
    TMatrix out(int(rpairs.size()), int(cpairs.size()));
    for (size_t r = 0; r < rpairs.size(); ++r)
        for (size_t c = 0; c < cpairs.size(); ++c) {
            int i = rpairs[r][0], j = rpairs[r][1];
            int a = cpairs[c][0], b = cpairs[c][1];
            out.at(int(r), int(c)) = m.at(i, a) * m.at(j, b) - m.at(i, b) * m.at(j, a);
        }
    return out;
}

PolyComplex classical_plane_fano_trop(const TMatrix& l) {
    if (l.rows() != 3 || l.cols() < 4)
        throw BadDimensions("classical_plane_fano_trop: expected a 3 x (n+1) matrix");
    TropPluecker p = kminors_val(wedge_square(l), 3);
    return realize_space(p, Orbit{}).cells;
}

namespace {

std::vector<TRatFn> cross3(const std::vector<TRatFn>& a, const std::vector<TRatFn>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<TRatFn> column(const TMatrix& m, int c) {
    std::vector<TRatFn> out;
    for (int r = 0; r < m.rows(); ++r) out.push_back(m.at(r, c));
    return out;
}

// intersection point of the coordinate lines x_i = 0 and x_j = 0 on the plane
std::vector<TRatFn> pair_point(const TMatrix& l, int i, int j) {
    std::vector<TRatFn> w = cross3(column(l, i), column(l, j));
    if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero())
        throw DegenerateInput("coordinate lines " + std::to_string(i) + "," + std::to_string(j) +
                              " coincide");
    return w;
}

void disjoint_triples(const std::vector<Subset>& pairs, size_t from, std::vector<Subset>& cur,
                      std::vector<std::vector<Subset>>& out) {
    if (cur.size() == 3) {
        out.push_back(cur);
        return;
    }
    for (size_t k = from; k < pairs.size(); ++k) {
        bool ok = true;
        for (const auto& p : cur)
            for (int i : pairs[k])
                if (subset_contains(p, i)) ok = false;
        if (!ok) continue;
        cur.push_back(pairs[k]);
        disjoint_triples(pairs, k + 1, cur, out);
        cur.pop_back();
    }
}

// canonical representative of a ray modulo positive scaling and the all-ones
// line: minimum coordinate zero, primitive integer entries
std::vector<Rational> canonical_ray(std::vector<Rational> r) {
    Rational mn = r[0];
    for (const auto& v : r) mn = std::min(mn, v);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& v : r) {
        v -= mn;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return r;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (auto& v : r) {
        v *= scale;
        v.canonicalize();
    }
    return r;
}

}  // namespace

GenericityReport genericity_check(const TMatrix& l) {
    if (l.rows() != 3) throw BadDimensions("genericity_check: expected a 3 x (n+1) matrix");
    int m = l.cols();
    GenericityReport rep;
    for (const auto& pr : k_subsets(m, 2)) pair_point(l, pr[0], pr[1]);
    for (const auto& tri : k_subsets(m, 3)) {
        TMatrix sub = l.select_columns(tri);
        if (det_bareiss(sub).is_zero()) {
            rep.cond_I = false;
            rep.bad_triples.push_back(tri);
        }
    }
    std::vector<std::vector<Subset>> triples;
    std::vector<Subset> cur;
    disjoint_triples(k_subsets(m, 2), 0, cur, triples);
    for (const auto& pairing : triples) {
        TMatrix pts(3, 3);
        for (int k = 0; k < 3; ++k) {
            auto w = pair_point(l, pairing[k][0], pairing[k][1]);
            for (int c = 0; c < 3; ++c) pts.at(k, c) = w[c];
        }
        if (det_bareiss(pts).is_zero()) {
            rep.cond_II = false;
            rep.bad_pairings.push_back(pairing);
        }
    }
    return rep;
}

std::optional<PairingLine> pairing_line(const TMatrix& l, const std::vector<Subset>& pairing) {
    if (l.rows() != 3) throw BadDimensions("pairing_line: expected a 3 x (n+1) matrix");
    int np = int(pairing.size());
    if (np < 3) throw BadDimensions("pairing_line: expected at least three index pairs");
    std::set<int> used;
    for (const auto& p : pairing) {
        if (p.size() != 2 || p[0] < 0 || p[1] >= l.cols() || p[0] >= p[1])
            throw BadDimensions("pairing_line: malformed index pair");
        for (int i : p)
            if (!used.insert(i).second) throw BadDimensions("pairing_line: pairs overlap");
    }

    TMatrix pts(np, 3);
    for (int k = 0; k < np; ++k) {
        auto w = pair_point(l, pairing[k][0], pairing[k][1]);
        for (int c = 0; c < 3; ++c) pts.at(k, c) = w[c];
    }
    if (exact_rank(pts) == 3) return std::nullopt;

    // two independent points span the line; map back to P^n via the rows of l
    int r2 = -1;
    for (int k = 1; k < np && r2 < 0; ++k) {
        TMatrix two(2, 3);
        for (int c = 0; c < 3; ++c) {
            two.at(0, c) = pts.at(0, c);
            two.at(1, c) = pts.at(k, c);
        }
        if (exact_rank(two) == 2) r2 = k;
    }
    if (r2 < 0) throw DegenerateInput("pairing_line: the pairing points coincide");

    PairingLine line;
    line.basis = TMatrix(2, l.cols());
    for (int row = 0; row < 2; ++row) {
        int src = (row == 0) ? 0 : r2;
        for (int c = 0; c < l.cols(); ++c) {
            TRatFn v(0);
            for (int m = 0; m < 3; ++m) v += pts.at(src, m) * l.at(m, c);
            line.basis.at(row, c) = v;
        }
    }

    // certificate: the recession fan of the tropicalized line must be the
    // snowflake with one ray e_a + e_b per pair (plus e_i per unpaired index)
    TropPluecker p = kminors_val(line.basis, 2);
    PolyComplex rec = recession_fan(realize_space(p, Orbit{}));
    std::set<std::string> expect, got;
    auto key = [](const std::vector<Rational>& v) {
        std::string s;
        for (const auto& x : v) s += rat_str(x) + ",";
        return s;
    };
    for (const auto& pr : pairing) {
        std::vector<Rational> e(l.cols(), Rational(0));
        e[pr[0]] = 1;
        e[pr[1]] = 1;
        expect.insert(key(canonical_ray(e)));
    }
    for (int i = 0; i < l.cols(); ++i) {
        if (used.count(i)) continue;
        std::vector<Rational> e(l.cols(), Rational(0));
        e[i] = 1;
        expect.insert(key(canonical_ray(e)));
    }
    bool shape_ok = true;
    for (const auto& cell : maximal_cells(rec).cells) {
        int qd = quotient_dim(cell);
        if (qd == 0) continue;
        if (qd != 1) {
            shape_ok = false;
            continue;
        }
        auto x = relint_point(cell);
        if (!x) continue;
        got.insert(key(canonical_ray(*x)));
    }
    line.certified = shape_ok && expect == got;
    return line;
}

}  // namespace tropfano
