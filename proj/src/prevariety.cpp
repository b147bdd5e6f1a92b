#include "tropfano/prevariety.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace tropfano {

std::vector<TropTerm> orbit_terms(const TropPolynomial& f, const Orbit& o, int ambient) {
    std::vector<int> keep = o.finite_coords(ambient);
    std::vector<TropTerm> out;
    for (const auto& t : f.terms) {
        if (t.coeff.is_inf()) continue;
        bool dead = false;
        for (int i : o.inf)
            if (t.exp[i] != 0) dead = true;
        if (dead) continue;
        TropTerm r;
        r.coeff = t.coeff;
        for (int i : keep) r.exp.push_back(t.exp[i]);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// cell where terms i and j tie for the minimum
HPolyhedron tie_cell(const std::vector<TropTerm>& terms, size_t i, size_t j, int dim) {
    HPolyhedron p(dim);
    auto diff = [&](size_t a, size_t b) {
        Constraint c;
        c.a.resize(dim);
        for (int k = 0; k < dim; ++k) c.a[k] = Rational(terms[a].exp[k] - terms[b].exp[k]);
        c.b = terms[b].coeff.value() - terms[a].coeff.value();
        return c;
    };
    Constraint eq = diff(i, j);
    eq.rel = Rel::EQ;
    p.cons.push_back(std::move(eq));
    for (size_t k = 0; k < terms.size(); ++k) {
        if (k == i || k == j) continue;
        Constraint le = diff(i, k);
        le.rel = Rel::LE;
        p.cons.push_back(std::move(le));
    }
    return p;
}

// scale to primitive integer coefficients; equations get a normalized sign
void primitivize(Constraint& c) {
    mpz_class num_gcd = c.b.get_num(), den_lcm = c.b.get_den();
    for (const auto& v : c.a) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (c.rel == Rel::EQ) {
        for (const auto& v : c.a)
            if (v != 0) {
                if (v < 0) scale = -scale;
                break;
            }
    }
    for (auto& v : c.a) {
        v *= scale;
        v.canonicalize();
    }
    c.b *= scale;
    c.b.canonicalize();
}

std::string cons_str(const Constraint& c) {
    std::string s(c.rel == Rel::EQ ? "=" : (c.rel == Rel::LT ? "<" : "L"));
    for (const auto& v : c.a) s += rat_str(v) + ",";
    return s + ":" + rat_str(c.b);
}

// primitive scaling plus syntactic constraint dedupe; keeps the LPs small
// while folding many redundant polynomials
void tidy(HPolyhedron& p) {
    for (auto& c : p.cons) primitivize(c);
    std::sort(p.cons.begin(), p.cons.end(), [](const Constraint& x, const Constraint& y) {
        if (x.rel != y.rel) return x.rel < y.rel;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    p.cons.erase(std::unique(p.cons.begin(), p.cons.end(),
                             [](const Constraint& x, const Constraint& y) {
                                 return x.rel == y.rel && x.a == y.a && x.b == y.b;
                             }),
                 p.cons.end());
}

std::string tidy_key(const HPolyhedron& p) {
    std::string s;
    for (const auto& c : p.cons) s += cons_str(c) + ";";
    return s;
}

}  // namespace

PolyComplex trop_hypersurface(const TropPolynomial& f, const Orbit& o, int ambient) {
    std::vector<TropTerm> terms = orbit_terms(f, o, ambient);
    int dim = ambient - int(o.inf.size());
    if (terms.size() < 2)
        throw DegenerateSystem("trop_hypersurface: fewer than two finite terms");
    PolyComplex out(dim);
    std::set<std::string> seen;
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j) {
            HPolyhedron cell = tie_cell(terms, i, j, dim);
            if (!feasible(cell)) continue;
            cell = canonical_form(cell);
            if (seen.insert(poly_key(cell)).second) out.cells.push_back(std::move(cell));
        }
    return out;
}

PolyComplex intersect_system(const TropSystem& s) {
    int dim = s.ambient - int(s.orbit.inf.size());
    PolyComplex out(dim);

    // orbit-restrict every polynomial first; an identically-infinite one is
    // discarded, a single-term one kills the prevariety
    std::vector<std::vector<TropTerm>> systems;
    for (const auto& f : s.polys) {
        auto terms = orbit_terms(f, s.orbit, s.ambient);
        if (terms.empty()) continue;
        if (terms.size() == 1) return out;
        systems.push_back(std::move(terms));
    }
    std::sort(systems.begin(), systems.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    bool trace = std::getenv("TROPFANO_TRACE") != nullptr;

    // cells kept in canonical form together with a relative-interior witness;
    // the witness makes coverage and maximality checks mostly point queries
    struct WCell {
        HPolyhedron poly;
        std::vector<Rational> wit;
    };
    std::vector<WCell> cells;
    {
        HPolyhedron all = canonical_form(HPolyhedron(dim));
        auto w = relint_point(all);
        cells.push_back({std::move(all), std::move(*w)});
    }

    size_t fold = 0;
    for (const auto& terms : systems) {
        std::vector<WCell> next;
        std::set<std::string> seen_raw, seen;
        for (const auto& cell : cells) {
            std::vector<HPolyhedron> ties;
            for (size_t i = 0; i < terms.size(); ++i)
                for (size_t j = i + 1; j < terms.size(); ++j)
                    ties.push_back(tie_cell(terms, i, j, dim));
            // a cell inside one tie cell already satisfies the polynomial;
            // a covering tie must contain the witness
            bool covered = false;
            for (const auto& tie : ties) {
                if (!tie.contains_point(cell.wit)) continue;
                bool ok = true;
                for (const auto& c : tie.cons)
                    if (!implies(cell.poly, c)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    covered = true;
                    break;
                }
            }
            if (covered) {
                if (seen.insert(poly_key(cell.poly)).second) next.push_back(cell);
                continue;
            }
            for (const auto& tie : ties) {
                HPolyhedron c = intersect(cell.poly, tie);
                tidy(c);
                if (!seen_raw.insert(tidy_key(c)).second) continue;
                if (!feasible(c)) continue;
                c = canonical_form(c);
                if (!seen.insert(poly_key(c)).second) continue;
                auto w = relint_point(c);
                if (!w) continue;
                next.push_back({std::move(c), std::move(*w)});
            }
        }
        // drop cells contained in another: the union is unchanged
        std::vector<bool> drop(next.size(), false);
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j < next.size(); ++j) {
                if (i == j || drop[j]) continue;
                if (next[j].poly.contains_point(next[i].wit) &&
                    poly_subset(next[i].poly, next[j].poly)) {
                    drop[i] = true;
                    break;
                }
            }
        cells.clear();
        for (size_t i = 0; i < next.size(); ++i)
            if (!drop[i]) cells.push_back(std::move(next[i]));
        if (trace)
            std::fprintf(stderr, "intersect_system: fold %zu/%zu, %zu cells\n", ++fold,
                         systems.size(), cells.size());
        if (cells.empty()) return out;
    }
    for (auto& c : cells) out.cells.push_back(std::move(c.poly));
    return out;
}

bool member(const std::vector<TropValue>& x, const TropSystem& s) {
    Orbit xo;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i].is_inf()) xo.inf.push_back(int(i));
    if (!(xo == s.orbit)) throw OrbitMismatch("member: point orbit differs from system orbit");

    std::vector<int> keep = s.orbit.finite_coords(s.ambient);
    for (const auto& f : s.polys) {
        auto terms = orbit_terms(f, s.orbit, s.ambient);
        if (terms.empty()) continue;
        std::optional<Rational> best;
        int hits = 0;
        for (const auto& t : terms) {
            Rational v = t.coeff.value();
            for (size_t k = 0; k < keep.size(); ++k)
                if (t.exp[k] != 0) v += Rational(t.exp[k]) * x[keep[k]].value();
            if (!best || v < *best) {
                best = v;
                hits = 1;
            } else if (v == *best) {
                ++hits;
            }
        }
        if (hits < 2) return false;
    }
    return true;
}

}  // namespace tropfano
