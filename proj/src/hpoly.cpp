#include "tropfano/hpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropfano {

namespace {

Constraint negate(const Constraint& c) {
    // complement halfspace: not(a.x <= b) is -a.x < -b; not(a.x < b) is -a.x <= -b
    Constraint out;
    out.a.reserve(c.a.size());
    for (const auto& v : c.a) out.a.push_back(-v);
    out.b = -c.b;
    out.rel = (c.rel == Rel::LE) ? Rel::LT : Rel::LE;
    return out;
}

bool is_zero_vec(const std::vector<Rational>& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

// scale (a, b) to a primitive integer vector, preserving direction
void make_primitive(std::vector<Rational>& a, Rational& b) {
    mpz_class l(1);
    auto acc = [&](const Rational& q) { l = l * q.get_den() / gcd(l, mpz_class(q.get_den())); };
    for (const auto& v : a) acc(v);
    acc(b);
    mpz_class g(0);
    auto accg = [&](const Rational& q) {
        mpz_class num = q.get_num() * (l / q.get_den());
        g = gcd(g, num);
    };
    for (const auto& v : a) accg(v);
    accg(b);
    if (g == 0) return;
    Rational f(l, g);
    f.canonicalize();
    for (auto& v : a) v *= f;
    b *= f;
}

int cons_cmp(const Constraint& x, const Constraint& y) {
    if (x.rel != y.rel) return int(x.rel) < int(y.rel) ? -1 : 1;
    if (x.a != y.a) return x.a < y.a ? -1 : 1;
    if (x.b != y.b) return x.b < y.b ? -1 : 1;
    return 0;
}

}  // namespace

std::optional<std::vector<Rational>> feasible(const HPolyhedron& p) {
    return feasible_point(p.ambient, p.cons);
}

HPolyhedron with_constraint(const HPolyhedron& p, Constraint c) {
    HPolyhedron out(p);
    out.cons.push_back(std::move(c));
    return out;
}

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q) {
    if (p.ambient != q.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    HPolyhedron out(p);
    out.cons.insert(out.cons.end(), q.cons.begin(), q.cons.end());
    return out;
}

bool implies(const HPolyhedron& p, const Constraint& c) {
    if (c.rel == Rel::EQ) {
        Constraint le{c.a, c.b, Rel::LE};
        Constraint ge;
        ge.a.reserve(c.a.size());
        for (const auto& v : c.a) ge.a.push_back(-v);
        ge.b = -c.b;
        ge.rel = Rel::LE;
        return implies(p, le) && implies(p, ge);
    }
    return !feasible(with_constraint(p, negate(c)));
}

bool poly_subset(const HPolyhedron& p, const HPolyhedron& q) {
    if (!feasible(p)) return true;
    for (const auto& c : q.cons)
        if (!implies(p, c)) return false;
    return true;
}

namespace {

// indices of LE constraints that hold with equality on all of p (p feasible)
std::vector<bool> implicit_equalities(const HPolyhedron& p) {
    std::vector<bool> tight(p.cons.size(), false);
    for (size_t i = 0; i < p.cons.size(); ++i) {
        const auto& c = p.cons[i];
        if (c.rel != Rel::LE) continue;
        HPolyhedron q(p);
        q.cons[i].rel = Rel::LT;
        if (!feasible(q)) tight[i] = true;
    }
    return tight;
}

// row-reduce equation list (a, b) to a canonical reduced echelon basis
struct EqBasis {
    std::vector<std::vector<Rational>> rows;  // each of length ambient+1, RHS last
    std::vector<int> pivots;

    void add(std::vector<Rational> row) {
        reduce(row);
        int piv = -1;
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] != 0) {
                piv = int(j);
                break;
            }
        if (piv < 0) return;  // dependent (consistency checked by caller via LP)
        Rational lead = row[piv];
        for (auto& v : row) v /= lead;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][piv] == 0) continue;
            Rational f = rows[r][piv];
            for (size_t j = 0; j < row.size(); ++j) rows[r][j] -= f * row[j];
        }
        // keep rows ordered by pivot
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(row));
        pivots.insert(pivots.begin() + pos, piv);
    }

    void reduce(std::vector<Rational>& row) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            int piv = pivots[r];
            if (row[piv] == 0) continue;
            Rational f = row[piv];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * rows[r][j];
        }
    }
};

}  // namespace

int affine_dim(const HPolyhedron& p) {
    if (!feasible(p)) return -1;
    auto tight = implicit_equalities(p);
    EqBasis eb;
    for (size_t i = 0; i < p.cons.size(); ++i) {
        if (p.cons[i].rel == Rel::EQ || tight[i]) {
            std::vector<Rational> row = p.cons[i].a;
            row.push_back(p.cons[i].b);
            eb.add(std::move(row));
        }
    }
    return p.ambient - int(eb.rows.size());
}

std::optional<std::vector<Rational>> relint_point(const HPolyhedron& p) {
    auto w = feasible(p);
    if (!w) return std::nullopt;
    auto tight = implicit_equalities(p);
    HPolyhedron q(p.ambient);
    for (size_t i = 0; i < p.cons.size(); ++i) {
        Constraint c = p.cons[i];
        if (c.rel == Rel::LE) c.rel = tight[i] ? Rel::EQ : Rel::LT;
        q.cons.push_back(std::move(c));
    }
    return feasible(q);
}

void prune_redundant(HPolyhedron& p) {
    for (size_t i = 0; i < p.cons.size();) {
        HPolyhedron rest(p.ambient);
        for (size_t j = 0; j < p.cons.size(); ++j)
            if (j != i) rest.cons.push_back(p.cons[j]);
        if (implies(rest, p.cons[i]))
            p.cons.erase(p.cons.begin() + i);
        else
            ++i;
    }
}

// duplicate constraints and weak copies of strict ones, no LP involved
void dedup_syntactic(HPolyhedron& p) {
    std::sort(p.cons.begin(), p.cons.end(),
              [](const Constraint& x, const Constraint& y) { return cons_cmp(x, y) < 0; });
    std::vector<Constraint> kept;
    for (auto& c : p.cons) {
        bool skip = false;
        for (auto& d : kept)
            if (d.a == c.a && d.b == c.b && d.rel != Rel::EQ && c.rel != Rel::EQ) {
                if (c.rel == Rel::LT) d.rel = Rel::LT;
                skip = true;
                break;
            }
        if (!skip && !kept.empty() && kept.back().a == c.a && kept.back().b == c.b &&
            kept.back().rel == c.rel)
            skip = true;
        if (!skip) kept.push_back(std::move(c));
    }
    p.cons = std::move(kept);
}

HPolyhedron canonical_form(const HPolyhedron& p) {
    if (!feasible(p)) {
        HPolyhedron empty(p.ambient);
        empty.add(std::vector<Rational>(p.ambient, Rational(0)), Rational(-1), Rel::LE);
        return empty;
    }
    auto tight = implicit_equalities(p);
    EqBasis eb;
    for (size_t i = 0; i < p.cons.size(); ++i)
        if (p.cons[i].rel == Rel::EQ || tight[i]) {
            std::vector<Rational> row = p.cons[i].a;
            row.push_back(p.cons[i].b);
            eb.add(std::move(row));
        }

    HPolyhedron out(p.ambient);
    for (auto& row : eb.rows) {
        std::vector<Rational> a(row.begin(), row.end() - 1);
        Rational b = row.back();
        make_primitive(a, b);
        out.add(std::move(a), std::move(b), Rel::EQ);
    }
    std::vector<Constraint> ineqs;
    for (size_t i = 0; i < p.cons.size(); ++i) {
        const auto& c = p.cons[i];
        if (c.rel == Rel::EQ || tight[i]) continue;
        std::vector<Rational> row = c.a;
        row.push_back(c.b);
        eb.reduce(row);
        std::vector<Rational> a(row.begin(), row.end() - 1);
        Rational b = row.back();
        if (is_zero_vec(a)) continue;  // trivially satisfied on the affine hull
        make_primitive(a, b);
        ineqs.push_back({std::move(a), std::move(b), c.rel});
    }
    // duplicate hyperplanes: strict beats weak
    std::sort(ineqs.begin(), ineqs.end(),
              [](const Constraint& x, const Constraint& y) { return cons_cmp(x, y) < 0; });
    std::vector<Constraint> dedup;
    for (auto& c : ineqs) {
        bool skip = false;
        for (auto& d : dedup)
            if (d.a == c.a && d.b == c.b) {
                if (c.rel == Rel::LT) d.rel = Rel::LT;
                skip = true;
                break;
            }
        if (!skip) dedup.push_back(std::move(c));
    }
    out.cons.insert(out.cons.end(), dedup.begin(), dedup.end());
    prune_redundant(out);
    std::sort(out.cons.begin(), out.cons.end(),
              [](const Constraint& x, const Constraint& y) { return cons_cmp(x, y) < 0; });
    return out;
}

bool poly_equal(const HPolyhedron& p, const HPolyhedron& q) {
    return poly_subset(p, q) && poly_subset(q, p);
}

std::string poly_key(const HPolyhedron& p) {
    HPolyhedron c = canonical_form(p);
    std::ostringstream os;
    os << c.ambient << "|";
    for (const auto& con : c.cons) {
        os << (con.rel == Rel::EQ ? "E" : con.rel == Rel::LT ? "S" : "W");
        for (const auto& v : con.a) os << v.get_str() << ",";
        os << ";" << con.b.get_str() << "|";
    }
    return os.str();
}

std::vector<HPolyhedron> complement_pieces(const HPolyhedron& p) {
    if (!p.is_closed()) throw std::invalid_argument("complement_pieces: polyhedron must be closed");
    // equations split into two weak inequalities, in constraint order
    std::vector<Constraint> ordered;
    for (const auto& c : p.cons) {
        if (c.rel == Rel::EQ) {
            ordered.push_back({c.a, c.b, Rel::LE});
            Constraint ge;
            for (const auto& v : c.a) ge.a.push_back(-v);
            ge.b = -c.b;
            ge.rel = Rel::LE;
            ordered.push_back(std::move(ge));
        } else {
            ordered.push_back(c);
        }
    }
    std::vector<HPolyhedron> pieces;
    for (size_t i = 0; i < ordered.size(); ++i) {
        HPolyhedron piece(p.ambient);
        piece.cons.push_back(negate(ordered[i]));
        for (size_t j = 0; j < i; ++j) piece.cons.push_back(ordered[j]);
        if (feasible(piece)) pieces.push_back(std::move(piece));
    }
    return pieces;
}

HPolyhedron fm_project(const HPolyhedron& p, const std::vector<int>& keep) {
    std::vector<bool> keepmask(p.ambient, false);
    for (int k : keep) keepmask[k] = true;
    std::vector<int> elim;
    for (int j = 0; j < p.ambient; ++j)
        if (!keepmask[j]) elim.push_back(j);

    HPolyhedron cur(p);
    if (!feasible(cur)) {
        HPolyhedron empty(p.ambient);
        empty.add(std::vector<Rational>(p.ambient, Rational(0)), Rational(-1), Rel::LE);
        return empty;
    }
    dedup_syntactic(cur);
    while (!elim.empty()) {
        // eliminate by substitution when an equation carries the variable,
        // otherwise pick the variable with the fewest pos*neg combinations
        int chosen = -1;
        int eqrow = -1;
        long best_cost = -1;
        for (size_t vi = 0; vi < elim.size(); ++vi) {
            int v = elim[vi];
            int eqr = -1;
            long npos = 0, nneg = 0;
            for (size_t i = 0; i < cur.cons.size(); ++i) {
                const auto& c = cur.cons[i];
                if (c.a[v] == 0) continue;
                if (c.rel == Rel::EQ && eqr < 0) eqr = int(i);
                if (c.a[v] > 0)
                    ++npos;
                else
                    ++nneg;
            }
            if (eqr >= 0) {
                chosen = v;
                eqrow = eqr;
                break;
            }
            long cost = npos * nneg;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                chosen = v;
                eqrow = -1;
            }
        }
        int v = chosen;
        elim.erase(std::find(elim.begin(), elim.end(), v));

        HPolyhedron next(p.ambient);
        if (eqrow >= 0) {
            Constraint eq = cur.cons[eqrow];
            for (size_t i = 0; i < cur.cons.size(); ++i) {
                if (int(i) == eqrow) continue;
                Constraint c = cur.cons[i];
                if (c.a[v] != 0) {
                    Rational f = c.a[v] / eq.a[v];
                    for (int j = 0; j < p.ambient; ++j) c.a[j] -= f * eq.a[j];
                    c.b -= f * eq.b;
                    c.a[v] = 0;
                }
                next.cons.push_back(std::move(c));
            }
        } else {
            std::vector<size_t> pos, neg;
            for (size_t i = 0; i < cur.cons.size(); ++i) {
                const auto& c = cur.cons[i];
                if (c.a[v] == 0)
                    next.cons.push_back(c);
                else if (c.a[v] > 0)
                    pos.push_back(i);
                else
                    neg.push_back(i);
            }
            for (size_t ip : pos)
                for (size_t in : neg) {
                    const auto& cp = cur.cons[ip];
                    const auto& cn = cur.cons[in];
                    Rational fp = cp.a[v], fn = -cn.a[v];
                    Constraint c;
                    c.a.resize(p.ambient, Rational(0));
                    for (int j = 0; j < p.ambient; ++j) c.a[j] = fn * cp.a[j] + fp * cn.a[j];
                    c.b = fn * cp.b + fp * cn.b;
                    c.a[v] = 0;
                    c.rel = (cp.rel == Rel::LT || cn.rel == Rel::LT) ? Rel::LT : Rel::LE;
                    if (is_zero_vec(c.a)) continue;  // 0 <= b combinations always hold here
                    next.cons.push_back(std::move(c));
                }
        }
        dedup_syntactic(next);
        // LP pruning only when a combination step grew the system; the
        // per-constraint LPs dominate the cost otherwise
        if (eqrow < 0 && next.cons.size() > cur.cons.size()) prune_redundant(next);
        cur = std::move(next);
    }
    return cur;
}

HPolyhedron restrict_coords(const HPolyhedron& p, const std::vector<int>& keep) {
    HPolyhedron out(int(keep.size()));
    for (const auto& c : p.cons) {
        Constraint nc;
        nc.b = c.b;
        nc.rel = c.rel;
        nc.a.reserve(keep.size());
        for (int k : keep) nc.a.push_back(c.a[k]);
        out.cons.push_back(std::move(nc));
    }
    return out;
}

HPolyhedron recession_cone(const HPolyhedron& p) {
    HPolyhedron out(p.ambient);
    for (const auto& c : p.cons) {
        Constraint nc{c.a, Rational(0), c.rel == Rel::EQ ? Rel::EQ : Rel::LE};
        out.cons.push_back(std::move(nc));
    }
    return out;
}

bool is_cone(const HPolyhedron& p) {
    if (!feasible(p)) return false;
    return poly_equal(p, recession_cone(p));
}

}  // namespace tropfano
