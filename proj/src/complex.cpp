#include "tropfano/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropfano {

namespace {

// rank of a list of rational vectors
int vec_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                piv = int(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (int(r) == rank || rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool sums_to_zero(const std::vector<Rational>& a) {
    Rational s(0);
    for (const auto& v : a) s += v;
    return s == 0;
}

}  // namespace

int quotient_dim(const HPolyhedron& p) {
    HPolyhedron c = canonical_form(p);
    // canonical form of an empty polyhedron is 0 <= -1
    for (const auto& con : c.cons)
        if (con.rel == Rel::LE && con.b < 0) {
            bool zero = true;
            for (const auto& v : con.a)
                if (v != 0) zero = false;
            if (zero) return -1;
        }
    std::vector<std::vector<Rational>> eqs;
    bool ones_in_hull = true;
    for (const auto& con : c.cons)
        if (con.rel == Rel::EQ) {
            eqs.push_back(con.a);
            if (!sums_to_zero(con.a)) ones_in_hull = false;
        }
    int hull_dim = p.ambient - vec_rank(eqs);
    return (ones_in_hull ? hull_dim : hull_dim + 1) - 1;
}

PolyComplex maximal_cells(const PolyComplex& k) {
    PolyComplex out(k.ambient, k.is_fan);
    std::vector<HPolyhedron> canon;
    std::vector<std::vector<Rational>> wit;
    std::set<std::string> seen;
    for (const auto& c : k.cells) {
        HPolyhedron cf = canonical_form(c);
        auto w = relint_point(cf);
        if (!w) continue;  // empty cells are never maximal
        if (!seen.insert(poly_key(cf)).second) continue;
        canon.push_back(std::move(cf));
        wit.push_back(std::move(*w));
    }
    std::vector<bool> drop(canon.size(), false);
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = 0; j < canon.size(); ++j) {
            if (i == j || drop[j]) continue;
            // a strict superset must contain the relative-interior witness,
            // so the LP check rarely runs
            if (canon[j].contains_point(wit[i]) && poly_subset(canon[i], canon[j])) {
                drop[i] = true;
                break;
            }
        }
    for (size_t i = 0; i < canon.size(); ++i)
        if (!drop[i]) out.cells.push_back(canon[i]);
    return out;
}

void dedupe_cells(PolyComplex& k) {
    std::set<std::string> seen;
    std::vector<HPolyhedron> kept;
    for (auto& c : k.cells) {
        HPolyhedron cf = canonical_form(c);
        std::string key = poly_key(cf);
        if (seen.insert(key).second) kept.push_back(std::move(cf));
    }
    k.cells = std::move(kept);
}

std::vector<HPolyhedron> faces_of(const HPolyhedron& p) {
    std::vector<HPolyhedron> out;
    HPolyhedron base = canonical_form(p);
    if (!feasible(base)) return out;
    std::set<std::string> seen;
    std::vector<HPolyhedron> work{base};
    seen.insert(poly_key(base));
    while (!work.empty()) {
        HPolyhedron f = std::move(work.back());
        work.pop_back();
        out.push_back(f);
        for (size_t i = 0; i < f.cons.size(); ++i) {
            if (f.cons[i].rel != Rel::LE) continue;
            HPolyhedron child(f);
            child.cons[i].rel = Rel::EQ;
            if (!feasible(child)) continue;
            child = canonical_form(child);
            if (seen.insert(poly_key(child)).second) work.push_back(std::move(child));
        }
    }
    return out;
}

FanStats fan_stats(const PolyComplex& k) {
    FanStats st;
    PolyComplex mx = maximal_cells(k);
    std::vector<std::vector<Rational>> all_normals;
    for (const auto& c : mx.cells) {
        int d = quotient_dim(c);
        if (d < 0) continue;
        st.max_cells_by_dim[d]++;
        st.dim = std::max(st.dim, d);
        for (const auto& con : c.cons) all_normals.push_back(con.a);
    }
    if (!mx.cells.empty()) {
        int lin = mx.cells[0].ambient - vec_rank(all_normals);
        bool ones_in_lin = true;
        for (const auto& a : all_normals)
            if (!sums_to_zero(a)) ones_in_lin = false;
        st.lineality_dim = ones_in_lin ? lin - 1 : lin;
        if (st.lineality_dim < 0) st.lineality_dim = 0;
    }
    return st;
}

namespace {

// is f (nonempty, f subset of c) a face of c?
bool is_face_of(const HPolyhedron& f, const HPolyhedron& c) {
    HPolyhedron tightened(c);
    for (auto& con : tightened.cons) {
        if (con.rel != Rel::LE) continue;
        if (implies(f, Constraint{con.a, con.b, Rel::EQ})) con.rel = Rel::EQ;
    }
    return poly_subset(tightened, f);  // the reverse inclusion holds by construction
}

}  // namespace

PolyComplex refine(const PolyComplex& k1, const PolyComplex& k2) {
    if (k1.ambient != k2.ambient) throw std::invalid_argument("refine: ambient mismatch");
    PolyComplex out(k1.ambient, k1.is_fan && k2.is_fan);
    for (const auto& a : k1.cells)
        for (const auto& b : k2.cells) {
            HPolyhedron c = intersect(a, b);
            if (feasible(c)) out.cells.push_back(canonical_form(c));
        }
    dedupe_cells(out);

    // restore the complex property: split cells whose pairwise intersection
    // is not a common face
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 1000) {
        changed = false;
        for (size_t i = 0; i < out.cells.size() && !changed; ++i)
            for (size_t j = 0; j < out.cells.size() && !changed; ++j) {
                if (i == j) continue;
                HPolyhedron f = intersect(out.cells[i], out.cells[j]);
                if (!feasible(f)) continue;
                f = canonical_form(f);
                if (is_face_of(f, out.cells[i])) continue;
                // split cell i along an affine-hull equation of f
                for (const auto& con : f.cons) {
                    if (con.rel != Rel::EQ) continue;
                    Constraint eq{con.a, con.b, Rel::EQ};
                    if (implies(out.cells[i], eq)) continue;
                    HPolyhedron below = with_constraint(out.cells[i], {con.a, con.b, Rel::LE});
                    std::vector<Rational> nega;
                    for (const auto& v : con.a) nega.push_back(-v);
                    HPolyhedron above = with_constraint(out.cells[i], {nega, -con.b, Rel::LE});
                    HPolyhedron on = with_constraint(out.cells[i], eq);
                    out.cells.erase(out.cells.begin() + i);
                    for (auto* piece : {&below, &above, &on})
                        if (feasible(*piece)) out.cells.push_back(canonical_form(*piece));
                    dedupe_cells(out);
                    changed = true;
                    break;
                }
            }
    }
    return out;
}

ContainmentResult contained_in_complex(const HPolyhedron& p, const PolyComplex& k) {
    if (!p.is_closed()) throw std::invalid_argument("contained_in_complex: P must be closed");
    ContainmentResult res;
    std::vector<HPolyhedron> work;
    if (feasible(p)) work.push_back(p);
    std::set<std::string> seen;
    while (!work.empty()) {
        HPolyhedron q = std::move(work.back());
        work.pop_back();
        std::string key = poly_key(q);
        if (!seen.insert(key).second) continue;

        int qdim = affine_dim(q);
        bool covered = false;
        int best_cell = -1;
        for (size_t ci = 0; ci < k.cells.size(); ++ci) {
            if (poly_subset(q, k.cells[ci])) {
                covered = true;
                break;
            }
            if (best_cell < 0) {
                HPolyhedron meet = intersect(q, k.cells[ci]);
                if (affine_dim(meet) == qdim) best_cell = int(ci);
            }
        }
        if (covered) continue;
        if (best_cell < 0) {
            res.contained = false;
            res.witness = relint_point(q);
            return res;
        }
        const HPolyhedron& sigma = k.cells[best_cell];
        // split q along sigma: discard q cap sigma, recurse on the closures of
        // the complement pieces
        std::vector<Constraint> ordered;
        for (const auto& c : sigma.cons) {
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
        for (size_t i = 0; i < ordered.size(); ++i) {
            HPolyhedron piece(q);
            // closure of the strict complement piece
            Constraint viol;
            for (const auto& v : ordered[i].a) viol.a.push_back(-v);
            viol.b = -ordered[i].b;
            viol.rel = Rel::LE;  // closure of a.x > b
            // the open piece must be nonempty before closing
            HPolyhedron open_piece(q);
            Constraint sviol = viol;
            sviol.rel = Rel::LT;
            open_piece.cons.push_back(sviol);
            for (size_t j = 0; j < i; ++j) open_piece.cons.push_back(ordered[j]);
            if (!feasible(open_piece)) continue;
            piece.cons.push_back(viol);
            for (size_t j = 0; j < i; ++j) piece.cons.push_back(ordered[j]);
            work.push_back(canonical_form(piece));
        }
    }
    return res;
}

bool complex_subset(const PolyComplex& k1, const PolyComplex& k2) {
    for (const auto& c : k1.cells)
        if (feasible(c) && !contained_in_complex(c.weakened(), k2).contained) return false;
    return true;
}

PolyComplex recession_complex(const PolyComplex& k) {
    PolyComplex out(k.ambient, true);
    for (const auto& c : k.cells)
        if (feasible(c)) out.cells.push_back(recession_cone(c.weakened()));
    dedupe_cells(out);
    return out;
}

std::vector<Rational> trop_canonical_point(std::vector<Rational> x) {
    if (x.empty()) return x;
    Rational first = x[0];
    for (auto& v : x) v -= first;
    return x;
}

}  // namespace tropfano
