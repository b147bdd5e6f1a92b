#include "tropfano/dd.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropfano {

namespace {

void make_primitive_vec(std::vector<Rational>& a) {
    mpz_class l(1);
    for (const auto& v : a) l = l * v.get_den() / gcd(l, mpz_class(v.get_den()));
    mpz_class g(0);
    for (const auto& v : a) g = gcd(g, mpz_class(v.get_num() * (l / v.get_den())));
    if (g == 0) return;
    Rational f(l, g);
    f.canonicalize();
    for (auto& v : a) v *= f;
}

}  // namespace

ConeGenerators cone_generators(int dim, const std::vector<Constraint>& cons) {
    // start from the full space
    std::vector<std::vector<Rational>> lin(dim, std::vector<Rational>(dim, Rational(0)));
    for (int i = 0; i < dim; ++i) lin[i][i] = 1;
    std::vector<std::vector<Rational>> rays;

    // halfspace list: equations expand into two inequalities
    std::vector<std::vector<Rational>> halves;
    for (const auto& c : cons) {
        if (c.b != 0) throw std::invalid_argument("cone_generators: inhomogeneous constraint");
        halves.push_back(c.a);
        if (c.rel == Rel::EQ) {
            std::vector<Rational> neg;
            for (const auto& v : c.a) neg.push_back(-v);
            halves.push_back(std::move(neg));
        }
    }

    std::vector<std::vector<Rational>> processed;  // normals handled so far
    for (const auto& a : halves) {
        // value of a on each generator
        auto val = [&](const std::vector<Rational>& g) { return dot(a, g); };

        int lpiv = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (val(lin[i]) != 0) {
                lpiv = int(i);
                break;
            }
        if (lpiv >= 0) {
            // split one lineality direction: project everything onto a.x = 0,
            // keep the halfline pointing into a.x <= 0 as a new ray
            std::vector<Rational> l = lin[lpiv];
            Rational lv = val(l);
            lin.erase(lin.begin() + lpiv);
            auto project = [&](std::vector<Rational>& g) {
                Rational f = val(g) / lv;
                if (f == 0) return;
                for (int j = 0; j < dim; ++j) g[j] -= f * l[j];
            };
            for (auto& g : lin) project(g);
            for (auto& g : rays) project(g);
            std::vector<Rational> r = l;
            if (lv > 0)
                for (auto& v : r) v = -v;
            make_primitive_vec(r);
            rays.push_back(std::move(r));
            processed.push_back(a);
            continue;
        }

        std::vector<size_t> pos, negi, zero;
        for (size_t i = 0; i < rays.size(); ++i) {
            int s = sgn(val(rays[i]));
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                negi.push_back(i);
            else
                zero.push_back(i);
        }
        if (pos.empty()) {
            processed.push_back(a);
            continue;
        }
        std::vector<std::vector<Rational>> next;
        for (size_t i : negi) next.push_back(rays[i]);
        for (size_t i : zero) next.push_back(rays[i]);
        // combinatorial adjacency test on the processed constraints
        auto tightset = [&](const std::vector<Rational>& g) {
            std::vector<bool> t(processed.size());
            for (size_t i = 0; i < processed.size(); ++i) t[i] = (dot(processed[i], g) == 0);
            return t;
        };
        std::vector<std::vector<bool>> tights(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) tights[i] = tightset(rays[i]);
        auto adjacent = [&](size_t i, size_t j) {
            std::vector<bool> common(processed.size());
            for (size_t c = 0; c < processed.size(); ++c) common[c] = tights[i][c] && tights[j][c];
            for (size_t r = 0; r < rays.size(); ++r) {
                if (r == i || r == j) continue;
                bool covers = true;
                for (size_t c = 0; c < processed.size() && covers; ++c)
                    if (common[c] && !tights[r][c]) covers = false;
                if (covers) return false;
            }
            return true;
        };
        for (size_t ip : pos)
            for (size_t in : negi) {
                if (!adjacent(ip, in)) continue;
                Rational vp = val(rays[ip]), vn = val(rays[in]);
                std::vector<Rational> r(dim);
                for (int j = 0; j < dim; ++j) r[j] = vp * rays[in][j] - vn * rays[ip][j];
                make_primitive_vec(r);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
        processed.push_back(a);
    }

    for (auto& l : lin) make_primitive_vec(l);
    return {std::move(rays), std::move(lin)};
}

VPolyhedron hv_convert(const HPolyhedron& p) {
    if (!p.is_closed()) throw std::invalid_argument("hv_convert: strict inequalities present");
    VPolyhedron out;
    out.ambient = p.ambient;
    if (!feasible(p)) return out;
    // homogenize: cone over (x, lambda) with lambda >= 0
    int dim = p.ambient + 1;
    std::vector<Constraint> cc;
    for (const auto& c : p.cons) {
        Constraint h;
        h.a = c.a;
        h.a.push_back(-c.b);
        h.b = 0;
        h.rel = c.rel;
        cc.push_back(std::move(h));
    }
    Constraint lam;
    lam.a.assign(dim, Rational(0));
    lam.a[dim - 1] = -1;
    lam.b = 0;
    lam.rel = Rel::LE;
    cc.push_back(std::move(lam));

    ConeGenerators g = cone_generators(dim, cc);
    for (auto& r : g.rays) {
        Rational l = r[dim - 1];
        r.pop_back();
        if (l > 0) {
            for (auto& v : r) v /= l;
            out.vertices.push_back(std::move(r));
        } else {
            out.rays.push_back(std::move(r));
        }
    }
    for (auto& l : g.lineality) {
        l.pop_back();  // lambda-component is zero after the lambda constraint
        out.lineality.push_back(std::move(l));
    }
    return out;
}

HPolyhedron vh_convert(const VPolyhedron& v) {
    HPolyhedron out(v.ambient);
    if (v.vertices.empty()) {
        out.add(std::vector<Rational>(v.ambient, Rational(0)), Rational(-1), Rel::LE);
        return out;
    }
    // valid inequalities (a, b): a.vertex <= b, a.ray <= 0, a.lineality = 0
    // form a cone in (a, b)-space; its generators are the facets, its
    // lineality the affine-hull equations
    int dim = v.ambient + 1;
    std::vector<Constraint> cc;
    for (const auto& p : v.vertices) {
        Constraint c;
        c.a = p;
        c.a.push_back(Rational(-1));
        c.b = 0;
        c.rel = Rel::LE;
        cc.push_back(std::move(c));
    }
    for (const auto& r : v.rays) {
        Constraint c;
        c.a = r;
        c.a.push_back(Rational(0));
        c.b = 0;
        c.rel = Rel::LE;
        cc.push_back(std::move(c));
    }
    for (const auto& l : v.lineality) {
        Constraint c;
        c.a = l;
        c.a.push_back(Rational(0));
        c.b = 0;
        c.rel = Rel::EQ;
        cc.push_back(std::move(c));
    }
    ConeGenerators g = cone_generators(dim, cc);
    for (auto& r : g.rays) {
        Rational b = r.back();
        r.pop_back();
        bool zero = true;
        for (const auto& x : r)
            if (x != 0) zero = false;
        if (zero) continue;  // the trivial inequality 0 <= b
        out.add(std::move(r), std::move(b), Rel::LE);
    }
    for (auto& l : g.lineality) {
        Rational b = l.back();
        l.pop_back();
        bool zero = true;
        for (const auto& x : l)
            if (x != 0) zero = false;
        if (zero) continue;
        out.add(std::move(l), std::move(b), Rel::EQ);
    }
    return out;
}

}  // namespace tropfano
