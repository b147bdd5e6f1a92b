#include "tropfano/jsonio.hpp"

namespace tropfano {

namespace {

std::vector<Rational> rat_row(const Json& j, size_t count) {
    std::vector<Rational> out;
    for (size_t i = 0; i < count; ++i) out.push_back(rat_from_json(j.at(i)));
    return out;
}

std::vector<long> int_row(const Json& j) {
    std::vector<long> out;
    for (const auto& e : j) out.push_back(e.get<long>());
    return out;
}

}  // namespace

Json rat_to_json(const Rational& q) { return rat_str(q); }

Rational rat_from_json(const Json& j) { return rat_parse(j.get<std::string>()); }

Json tropval_to_json(const TropValue& v) {
    return v.is_inf() ? Json("inf") : Json(rat_str(v.value()));
}

TropValue tropval_from_json(const Json& j) {
    std::string s = j.get<std::string>();
    if (s == "inf") return TropValue::infinity();
    return TropValue(rat_parse(s));
}

Json poly_to_json(const HPolyhedron& p) {
    Json ineq = Json::array(), eq = Json::array();
    for (const auto& c : p.cons) {
        Json row = Json::array();
        for (const auto& a : c.a) row.push_back(rat_to_json(a));
        row.push_back(rat_to_json(c.b));
        if (c.rel == Rel::EQ) {
            eq.push_back(std::move(row));
        } else {
            if (c.rel == Rel::LT) row.push_back(true);
            ineq.push_back(std::move(row));
        }
    }
    return Json{{"ineq", std::move(ineq)}, {"eq", std::move(eq)}};
}

HPolyhedron poly_from_json(const Json& j) {
    const Json& ineq = j.at("ineq");
    const Json& eq = j.at("eq");
    int ambient = -1;
    auto row_dim = [&](const Json& row, bool strict_ok) {
        size_t n = row.size();
        if (strict_ok && n > 0 && row.at(n - 1).is_boolean()) --n;
        if (n < 1) throw std::invalid_argument("polyhedron: empty constraint row");
        return int(n) - 1;
    };
    for (const auto& row : ineq) ambient = std::max(ambient, row_dim(row, true));
    for (const auto& row : eq) ambient = std::max(ambient, row_dim(row, false));
    if (ambient < 0) ambient = 0;

    HPolyhedron p(ambient);
    for (const auto& row : ineq) {
        size_t n = row.size();
        bool strict = n > 0 && row.at(n - 1).is_boolean();
        if (strict && !row.at(n - 1).get<bool>()) strict = false;
        size_t vals = n - (row.at(n - 1).is_boolean() ? 1 : 0);
        auto a = rat_row(row, vals - 1);
        a.resize(ambient, Rational(0));
        p.add(std::move(a), rat_from_json(row.at(vals - 1)), strict ? Rel::LT : Rel::LE);
    }
    for (const auto& row : eq) {
        auto a = rat_row(row, row.size() - 1);
        a.resize(ambient, Rational(0));
        p.add(std::move(a), rat_from_json(row.at(row.size() - 1)), Rel::EQ);
    }
    return p;
}

Json complex_to_json(const PolyComplex& k) {
    Json cells = Json::array();
    for (const auto& c : k.cells) cells.push_back(poly_to_json(c));
    return Json{{"ambient", k.ambient}, {"cells", std::move(cells)}, {"fan", k.is_fan}};
}

PolyComplex complex_from_json(const Json& j) {
    PolyComplex k(j.at("ambient").get<int>(), j.at("fan").get<bool>());
    for (const auto& c : j.at("cells")) {
        HPolyhedron p = poly_from_json(c);
        if (p.ambient > k.ambient)
            throw std::invalid_argument("complex: cell exceeds the ambient dimension");
        p.ambient = k.ambient;
        for (auto& con : p.cons) con.a.resize(k.ambient, Rational(0));
        k.cells.push_back(std::move(p));
    }
    return k;
}

Json system_to_json(const TropSystem& s) {
    Json polys = Json::array();
    for (const auto& f : s.polys) {
        Json terms = Json::array();
        for (const auto& t : f.terms)
            terms.push_back(Json{{"coeff", tropval_to_json(t.coeff)}, {"exp", t.exp}});
        polys.push_back(Json{{"terms", std::move(terms)}});
    }
    return Json{{"ambient", s.ambient}, {"orbit", s.orbit.inf}, {"polys", std::move(polys)}};
}

TropSystem system_from_json(const Json& j) {
    TropSystem s;
    s.ambient = j.at("ambient").get<int>();
    for (const auto& i : j.at("orbit")) s.orbit.inf.push_back(i.get<int>());
    if (!std::is_sorted(s.orbit.inf.begin(), s.orbit.inf.end()))
        throw std::invalid_argument("system: orbit indices must be increasing");
    for (const auto& jp : j.at("polys")) {
        TropPolynomial f;
        for (const auto& jt : jp.at("terms")) {
            TropTerm t;
            t.coeff = tropval_from_json(jt.at("coeff"));
            t.exp = int_row(jt.at("exp"));
            if (int(t.exp.size()) != s.ambient)
                throw std::invalid_argument("system: exponent length differs from ambient");
            f.terms.push_back(std::move(t));
        }
        s.polys.push_back(std::move(f));
    }
    return s;
}

Json plucker_to_json(const TropPluecker& p) {
    Json entries = Json::object();
    auto subs = k_subsets(p.n + 1, p.d + 1);
    for (size_t i = 0; i < subs.size(); ++i)
        entries[subset_key(subs[i])] = tropval_to_json(p.entries[i]);
    return Json{{"d", p.d}, {"n", p.n}, {"entries", std::move(entries)}};
}

TropPluecker plucker_from_json(const Json& j) {
    TropPluecker p(j.at("d").get<int>(), j.at("n").get<int>());
    if (p.d < 0 || p.n < p.d) throw std::invalid_argument("plucker: need 0 <= d <= n");
    auto subs = k_subsets(p.n + 1, p.d + 1);
    const Json& entries = j.at("entries");
    size_t used = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
        auto it = entries.find(subset_key(subs[i]));
        if (it == entries.end()) continue;
        p.entries[i] = tropval_from_json(*it);
        ++used;
    }
    if (used != entries.size())
        throw std::invalid_argument("plucker: entry key is not an ascending (d+1)-subset");
    return p;
}

Json lattice_to_json(const LatticePointSet& a) {
    Json rows = Json::array();
    for (int r = 0; r < a.a.rows(); ++r) rows.push_back(a.a.row(r));
    return Json{{"A", std::move(rows)}};
}

LatticePointSet lattice_from_json(const Json& j) {
    std::vector<std::vector<long>> rows;
    for (const auto& r : j.at("A")) rows.push_back(int_row(r));
    return LatticePointSet{IntMatrix(std::move(rows))};
}

Json cayley_to_json(const CayleyStructure& c) {
    return Json{{"s", c.s}, {"labels", c.labels}};
}

CayleyStructure cayley_from_json(const Json& j) {
    CayleyStructure c;
    c.s = j.at("s").get<int>();
    for (const auto& l : j.at("labels")) c.labels.push_back(l.get<int>());
    return c;
}

Json matrix_to_json(const TMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

TMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.at("rows");
    if (rows.empty()) throw std::invalid_argument("matrix: no rows");
    TMatrix m(int(rows.size()), int(rows.at(0).size()));
    for (int r = 0; r < m.rows(); ++r) {
        const Json& row = rows.at(r);
        if (int(row.size()) != m.cols()) throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = tratfn_parse(row.at(c).get<std::string>());
    }
    return m;
}

}  // namespace tropfano
