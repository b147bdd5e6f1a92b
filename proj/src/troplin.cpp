#include "tropfano/troplin.hpp"

#include <algorithm>

namespace tropfano {

bool check_3term(const TropPluecker& p) {
    int n1 = p.n + 1;
    for (const auto& s : k_subsets(n1, p.d))
        for (const auto& t : k_subsets(n1, p.d + 2)) {
            std::vector<int> rest;
            for (int i : t)
                if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
            if (rest.size() != 3) continue;
            std::optional<Rational> best;
            int hits = 0, finite = 0;
            for (int i : rest) {
                TropValue v = tmul(p.at(subset_insert(s, i)), p.at(subset_erase(t, i)));
                if (v.is_inf()) continue;
                ++finite;
                if (!best || v.value() < *best) {
                    best = v.value();
                    hits = 1;
                } else if (v.value() == *best) {
                    ++hits;
                }
            }
            if (finite > 0 && hits < 2) return false;
        }
    return true;
}

TropSystem circuit_system(const TropPluecker& p) {
    if (p.all_infinite()) throw NotPluecker("circuit_system: all entries infinite");
    if (!check_3term(p)) throw NotPluecker("circuit_system: three-term relations fail");
    TropSystem s;
    s.ambient = p.n + 1;
    for (const auto& t : k_subsets(p.n + 1, p.d + 2)) {
        TropPolynomial f;
        int finite = 0;
        for (int i : t) {
            TropTerm term;
            term.coeff = p.at(subset_erase(t, i));
            term.exp.assign(p.n + 1, 0);
            term.exp[i] = 1;
            if (!term.coeff.is_inf()) ++finite;
            f.terms.push_back(std::move(term));
        }
        if (finite >= 2) s.polys.push_back(std::move(f));
    }
    return s;
}

TropLinearSpace realize_space(const TropPluecker& p, const Orbit& o) {
    TropLinearSpace g;
    g.p = p;
    g.orbit = o;
    TropSystem s = circuit_system(p);
    s.orbit = o;
    g.cells = intersect_system(s);
    return g;
}

PolyComplex recession_fan(const TropLinearSpace& g) {
    return recession_complex(g.cells);
}

}  // namespace tropfano
