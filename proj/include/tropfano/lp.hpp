#pragma once

#include <optional>
#include <vector>

#include "tropfano/rational.hpp"

namespace tropfano {

enum class Rel { LE, LT, EQ };

struct Constraint {
    std::vector<Rational> a;
    Rational b;
    Rel rel = Rel::LE;
};

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * x[i];
    return s;
}

inline bool satisfies(const Constraint& c, const std::vector<Rational>& x) {
    Rational v = dot(c.a, x);
    switch (c.rel) {
        case Rel::LE: return v <= c.b;
        case Rel::LT: return v < c.b;
        case Rel::EQ: return v == c.b;
    }
    return false;
}

// Exact feasibility of a mixed weak/strict/equality linear system.
// Returns a point satisfying every constraint (strict ones strictly), or
// nullopt if the system is infeasible. Equalities are eliminated by
// substitution; strictness is handled with an auxiliary margin variable
// maximized by a two-phase simplex with Bland's rule.
std::optional<std::vector<Rational>> feasible_point(int dim, const std::vector<Constraint>& cons);

}  // namespace tropfano
