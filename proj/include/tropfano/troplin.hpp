#pragma once

#include <stdexcept>

#include "tropfano/plucker.hpp"
#include "tropfano/prevariety.hpp"

namespace tropfano {

struct NotPluecker : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// three-term valuated Pluecker relations: for every d-subset S and
// (d+2)-subset T with |T \ S| = 3, the minimum of p_{S+i} + p_{T-i} over
// i in T \ S is attained at least twice among finite terms
bool check_3term(const TropPluecker& p);

// one min-plus circuit polynomial per (d+2)-subset T: min over i in T of
// x_i + p_{T-i}; polynomials with fewer than two finite coefficients dropped
TropSystem circuit_system(const TropPluecker& p);

struct TropLinearSpace {
    TropPluecker p;
    Orbit orbit;        // orbit of trop P^n the space is restricted to
    PolyComplex cells;  // ambient = number of finite coordinates
};

// the tropicalized linear space Gamma_p restricted to an orbit, as the
// prevariety of its circuit system
TropLinearSpace realize_space(const TropPluecker& p, const Orbit& o);

PolyComplex recession_fan(const TropLinearSpace& g);

}  // namespace tropfano
