#pragma once

#include <stdexcept>
#include <vector>

#include "tropfano/complex.hpp"
#include "tropfano/tropvalue.hpp"

namespace tropfano {

struct DegenerateSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrbitMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orbit of trop P^n: the set of coordinates pinned to infinity.
struct Orbit {
    std::vector<int> inf;  // strictly increasing

    bool contains(int i) const { return std::binary_search(inf.begin(), inf.end(), i); }
    // finite coordinates, in increasing order
    std::vector<int> finite_coords(int n_plus_1) const {
        std::vector<int> out;
        for (int i = 0; i < n_plus_1; ++i)
            if (!contains(i)) out.push_back(i);
        return out;
    }
    friend bool operator==(const Orbit& a, const Orbit& b) { return a.inf == b.inf; }
};

// Min-plus polynomial: min over terms of coeff + exp . x.
struct TropTerm {
    TropValue coeff;
    std::vector<long> exp;  // length n+1, nonnegative
};
struct TropPolynomial {
    std::vector<TropTerm> terms;
};

struct TropSystem {
    int ambient = 0;  // n+1 homogeneous coordinates
    std::vector<TropPolynomial> polys;
    Orbit orbit;
};

// Terms surviving on the orbit (finite coeff, no exponent on an infinite
// coordinate), with exponents restricted to the finite coordinates.
std::vector<TropTerm> orbit_terms(const TropPolynomial& f, const Orbit& o, int ambient);

// Complex of cells where the minimum is attained by (at least) a given pair
// of terms. Ambient of the result = number of finite coordinates.
PolyComplex trop_hypersurface(const TropPolynomial& f, const Orbit& o, int ambient);
inline PolyComplex trop_hypersurface(const TropPolynomial& f, int ambient) {
    return trop_hypersurface(f, Orbit{}, ambient);
}

// Tropical prevariety cut out by the system on its orbit: iterated pairwise
// intersection with infeasibility pruning; maximal cells only.
PolyComplex intersect_system(const TropSystem& s);

// min attained at least twice for every polynomial (identically-infinite
// polynomials are vacuous)
bool member(const std::vector<TropValue>& x, const TropSystem& s);

}  // namespace tropfano
