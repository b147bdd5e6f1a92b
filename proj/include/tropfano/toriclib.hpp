#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tropfano/matrix.hpp"
#include "tropfano/numkernel.hpp"
#include "tropfano/troplin.hpp"

namespace tropfano {

struct NotSurjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Internal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// columns are lattice points in Z^m x {1}: the last row must be all ones
struct LatticePointSet {
    IntMatrix a;
};

// surjective labeling of the columns by {0,...,s} compatible with all affine
// relations among the points
struct CayleyStructure {
    int s = 0;
    std::vector<int> labels;  // one per column
};

// tropicalization of the toric variety on the torus: the row space of A as a
// single linear cell in R^{n+1}
PolyComplex trop_toric(const LatticePointSet& a);

// binomial exponent pairs (l+, l-) for a saturated kernel lattice basis
std::vector<std::pair<std::vector<long>, std::vector<long>>> toric_binomials(
    const LatticePointSet& a);

// surjectivity plus the kernel condition: every lattice relation sums to zero
// within each label class
bool verify_cayley(const LatticePointSet& a, const CayleyStructure& pi);

// Cayley structure induced by a tropical line inside trop X_A: columns are
// labeled by the minimal flat of the line's matroid containing them
CayleyStructure cayley_from_line(const LatticePointSet& a, const TropPluecker& p);

struct ToricLine {
    std::vector<std::vector<TRatFn>> equations;  // linear forms vanishing on the line
    TMatrix basis;                               // 2 x (n+1) row span of the line
    CayleyStructure cayley;
    bool cert_binomials = false;  // all toric binomials vanish on the line
    bool cert_plucker = false;    // kminors_val(basis) = p up to a global shift
};

// classical line over the function field realizing p inside X_A: equal
// coordinates within Cayley classes, the standard projected line across
// classes, translated by the monomial t^translation
ToricLine realize_in_toric(const LatticePointSet& a, const TropPluecker& p,
                           const std::vector<Rational>& translation);

}  // namespace tropfano
