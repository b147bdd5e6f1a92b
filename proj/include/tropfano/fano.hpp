#pragma once

#include <optional>
#include <string>

#include "tropfano/matrix.hpp"
#include "tropfano/numkernel.hpp"
#include "tropfano/troplin.hpp"

namespace tropfano {

struct BadDimensions : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfScope : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FanoResult {
    int d = 0;
    int n = 0;
    Orbit orbit;         // orbit of the Pluecker space
    PolyComplex cells;   // ambient = number of finite Pluecker coordinates
    std::string provenance;  // "incidence" or "projection"
};

// three-term Pluecker relations on the (d+1)-subset coordinates, as
// min-plus polynomials (deduplicated)
TropSystem plucker_relations(int d, int n);

// Pluecker relations plus the incidence relations of the e-plane w against
// an unknown d-space: for S subset of T, |S| = d, |T| = e+2, the polynomial
// min over i in T-S of p_{S+i} + w_{T-i}
TropSystem incidence_system(const TropPluecker& w, int d);

// the incidence-prevariety route to F_d(trop of the linear space w)
FanoResult fano_linear(const TropPluecker& w, int d, const Orbit& o);

// the projection route of the structure theorem: parametric cells per cone
// of the Pluecker prevariety, lifted bad set, Fourier-Motzkin projection
FanoResult fano_general(const PolyComplex& tropx, int d, int n, const Orbit& o);

struct LineContainment {
    bool contained = true;
    std::optional<std::vector<Rational>> witness;
};
LineContainment contains_line(const TropPluecker& p, const PolyComplex& tropx, const Orbit& o);

// second exterior power: rows indexed by row pairs, columns by column pairs
// of m, entries the signed 2x2 minors
TMatrix wedge_square(const TMatrix& m);

// tropicalization of the Fano scheme of lines of the plane spanned by the
// rows of l (a linearly embedded P^2, realized via the wedge matrix)
PolyComplex classical_plane_fano_trop(const TMatrix& l);

struct GenericityReport {
    bool cond_I = true;
    bool cond_II = true;
    std::vector<Subset> bad_triples;                // triples violating (I)
    std::vector<std::vector<Subset>> bad_pairings;  // 3-pairings violating (II)
};
GenericityReport genericity_check(const TMatrix& l);

struct PairingLine {
    TMatrix basis;  // 2 x (n+1) over the function field
    bool certified = false;
};
// line through the coordinate-pair intersection points of a pairing, if the
// points are collinear; certified against the matching snowflake recession
std::optional<PairingLine> pairing_line(const TMatrix& l, const std::vector<Subset>& pairing);

}  // namespace tropfano
