#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropfano/hpoly.hpp"

namespace tropfano {

// Finite collection of exact rational polyhedra sharing an ambient space.
// Cells are closed unless stated otherwise by the producing operation.
struct PolyComplex {
    int ambient = 0;
    std::vector<HPolyhedron> cells;
    bool is_fan = false;

    PolyComplex() = default;
    explicit PolyComplex(int n, bool fan = false) : ambient(n), is_fan(fan) {}

    bool empty() const { return cells.empty(); }
};

struct FanStats {
    int dim = -1;           // top cell dimension after quotienting R*(1,...,1)
    int lineality_dim = 0;  // common lineality of maximal cells, mod R*(1,...,1)
    std::map<int, int> max_cells_by_dim;
};

// dimension of P after adding the all-ones lineality and quotienting by it
int quotient_dim(const HPolyhedron& p);

// drop cells contained in another cell
PolyComplex maximal_cells(const PolyComplex& k);

// drop duplicate cells (canonical-form keys)
void dedupe_cells(PolyComplex& k);

// faces of a closed polyhedron (all dimensions, including the polyhedron)
std::vector<HPolyhedron> faces_of(const HPolyhedron& p);

FanStats fan_stats(const PolyComplex& k);

// common refinement: pairwise intersections of cells of k1 and k2, split
// along each other's boundary hyperplanes until intersections are faces
PolyComplex refine(const PolyComplex& k1, const PolyComplex& k2);

struct ContainmentResult {
    bool contained = true;
    std::optional<std::vector<Rational>> witness;  // a point of P outside |K|
};

// is the closed polyhedron P contained in the support of K?
ContainmentResult contained_in_complex(const HPolyhedron& p, const PolyComplex& k);

// support containment |K1| subset of |K2|
bool complex_subset(const PolyComplex& k1, const PolyComplex& k2);

// recession fan of a complex (cell-wise recession cones, deduplicated)
PolyComplex recession_complex(const PolyComplex& k);

// canonical representative in trop P^n: subtract the first coordinate
std::vector<Rational> trop_canonical_point(std::vector<Rational> x);

}  // namespace tropfano
