#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropfano/lp.hpp"

namespace tropfano {

// Exact rational polyhedron in H-representation with first-class strict
// inequalities; an open polyhedron is one all of whose non-implied
// inequalities are strict.
struct HPolyhedron {
    int ambient = 0;
    std::vector<Constraint> cons;

    HPolyhedron() = default;
    explicit HPolyhedron(int n) : ambient(n) {}

    HPolyhedron& add(std::vector<Rational> a, Rational b, Rel rel = Rel::LE) {
        cons.push_back({std::move(a), std::move(b), rel});
        return *this;
    }

    bool is_closed() const {
        for (const auto& c : cons)
            if (c.rel == Rel::LT) return false;
        return true;
    }

    bool contains_point(const std::vector<Rational>& x) const {
        for (const auto& c : cons)
            if (!satisfies(c, x)) return false;
        return true;
    }

    // weaken every strict inequality; equals the closure when feasible
    HPolyhedron weakened() const {
        HPolyhedron p(*this);
        for (auto& c : p.cons)
            if (c.rel == Rel::LT) c.rel = Rel::LE;
        return p;
    }
};

std::optional<std::vector<Rational>> feasible(const HPolyhedron& p);

// P together with one extra constraint (no copy helper at call sites)
HPolyhedron with_constraint(const HPolyhedron& p, Constraint c);

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q);

// does every point of p satisfy c?
bool implies(const HPolyhedron& p, const Constraint& c);

// containment of point sets (q may have strict constraints; p is the candidate subset)
bool poly_subset(const HPolyhedron& p, const HPolyhedron& q);

// dimension of the affine hull; -1 for the empty polyhedron
int affine_dim(const HPolyhedron& p);

// point in the relative interior (all non-implicit inequalities strict)
std::optional<std::vector<Rational>> relint_point(const HPolyhedron& p);

// irredundant, normalized representation: implicit equalities promoted to
// equations, equation system row-reduced, inequalities reduced modulo the
// equations, scaled to primitive integer vectors, duplicates and redundant
// constraints dropped, result sorted. Canonical forms of equal point sets
// coincide, so this doubles as an equality key. Empty polyhedra canonicalize
// to a fixed infeasible form.
HPolyhedron canonical_form(const HPolyhedron& p);

// drop constraints implied by the rest (one LP per constraint)
void prune_redundant(HPolyhedron& p);

bool poly_equal(const HPolyhedron& p, const HPolyhedron& q);

std::string poly_key(const HPolyhedron& p);  // string key of canonical form

// pairwise-disjoint open pieces covering the complement of a closed polyhedron
std::vector<HPolyhedron> complement_pieces(const HPolyhedron& p);

// Fourier-Motzkin projection onto the kept coordinates (result lives in the
// same ambient space with eliminated coordinates unconstrained and zeroed in
// constraint vectors); strictness propagates through combinations.
HPolyhedron fm_project(const HPolyhedron& p, const std::vector<int>& keep);

// drop coordinates not in keep, re-indexing the ambient space
HPolyhedron restrict_coords(const HPolyhedron& p, const std::vector<int>& keep);

// recession cone (b = 0 everywhere, strict made weak)
HPolyhedron recession_cone(const HPolyhedron& p);

// is the polyhedron a cone through the origin?
bool is_cone(const HPolyhedron& p);

}  // namespace tropfano
