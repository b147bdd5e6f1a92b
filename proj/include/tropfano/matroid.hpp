#pragma once

#include <stdexcept>
#include <vector>

#include "tropfano/complex.hpp"
#include "tropfano/matrix.hpp"
#include "tropfano/numkernel.hpp"
#include "tropfano/plucker.hpp"

namespace tropfano {

struct LoopsPresent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matroid on ground set {0,...,size-1} given by its bases.
struct Matroid {
    int size = 0;
    int rank = 0;
    std::vector<Subset> bases;

    int rank_of(const Subset& s) const;
    Subset closure(const Subset& s) const;
    bool is_loop(int e) const;
    bool has_loops() const;
    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.size == b.size && a.rank == b.rank && a.bases == b.bases;
    }
};

Matroid uniform_matroid(int rank, int size);

// bases = maximal independent column subsets
Matroid matroid_from_columns(const QMatrix& m);
Matroid matroid_from_columns(const TMatrix& m);

// bases = subsets with finite Pluecker entry
Matroid matroid_from_plucker(const TropPluecker& p);

struct FlatData {
    std::vector<Subset> flats;          // nonempty proper flats and the ground set
    std::vector<Subset> minimal_flats;  // minimal nonempty flats
    std::vector<std::vector<Subset>> maximal_chains;  // length = rank, ending at the ground set
};

FlatData flats_minimal_and_chains(const Matroid& m);

// Bergman fan in R^size with all-ones lineality: cones over maximal flag-of-
// flats chains, then adjacent cones with convex union are merged so uniform
// matroids come out with their coarse pos(e_S) cones; faces included.
PolyComplex bergman_fan(const Matroid& m);

}  // namespace tropfano
