#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tropfano/subsets.hpp"
#include "tropfano/tropvalue.hpp"

namespace tropfano {

// Valuated Pluecker vector of a d-dimensional tropicalized linear space in
// trop P^n: one tropical value per (d+1)-subset of {0,...,n}, lex order.
struct TropPluecker {
    int d = 0;
    int n = 0;
    std::vector<TropValue> entries;  // indexed by lex rank of the (d+1)-subset

    TropPluecker() = default;
    TropPluecker(int d_, int n_) : d(d_), n(n_) {
        entries.assign(k_subsets(n + 1, d + 1).size(), TropValue::infinity());
    }

    const TropValue& at(const Subset& s) const { return entries[subset_rank(s, n + 1)]; }
    void set(const Subset& s, TropValue v) { entries[subset_rank(s, n + 1)] = std::move(v); }

    bool all_infinite() const {
        for (const auto& e : entries)
            if (!e.is_inf()) return false;
        return true;
    }

    // projective normalization: minimum finite entry becomes 0
    void normalize() {
        const Rational* best = nullptr;
        for (const auto& e : entries)
            if (!e.is_inf() && (!best || e.v < *best)) best = &e.v;
        if (!best) return;
        Rational shift = *best;
        for (auto& e : entries)
            if (!e.is_inf()) e.v -= shift;
    }

    friend bool operator==(const TropPluecker& a, const TropPluecker& b) {
        return a.d == b.d && a.n == b.n && a.entries == b.entries;
    }
};

}  // namespace tropfano
