#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropfano {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) after arithmetic; we canonicalize explicitly
// after parsing.
using Rational = mpq_class;

inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline int rat_sign(const Rational& q) { return sgn(q); }

}  // namespace tropfano
