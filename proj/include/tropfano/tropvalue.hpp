#pragma once

#include <stdexcept>
#include <string>

#include "tropfano/rational.hpp"

namespace tropfano {

// Element of the min-plus semiring: a rational number or +infinity.
struct TropValue {
    bool inf = true;
    Rational v;  // meaningful only when !inf

    TropValue() = default;
    TropValue(Rational r) : inf(false), v(std::move(r)) {}  // NOLINT implicit
    static TropValue infinity() { return TropValue(); }

    bool is_inf() const { return inf; }
    const Rational& value() const {
        if (inf) throw std::domain_error("TropValue: infinity has no finite value");
        return v;
    }

    friend TropValue tadd(const TropValue& a, const TropValue& b) {  // min
        if (a.inf) return b;
        if (b.inf) return a;
        return TropValue(a.v <= b.v ? a.v : b.v);
    }
    friend TropValue tmul(const TropValue& a, const TropValue& b) {  // +, inf absorbing
        if (a.inf || b.inf) return TropValue::infinity();
        return TropValue(a.v + b.v);
    }
    friend bool operator==(const TropValue& a, const TropValue& b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.v == b.v;
    }
    friend bool operator!=(const TropValue& a, const TropValue& b) { return !(a == b); }

    std::string str() const { return inf ? "inf" : rat_str(v); }
};

}  // namespace tropfano
