#pragma once

#include <json.hpp>

#include "tropfano/complex.hpp"
#include "tropfano/plucker.hpp"
#include "tropfano/prevariety.hpp"
#include "tropfano/toriclib.hpp"

namespace tropfano {

using Json = nlohmann::ordered_json;

// rationals travel as exact strings "p/q"; tropical values additionally as "inf"
Json rat_to_json(const Rational& q);
Rational rat_from_json(const Json& j);
Json tropval_to_json(const TropValue& v);
TropValue tropval_from_json(const Json& j);

// {"ineq": [[a_0,...,a_n, b] or [..., b, true] when strict], "eq": [[a_0,...,a_n, b]]}
Json poly_to_json(const HPolyhedron& p);
HPolyhedron poly_from_json(const Json& j);

// {"ambient": n, "cells": [...], "fan": bool}
Json complex_to_json(const PolyComplex& k);
PolyComplex complex_from_json(const Json& j);

// polynomial {"terms": [{"coeff": "p/q" | "inf", "exp": [ints]}]};
// system {"ambient": n, "orbit": [ints], "polys": [...]}
Json system_to_json(const TropSystem& s);
TropSystem system_from_json(const Json& j);

// {"d": d, "n": n, "entries": {"013": "p/q" | "inf", ...}}; absent keys mean inf
Json plucker_to_json(const TropPluecker& p);
TropPluecker plucker_from_json(const Json& j);

// {"A": [[ints]]}
Json lattice_to_json(const LatticePointSet& a);
LatticePointSet lattice_from_json(const Json& j);

// {"s": s, "labels": [ints]}
Json cayley_to_json(const CayleyStructure& c);
CayleyStructure cayley_from_json(const Json& j);

// {"rows": [["t^2+3t", "-1/2", ...]]}, entries in the rational-function grammar
Json matrix_to_json(const TMatrix& m);
TMatrix matrix_from_json(const Json& j);

}  // namespace tropfano
