#pragma once

#include <vector>

#include "tropfano/hpoly.hpp"

namespace tropfano {

// Dual description: P = conv(vertices) + cone(rays) + span(lineality).
struct VPolyhedron {
    int ambient = 0;
    std::vector<std::vector<Rational>> vertices;
    std::vector<std::vector<Rational>> rays;
    std::vector<std::vector<Rational>> lineality;

    bool empty() const { return vertices.empty(); }
};

// generators of the cone {x : Ax <= 0, Cx = 0} (double description method)
struct ConeGenerators {
    std::vector<std::vector<Rational>> rays;
    std::vector<std::vector<Rational>> lineality;
};
ConeGenerators cone_generators(int dim, const std::vector<Constraint>& cons);

// exact conversions; hv_convert requires a closed polyhedron
VPolyhedron hv_convert(const HPolyhedron& p);
HPolyhedron vh_convert(const VPolyhedron& v);

}  // namespace tropfano
