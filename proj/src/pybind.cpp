// Python bindings: a thin JSON-string facade over the C++ core, so the
// Python side never handles exact rationals directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropfano/fano.hpp"
#include "tropfano/jsonio.hpp"
#include "tropfano/matroid.hpp"

namespace py = pybind11;

namespace tropfano {
namespace {

Json parse(const std::string& s) { return Json::parse(s); }

std::string dump(const Json& j) { return j.dump(); }

Orbit make_orbit(std::vector<int> inf) {
    std::sort(inf.begin(), inf.end());
    return Orbit{std::move(inf)};
}

std::string fano_report(const FanoResult& f) {
    return dump(Json{{"complex", complex_to_json(f.cells)}, {"provenance", f.provenance}});
}

}  // namespace

PYBIND11_MODULE(_tropfano, m) {
    m.doc() = "exact tropical Fano scheme computations (JSON-string interface)";

    m.def("plucker_minors", [](const std::string& matrix, int k) {
        return dump(plucker_to_json(kminors_val(matrix_from_json(parse(matrix)), k)));
    });

    m.def("trop_linear", [](const std::string& plucker, std::vector<int> orbit) {
        TropLinearSpace g = realize_space(plucker_from_json(parse(plucker)), make_orbit(std::move(orbit)));
        return dump(complex_to_json(g.cells));
    }, py::arg("plucker"), py::arg("orbit") = std::vector<int>());

    m.def("bergman", [](const std::string& matrix) {
        return dump(complex_to_json(bergman_fan(matroid_from_columns(matrix_from_json(parse(matrix))))));
    });

    m.def("prevariety", [](const std::string& system) {
        return dump(complex_to_json(intersect_system(system_from_json(parse(system)))));
    });

    m.def("fano_linear", [](const std::string& plucker, int d, std::vector<int> orbit) {
        return fano_report(fano_linear(plucker_from_json(parse(plucker)), d, make_orbit(std::move(orbit))));
    }, py::arg("plucker"), py::arg("d"), py::arg("orbit") = std::vector<int>());

    m.def("fano_general", [](const std::string& complex_, int d, int n, std::vector<int> orbit) {
        return fano_report(fano_general(complex_from_json(parse(complex_)), d, n, make_orbit(std::move(orbit))));
    }, py::arg("complex"), py::arg("d"), py::arg("n"), py::arg("orbit") = std::vector<int>());

    m.def("contains_line", [](const std::string& plucker, const std::string& complex_, std::vector<int> orbit) {
        LineContainment lc = contains_line(plucker_from_json(parse(plucker)),
                                           complex_from_json(parse(complex_)),
                                           make_orbit(std::move(orbit)));
        Json w;
        if (lc.witness) {
            w = Json::array();
            for (const auto& x : *lc.witness) w.push_back(rat_to_json(x));
        }
        return dump(Json{{"contained", lc.contained}, {"witness", w}});
    }, py::arg("plucker"), py::arg("complex"), py::arg("orbit") = std::vector<int>());

    m.def("plane_fano_trop", [](const std::string& matrix) {
        return dump(complex_to_json(classical_plane_fano_trop(matrix_from_json(parse(matrix)))));
    });

    m.def("genericity", [](const std::string& matrix) {
        GenericityReport g = genericity_check(matrix_from_json(parse(matrix)));
        Json bt = Json::array(), bp = Json::array();
        for (const auto& s : g.bad_triples) bt.push_back(subset_key(s));
        for (const auto& pairing : g.bad_pairings) {
            Json row = Json::array();
            for (const auto& s : pairing) row.push_back(subset_key(s));
            bp.push_back(std::move(row));
        }
        return dump(Json{{"cond_I", g.cond_I}, {"cond_II", g.cond_II},
                         {"bad_triples", std::move(bt)}, {"bad_pairings", std::move(bp)}});
    });

    m.def("pairing_line", [](const std::string& matrix, std::vector<std::vector<int>> pairs) {
        std::vector<Subset> pairing;
        for (auto& p : pairs) {
            std::sort(p.begin(), p.end());
            pairing.push_back(std::move(p));
        }
        auto res = pairing_line(matrix_from_json(parse(matrix)), pairing);
        if (!res) return dump(Json{{"found", false}});
        return dump(Json{{"found", true}, {"basis", matrix_to_json(res->basis)},
                         {"certified", res->certified}});
    });

    m.def("compare", [](const std::string& first, const std::string& second) {
        PolyComplex a = complex_from_json(parse(first)), b = complex_from_json(parse(second));
        bool ab = complex_subset(a, b), ba = complex_subset(b, a);
        return dump(Json{{"first_in_second", ab}, {"second_in_first", ba},
                         {"equal_supports", ab && ba}});
    });

    m.def("toric_trop", [](const std::string& lattice) {
        return dump(complex_to_json(trop_toric(lattice_from_json(parse(lattice)))));
    });

    m.def("toric_binomials", [](const std::string& lattice) {
        Json out = Json::array();
        for (const auto& [plus, minus] : toric_binomials(lattice_from_json(parse(lattice))))
            out.push_back(Json{{"plus", plus}, {"minus", minus}});
        return dump(out);
    });

    m.def("cayley_verify", [](const std::string& lattice, const std::string& cayley) {
        return verify_cayley(lattice_from_json(parse(lattice)), cayley_from_json(parse(cayley)));
    });

    m.def("cayley_extract", [](const std::string& lattice, const std::string& plucker) {
        return dump(cayley_to_json(
            cayley_from_line(lattice_from_json(parse(lattice)), plucker_from_json(parse(plucker)))));
    });

    m.def("toric_realize", [](const std::string& lattice, const std::string& plucker,
                              std::vector<std::string> translation) {
        LatticePointSet a = lattice_from_json(parse(lattice));
        std::vector<Rational> trans;
        for (const auto& s : translation) trans.push_back(rat_parse(s));
        if (trans.empty()) trans.assign(a.a.cols(), Rational(0));
        ToricLine line = realize_in_toric(a, plucker_from_json(parse(plucker)), trans);
        Json eqs = Json::array();
        for (const auto& eq : line.equations) {
            Json row = Json::array();
            for (const auto& f : eq) row.push_back(f.str());
            eqs.push_back(std::move(row));
        }
        return dump(Json{{"equations", std::move(eqs)}, {"basis", matrix_to_json(line.basis)},
                         {"cayley", cayley_to_json(line.cayley)},
                         {"cert_binomials", line.cert_binomials},
                         {"cert_plucker", line.cert_plucker}});
    }, py::arg("lattice"), py::arg("plucker"), py::arg("translation") = std::vector<std::string>());
}

}  // namespace tropfano
