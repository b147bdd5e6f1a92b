#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "tropfano/fano.hpp"
#include "tropfano/jsonio.hpp"
#include "tropfano/matroid.hpp"

namespace tropfano {
namespace {

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 64-bit FNV-1a of the raw input bytes; ties the report to its exact inputs
std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Report {
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> provenance;

    Json load(const std::string& name, const std::string& path) {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        inputs[name] = digest(buf.str());
        try {
            return Json::parse(buf.str());
        } catch (const Json::parse_error& e) {
            throw PreconditionError(path + ": " + e.what());
        }
    }
};

Orbit parse_orbit(const std::string& s) {
    Orbit o;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) o.inf.push_back(std::stoi(tok));
    std::sort(o.inf.begin(), o.inf.end());
    return o;
}

// pairing tokens: "01" for single-digit indices, "a-b" in general
std::vector<Subset> parse_pairs(const std::string& s) {
    std::vector<Subset> pairs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        Subset pair;
        auto dash = tok.find('-');
        if (dash != std::string::npos) {
            pair = {std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))};
        } else if (tok.size() == 2) {
            pair = {tok[0] - '0', tok[1] - '0'};
        } else {
            throw PreconditionError("bad pair token: " + tok);
        }
        std::sort(pair.begin(), pair.end());
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

Json complex_report(const PolyComplex& k) {
    FanStats st = fan_stats(k);
    Json by_dim = Json::object();
    for (const auto& [dim, count] : st.max_cells_by_dim) by_dim[std::to_string(dim)] = count;
    return Json{{"complex", complex_to_json(k)},
                {"dim", st.dim},
                {"lineality_dim", st.lineality_dim},
                {"max_cells_by_dim", std::move(by_dim)}};
}

Json rats_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

Json subsets_to_json(const std::vector<Subset>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(subset_key(s));
    return out;
}

// timing goes to stderr so that the report on stdout is byte-identical
// across repeated runs with the same inputs
void emit(const std::string& command, Report& r,
          std::chrono::steady_clock::time_point start) {
    Json report{{"command", command},
                {"inputs", std::move(r.inputs)},
                {"outputs", std::move(r.outputs)},
                {"provenance", r.provenance}};
    std::cout << report.dump(2) << "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << command << ": " << int(secs * 1000) / 1000.0 << "s\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact tropical Fano scheme computations"};
    app.require_subcommand(1);

    // engines are single-process; the cap is validated here and honored by
    // keeping every computation on at most that many threads (currently one)
    if (const char* tn = std::getenv("TROPFANO_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(tn, &end, 10);
        if (!end || *end != '\0' || v <= 0)
            throw PreconditionError("TROPFANO_THREADS must be a positive integer");
    }

    std::string matrix_path, plucker_path, complex_path, system_path, lattice_path;
    std::string cayley_path, second_path, orbit_arg, pairs_arg, translation_arg;
    int d_arg = 1, n_arg = -1, k_arg = 0;

    auto* c_plucker = app.add_subcommand("plucker", "valuations of the k-minors of a matrix");
    c_plucker->add_option("--matrix", matrix_path)->required();
    c_plucker->add_option("--k", k_arg)->required();

    auto* c_troplin = app.add_subcommand("trop-linear", "tropicalized linear space of a Pluecker vector");
    c_troplin->add_option("--plucker", plucker_path)->required();
    c_troplin->add_option("--orbit", orbit_arg);

    auto* c_bergman = app.add_subcommand("bergman", "Bergman fan of the column matroid");
    c_bergman->add_option("--matrix", matrix_path)->required();

    auto* c_prevar = app.add_subcommand("prevariety", "tropical prevariety of a min-plus system");
    c_prevar->add_option("--system", system_path)->required();

    auto* c_fanolin = app.add_subcommand("fano-linear", "tropical Fano scheme, incidence route");
    c_fanolin->add_option("--plucker", plucker_path)->required();
    c_fanolin->add_option("--d", d_arg)->required();
    c_fanolin->add_option("--orbit", orbit_arg);

    auto* c_fanogen = app.add_subcommand("fano-general", "tropical Fano scheme, projection route");
    c_fanogen->add_option("--complex", complex_path)->required();
    c_fanogen->add_option("--d", d_arg)->required();
    c_fanogen->add_option("--n", n_arg)->required();
    c_fanogen->add_option("--orbit", orbit_arg);

    auto* c_contains = app.add_subcommand("contains", "is the line's tropical span inside the complex");
    c_contains->add_option("--plucker", plucker_path)->required();
    c_contains->add_option("--complex", complex_path)->required();
    c_contains->add_option("--orbit", orbit_arg);

    auto* c_pft = app.add_subcommand("plane-fano-trop", "tropicalized Fano scheme of a classical plane");
    c_pft->add_option("--matrix", matrix_path)->required();

    auto* c_compare = app.add_subcommand("compare", "mutual support containment of two complexes");
    c_compare->add_option("--first", complex_path)->required();
    c_compare->add_option("--second", second_path)->required();

    auto* c_generic = app.add_subcommand("generic", "genericity conditions for a plane matrix");
    c_generic->add_option("--matrix", matrix_path)->required();

    auto* c_pline = app.add_subcommand("pairing-line", "line through coordinate-pair points");
    c_pline->add_option("--matrix", matrix_path)->required();
    c_pline->add_option("--pairs", pairs_arg)->required();

    auto* c_ttrop = app.add_subcommand("toric-trop", "tropicalized toric variety on the torus");
    c_ttrop->add_option("--lattice", lattice_path)->required();

    auto* c_tbin = app.add_subcommand("toric-binomials", "binomial generators of the toric ideal");
    c_tbin->add_option("--lattice", lattice_path)->required();

    auto* c_cver = app.add_subcommand("cayley-verify", "check a Cayley structure");
    c_cver->add_option("--lattice", lattice_path)->required();
    c_cver->add_option("--cayley", cayley_path)->required();

    auto* c_cext = app.add_subcommand("cayley-extract", "Cayley structure of a contained line");
    c_cext->add_option("--lattice", lattice_path)->required();
    c_cext->add_option("--plucker", plucker_path)->required();

    auto* c_treal = app.add_subcommand("toric-realize", "classical line in the toric variety");
    c_treal->add_option("--lattice", lattice_path)->required();
    c_treal->add_option("--plucker", plucker_path)->required();
    c_treal->add_option("--translation", translation_arg);

    auto* c_verify = app.add_subcommand("verify-paper", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report r;
    auto start = std::chrono::steady_clock::now();
    Orbit orbit = parse_orbit(orbit_arg);

    if (app.got_subcommand(c_plucker)) {
        TMatrix m = matrix_from_json(r.load("matrix", matrix_path));
        r.outputs["plucker"] = plucker_to_json(kminors_val(m, k_arg));
        r.provenance.push_back("minor valuations");
        emit("plucker", r, start);
    } else if (app.got_subcommand(c_troplin)) {
        TropPluecker p = plucker_from_json(r.load("plucker", plucker_path));
        TropLinearSpace g = realize_space(p, orbit);
        r.outputs = complex_report(g.cells);
        r.provenance.push_back("circuit prevariety");
        emit("trop-linear", r, start);
    } else if (app.got_subcommand(c_bergman)) {
        TMatrix m = matrix_from_json(r.load("matrix", matrix_path));
        r.outputs = complex_report(bergman_fan(matroid_from_columns(m)));
        r.provenance.push_back("flag-of-flats fan");
        emit("bergman", r, start);
    } else if (app.got_subcommand(c_prevar)) {
        TropSystem s = system_from_json(r.load("system", system_path));
        r.outputs = complex_report(intersect_system(s));
        r.provenance.push_back("pairwise refinement");
        emit("prevariety", r, start);
    } else if (app.got_subcommand(c_fanolin)) {
        TropPluecker w = plucker_from_json(r.load("plucker", plucker_path));
        FanoResult f = fano_linear(w, d_arg, orbit);
        r.outputs = complex_report(f.cells);
        r.provenance.push_back(f.provenance);
        emit("fano-linear", r, start);
    } else if (app.got_subcommand(c_fanogen)) {
        PolyComplex k = complex_from_json(r.load("complex", complex_path));
        FanoResult f = fano_general(k, d_arg, n_arg, orbit);
        r.outputs = complex_report(f.cells);
        r.provenance.push_back(f.provenance);
        emit("fano-general", r, start);
    } else if (app.got_subcommand(c_contains)) {
        TropPluecker p = plucker_from_json(r.load("plucker", plucker_path));
        PolyComplex k = complex_from_json(r.load("complex", complex_path));
        LineContainment lc = contains_line(p, k, orbit);
        r.outputs["contained"] = lc.contained;
        r.outputs["witness"] = lc.witness ? rats_to_json(*lc.witness) : Json();
        r.provenance.push_back("cell-wise containment");
        emit("contains", r, start);
    } else if (app.got_subcommand(c_pft)) {
        TMatrix m = matrix_from_json(r.load("matrix", matrix_path));
        r.outputs = complex_report(classical_plane_fano_trop(m));
        r.provenance.push_back("wedge minors");
        emit("plane-fano-trop", r, start);
    } else if (app.got_subcommand(c_compare)) {
        PolyComplex a = complex_from_json(r.load("first", complex_path));
        PolyComplex b = complex_from_json(r.load("second", second_path));
        bool ab = complex_subset(a, b), ba = complex_subset(b, a);
        r.outputs["first_in_second"] = ab;
        r.outputs["second_in_first"] = ba;
        r.outputs["equal_supports"] = ab && ba;
        r.provenance.push_back("support comparison");
        emit("compare", r, start);
    } else if (app.got_subcommand(c_generic)) {
        TMatrix m = matrix_from_json(r.load("matrix", matrix_path));
        GenericityReport g = genericity_check(m);
        r.outputs["cond_I"] = g.cond_I;
        r.outputs["cond_II"] = g.cond_II;
        r.outputs["bad_triples"] = subsets_to_json(g.bad_triples);
        Json bp = Json::array();
        for (const auto& pairing : g.bad_pairings) bp.push_back(subsets_to_json(pairing));
        r.outputs["bad_pairings"] = std::move(bp);
        r.provenance.push_back("minor conditions");
        emit("generic", r, start);
    } else if (app.got_subcommand(c_pline)) {
        TMatrix m = matrix_from_json(r.load("matrix", matrix_path));
        auto res = pairing_line(m, parse_pairs(pairs_arg));
        r.outputs["found"] = bool(res);
        if (res) {
            r.outputs["basis"] = matrix_to_json(res->basis);
            r.outputs["certified"] = res->certified;
        }
        r.provenance.push_back("pair-point collinearity");
        emit("pairing-line", r, start);
    } else if (app.got_subcommand(c_ttrop)) {
        LatticePointSet a = lattice_from_json(r.load("lattice", lattice_path));
        r.outputs = complex_report(trop_toric(a));
        r.provenance.push_back("row space");
        emit("toric-trop", r, start);
    } else if (app.got_subcommand(c_tbin)) {
        LatticePointSet a = lattice_from_json(r.load("lattice", lattice_path));
        Json bins = Json::array();
        for (const auto& [plus, minus] : toric_binomials(a))
            bins.push_back(Json{{"plus", plus}, {"minus", minus}});
        r.outputs["binomials"] = std::move(bins);
        r.provenance.push_back("lattice kernel");
        emit("toric-binomials", r, start);
    } else if (app.got_subcommand(c_cver)) {
        LatticePointSet a = lattice_from_json(r.load("lattice", lattice_path));
        CayleyStructure c = cayley_from_json(r.load("cayley", cayley_path));
        r.outputs["valid"] = verify_cayley(a, c);
        r.provenance.push_back("relation sums");
        emit("cayley-verify", r, start);
    } else if (app.got_subcommand(c_cext)) {
        LatticePointSet a = lattice_from_json(r.load("lattice", lattice_path));
        TropPluecker p = plucker_from_json(r.load("plucker", plucker_path));
        r.outputs["cayley"] = cayley_to_json(cayley_from_line(a, p));
        r.provenance.push_back("minimal flats");
        emit("cayley-extract", r, start);
    } else if (app.got_subcommand(c_treal)) {
        LatticePointSet a = lattice_from_json(r.load("lattice", lattice_path));
        TropPluecker p = plucker_from_json(r.load("plucker", plucker_path));
        std::vector<Rational> trans(a.a.cols(), Rational(0));
        if (!translation_arg.empty()) {
            trans.clear();
            std::stringstream ss(translation_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) trans.push_back(rat_parse(tok));
        }
        ToricLine line = realize_in_toric(a, p, trans);
        Json eqs = Json::array();
        for (const auto& eq : line.equations) {
            Json row = Json::array();
            for (const auto& f : eq) row.push_back(f.str());
            eqs.push_back(std::move(row));
        }
        r.outputs["equations"] = std::move(eqs);
        r.outputs["basis"] = matrix_to_json(line.basis);
        r.outputs["cayley"] = cayley_to_json(line.cayley);
        r.outputs["cert_binomials"] = line.cert_binomials;
        r.outputs["cert_plucker"] = line.cert_plucker;
        r.provenance.push_back("Cayley realization");
        emit("toric-realize", r, start);
    } else if (app.got_subcommand(c_verify)) {
        return run_acceptance(std::cout) == 0 ? 0 : 1;
    }
    return 0;
}

}  // namespace
}  // namespace tropfano

int main(int argc, char** argv) {
    using namespace tropfano;
    try {
        return run(argc, argv);
    } catch (const Internal& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
