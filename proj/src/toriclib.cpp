#include "tropfano/toriclib.hpp"

#include <algorithm>

#include "tropfano/matroid.hpp"

namespace tropfano {

namespace {

void check_points(const LatticePointSet& a) {
    if (a.a.rows() == 0 || a.a.cols() == 0)
        throw std::invalid_argument("lattice point set is empty");
    for (int c = 0; c < a.a.cols(); ++c)
        if (a.a.at(a.a.rows() - 1, c) != 1)
            throw std::invalid_argument("lattice point set: last row must be all ones");
}

TRatFn tpow(long e) {
    if (e >= 0) return TRatFn::t(int(e));
    return TRatFn(1) / TRatFn::t(int(-e));
}

}  // namespace

PolyComplex trop_toric(const LatticePointSet& a) {
    check_points(a);
    int n1 = a.a.cols();
    HPolyhedron cell(n1);
    for (const auto& l : lattice_kernel(a.a)) {
        std::vector<Rational> normal;
        for (long v : l) normal.push_back(Rational(v));
        cell.add(std::move(normal), Rational(0), Rel::EQ);
    }
    PolyComplex out(n1, true);
    out.cells.push_back(canonical_form(cell));
    return out;
}

std::vector<std::pair<std::vector<long>, std::vector<long>>> toric_binomials(
    const LatticePointSet& a) {
    check_points(a);
    std::vector<std::pair<std::vector<long>, std::vector<long>>> out;
    for (const auto& l : lattice_kernel(a.a)) {
        std::vector<long> pos(l.size(), 0), neg(l.size(), 0);
        for (size_t i = 0; i < l.size(); ++i)
            (l[i] > 0 ? pos[i] : neg[i]) = std::abs(l[i]);
        out.push_back({std::move(pos), std::move(neg)});
    }
    return out;
}

bool verify_cayley(const LatticePointSet& a, const CayleyStructure& pi) {
    check_points(a);
    int n1 = a.a.cols();
    if (int(pi.labels.size()) != n1)
        throw std::invalid_argument("verify_cayley: one label per column required");
    std::vector<bool> hit(pi.s + 1, false);
    for (int l : pi.labels) {
        if (l < 0 || l > pi.s) throw NotSurjective("verify_cayley: label out of range");
        hit[l] = true;
    }
    for (bool h : hit)
        if (!h) throw NotSurjective("verify_cayley: labels miss a class");
    // kernel condition: every affine relation sums to zero per class
    for (const auto& l : lattice_kernel(a.a))
        for (int k = 0; k <= pi.s; ++k) {
            long sum = 0;
            for (int i = 0; i < n1; ++i)
                if (pi.labels[i] == k) sum += l[i];
            if (sum != 0) return false;
        }
    return true;
}

CayleyStructure cayley_from_line(const LatticePointSet& a, const TropPluecker& p) {
    check_points(a);
    int n1 = a.a.cols();
    if (p.d != 1 || p.n != n1 - 1)
        throw std::invalid_argument("cayley_from_line: expected a line on the column set");

    PolyComplex target = trop_toric(a);
    TropLinearSpace g = realize_space(p, Orbit{});
    for (const auto& cell : g.cells.cells) {
        ContainmentResult r = contained_in_complex(cell, target);
        if (!r.contained)
            throw NotContained("cayley_from_line: the line leaves the toric variety");
    }

    Matroid m = matroid_from_plucker(p);
    FlatData fd = flats_minimal_and_chains(m);
    std::vector<Subset> classes = fd.minimal_flats;
    std::sort(classes.begin(), classes.end(),
              [](const Subset& x, const Subset& y) { return x[0] < y[0]; });

    CayleyStructure pi;
    pi.s = int(classes.size()) - 1;
    pi.labels.assign(n1, -1);
    for (int k = 0; k < int(classes.size()); ++k)
        for (int i : classes[k]) pi.labels[i] = k;
    for (int l : pi.labels)
        if (l < 0) throw Internal("cayley_from_line: minimal flats do not cover the ground set");
    if (!verify_cayley(a, pi))
        throw Internal("cayley_from_line: the flat partition violates a lattice relation");
    return pi;
}

ToricLine realize_in_toric(const LatticePointSet& a, const TropPluecker& p,
                           const std::vector<Rational>& translation) {
    int n1 = a.a.cols();
    if (int(translation.size()) != n1)
        throw std::invalid_argument("realize_in_toric: translation length mismatch");
    std::vector<long> trans;
    for (const auto& v : translation) {
        if (v.get_den() != 1)
            throw std::invalid_argument("realize_in_toric: translation must be integral");
        trans.push_back(v.get_num().get_si());
    }

    ToricLine line;
    line.cayley = cayley_from_line(a, p);
    const auto& lab = line.cayley.labels;
    int s = line.cayley.s;

    // basis: within a class all coordinates agree up to the translation;
    // across classes the standard projected line (1,...,1), (1,2,...,s+1)
    line.basis = TMatrix(2, n1);
    for (int i = 0; i < n1; ++i) {
        line.basis.at(0, i) = tpow(trans[i]);
        line.basis.at(1, i) = tpow(trans[i]) * TRatFn(lab[i] + 1);
    }

    // equations: chains t^{c_j} x_i = t^{c_i} x_j inside each class, then the
    // vanishing second differences of the class representatives
    std::vector<std::vector<int>> classes(s + 1);
    for (int i = 0; i < n1; ++i) classes[lab[i]].push_back(i);
    for (const auto& cls : classes)
        for (size_t k = 0; k + 1 < cls.size(); ++k) {
            int i = cls[k], j = cls[k + 1];
            std::vector<TRatFn> eq(n1, TRatFn(0));
            long base = std::min(trans[i], trans[j]);
            eq[i] = tpow(trans[j] - base);
            eq[j] = TRatFn(0) - tpow(trans[i] - base);
            line.equations.push_back(std::move(eq));
        }
    for (int k = 0; k + 2 <= s; ++k) {
        int r0 = classes[k][0], r1 = classes[k + 1][0], r2 = classes[k + 2][0];
        long base = std::min({trans[r0], trans[r1], trans[r2]});
        std::vector<TRatFn> eq(n1, TRatFn(0));
        eq[r0] = tpow(trans[r1] + trans[r2] - 2 * base) * TRatFn(1);
        eq[r1] = tpow(trans[r0] + trans[r2] - 2 * base) * TRatFn(-2);
        eq[r2] = tpow(trans[r0] + trans[r1] - 2 * base) * TRatFn(1);
        // scale so the representative coordinates keep ratio 1 : -2 : 1
        line.equations.push_back(std::move(eq));
    }

    // certificate (a): a binomial x^{l+} - x^{l-} vanishes on the
    // parametrization x_i = t^{c_i} (s0 + (lab_i + 1) s1) iff the linear
    // factors match per class and the t prefactors agree
    line.cert_binomials = true;
    for (const auto& l : lattice_kernel(a.a)) {
        long texp = 0;
        for (int i = 0; i < n1; ++i) texp += l[i] * trans[i];
        if (texp != 0) line.cert_binomials = false;
        for (int k = 0; k <= s; ++k) {
            long sum = 0;
            for (int i = 0; i < n1; ++i)
                if (lab[i] == k) sum += l[i];
            if (sum != 0) line.cert_binomials = false;
        }
    }

    // certificate (b): Pluecker valuations of the basis match p up to a
    // global additive shift
    TropPluecker q = kminors_val(line.basis, 2);
    line.cert_plucker = true;
    std::optional<Rational> shift;
    for (size_t i = 0; i < q.entries.size(); ++i) {
        if (q.entries[i].is_inf() != p.entries[i].is_inf()) {
            line.cert_plucker = false;
            break;
        }
        if (q.entries[i].is_inf()) continue;
        Rational d = p.entries[i].value() - q.entries[i].value();
        if (!shift) shift = d;
        if (d != *shift) {
            line.cert_plucker = false;
            break;
        }
    }

    if (!line.cert_binomials || !line.cert_plucker)
        throw Internal("realize_in_toric: certificate failure");
    return line;
}

}  // namespace tropfano
