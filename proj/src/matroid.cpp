#include "tropfano/matroid.hpp"

#include <algorithm>
#include <set>

#include "tropfano/dd.hpp"

namespace tropfano {

int Matroid::rank_of(const Subset& s) const {
    int best = 0;
    for (const auto& b : bases) {
        int c = 0;
        size_t i = 0, j = 0;
        while (i < s.size() && j < b.size()) {
            if (s[i] == b[j]) {
                ++c;
                ++i;
                ++j;
            } else if (s[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        best = std::max(best, c);
    }
    return best;
}

Subset Matroid::closure(const Subset& s) const {
    int r = rank_of(s);
    Subset out;
    for (int e = 0; e < size; ++e) {
        if (subset_contains(s, e)) {
            out.push_back(e);
            continue;
        }
        if (rank_of(subset_insert(s, e)) == r) out.push_back(e);
    }
    return out;
}

bool Matroid::is_loop(int e) const { return rank_of({e}) == 0; }

bool Matroid::has_loops() const {
    for (int e = 0; e < size; ++e)
        if (is_loop(e)) return true;
    return false;
}

Matroid uniform_matroid(int rank, int size) {
    Matroid m;
    m.size = size;
    m.rank = rank;
    m.bases = k_subsets(size, rank);
    return m;
}

namespace {

template <typename T>
Matroid from_columns_impl(const Matrix<T>& m) {
    Matroid out;
    out.size = m.cols();
    out.rank = exact_rank(m);
    for (const auto& s : k_subsets(m.cols(), out.rank))
        if (exact_rank(m.select_columns(s)) == out.rank) out.bases.push_back(s);
    return out;
}

}  // namespace

Matroid matroid_from_columns(const QMatrix& m) { return from_columns_impl(m); }
Matroid matroid_from_columns(const TMatrix& m) { return from_columns_impl(m); }

Matroid matroid_from_plucker(const TropPluecker& p) {
    if (p.all_infinite()) throw DegenerateInput("matroid_from_plucker: all entries infinite");
    Matroid out;
    out.size = p.n + 1;
    out.rank = p.d + 1;
    auto subs = k_subsets(p.n + 1, p.d + 1);
    for (size_t i = 0; i < subs.size(); ++i)
        if (!p.entries[i].is_inf()) out.bases.push_back(subs[i]);
    return out;
}

FlatData flats_minimal_and_chains(const Matroid& m) {
    if (m.has_loops()) throw LoopsPresent("flats_minimal_and_chains: matroid has loops");
    FlatData out;

    // flats as closures of independent sets, grouped by rank
    std::vector<std::set<Subset>> by_rank(m.rank + 1);
    std::vector<Subset> indep{{}};
    for (int r = 1; r <= m.rank; ++r) {
        std::vector<Subset> next;
        std::set<Subset> seen;
        for (const auto& s : indep)
            for (int e = s.empty() ? 0 : s.back() + 1; e < m.size; ++e) {
                Subset t = subset_insert(s, e);
                if (m.rank_of(t) != r) continue;
                next.push_back(t);
                by_rank[r].insert(m.closure(t));
            }
        indep = std::move(next);
    }
    for (int r = 1; r <= m.rank; ++r)
        for (const auto& f : by_rank[r]) out.flats.push_back(f);
    for (const auto& f : by_rank[1]) out.minimal_flats.push_back(f);

    // maximal chains: one flat per rank, each containing the previous
    auto contains_all = [](const Subset& big, const Subset& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<std::vector<Subset>> chains;
    for (const auto& f : by_rank[1]) chains.push_back({f});
    for (int r = 2; r <= m.rank; ++r) {
        std::vector<std::vector<Subset>> next;
        for (const auto& ch : chains)
            for (const auto& f : by_rank[r])
                if (contains_all(f, ch.back())) {
                    auto ext = ch;
                    ext.push_back(f);
                    next.push_back(std::move(ext));
                }
        chains = std::move(next);
    }
    out.maximal_chains = std::move(chains);
    return out;
}

namespace {

std::vector<Rational> indicator(const Subset& f, int n) {
    std::vector<Rational> v(n, Rational(0));
    for (int e : f) v[e] = 1;
    return v;
}

HPolyhedron cone_from_rays(int n, const std::vector<std::vector<Rational>>& rays) {
    VPolyhedron v;
    v.ambient = n;
    v.vertices.push_back(std::vector<Rational>(n, Rational(0)));
    v.rays = rays;
    v.lineality.push_back(std::vector<Rational>(n, Rational(1)));
    return canonical_form(vh_convert(v));
}

}  // namespace

PolyComplex bergman_fan(const Matroid& m) {
    if (m.has_loops()) throw LoopsPresent("bergman_fan: matroid has loops");
    FlatData fd = flats_minimal_and_chains(m);

    struct Cone {
        HPolyhedron h;
        std::vector<std::vector<Rational>> rays;
    };
    std::vector<Cone> cones;
    std::set<std::string> seen;
    for (const auto& ch : fd.maximal_chains) {
        std::vector<std::vector<Rational>> rays;
        for (const auto& f : ch)
            if (int(f.size()) < m.size) rays.push_back(indicator(f, m.size));
        HPolyhedron h = cone_from_rays(m.size, rays);
        if (seen.insert(poly_key(h)).second) cones.push_back({std::move(h), std::move(rays)});
    }

    // merge adjacent cones whose union is convex so uniform matroids report
    // the coarse pos(e_S) structure
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < cones.size() && !merged; ++i)
            for (size_t j = i + 1; j < cones.size() && !merged; ++j) {
                auto rays = cones[i].rays;
                rays.insert(rays.end(), cones[j].rays.begin(), cones[j].rays.end());
                HPolyhedron hull = cone_from_rays(m.size, rays);
                if (poly_equal(hull, cones[i].h) || poly_equal(hull, cones[j].h)) continue;
                PolyComplex pair(m.size, true);
                pair.cells = {cones[i].h, cones[j].h};
                if (!contained_in_complex(hull, pair).contained) continue;
                cones.erase(cones.begin() + j);
                cones[i] = {hull, std::move(rays)};
                merged = true;
            }
    }

    PolyComplex out(m.size, true);
    for (const auto& c : cones)
        for (const auto& f : faces_of(c.h)) out.cells.push_back(f);
    dedupe_cells(out);
    return out;
}

}  // namespace tropfano
