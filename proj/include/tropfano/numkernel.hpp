#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "tropfano/matrix.hpp"
#include "tropfano/plucker.hpp"

namespace tropfano {

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valuations of the k x k minors of M in lex column-subset order.
inline TropPluecker kminors_val(const TMatrix& m, int k) {
    if (exact_rank(m) < k) throw DegenerateInput("kminors_val: matrix rank below k");
    int ncols = m.cols();
    TropPluecker p(k - 1, ncols - 1);
    auto subs = k_subsets(ncols, k);
    std::vector<int> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    for (size_t s = 0; s < subs.size(); ++s) {
        TMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, subs[s][j]);
        p.entries[s] = tval(det_bareiss(sub));
    }
    return p;
}

// Basis of the saturated lattice ker(A) cap Z^cols, via column-style Hermite
// reduction with a unimodular transform: columns of U matching zero columns
// of A*U span the kernel.
inline std::vector<std::vector<long>> lattice_kernel(const IntMatrix& a) {
    int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<mpz_class>> w(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w[r][c] = a.at(r, c);
    std::vector<std::vector<mpz_class>> u(cols, std::vector<mpz_class>(cols));
    for (int c = 0; c < cols; ++c) u[c][c] = 1;

    auto col_addmul = [&](int dst, int src, const mpz_class& f) {
        for (int r = 0; r < rows; ++r) w[r][dst] += f * w[r][src];
        for (int r = 0; r < cols; ++r) u[r][dst] += f * u[r][src];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(w[r][i], w[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
    };

    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        // gcd-reduce row r across columns lead..cols-1
        while (true) {
            int piv = -1;
            for (int c = lead; c < cols; ++c)
                if (w[r][c] != 0 && (piv < 0 || abs(w[r][c]) < abs(w[r][piv]))) piv = c;
            if (piv < 0) break;
            col_swap(lead, piv);
            bool clean = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (w[r][c] == 0) continue;
                mpz_class q = w[r][c] / w[r][lead];
                col_addmul(c, lead, -q);
                if (w[r][c] != 0) clean = false;
            }
            if (clean) {
                ++lead;
                break;
            }
        }
    }

    std::vector<std::vector<long>> kernel;
    for (int c = lead; c < cols; ++c) {
        std::vector<long> v(cols);
        for (int r = 0; r < cols; ++r) {
            if (!u[r][c].fits_slong_p()) throw std::overflow_error("lattice_kernel: entry overflow");
            v[r] = u[r][c].get_si();
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace tropfano
