#include "tropfano/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tropfano {

namespace {

// Dense two-phase simplex maximizing c.z over {A z = b, z >= 0}, Bland's rule.
// Tableau rows: m constraint rows, then the objective row; column layout:
// structural variables 0..ncols-1, RHS last.
class Simplex {
  public:
    Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
        : m_(int(a.size())), n_(int(c.size())), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    // returns false on infeasibility; on success sol holds the optimum
    bool solve(std::vector<Rational>& sol, bool& unbounded) {
        unbounded = false;
        for (int i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
        // structural unit columns (slacks) serve as the starting basis where
        // available; only the remaining rows get artificial variables
        std::vector<int> unit_col(m_, -1);
        for (int j = 0; j < n_; ++j) {
            int row = -1;
            bool ok = true;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][j] == 0) continue;
                if (row >= 0 || a_[i][j] < 0) {
                    ok = false;
                    break;
                }
                row = i;
            }
            if (ok && row >= 0 && unit_col[row] < 0) unit_col[row] = j;
        }

        int total = n_ + m_;
        tab_.assign(m_ + 1, std::vector<Rational>(total + 1, Rational(0)));
        basis_.resize(m_);
        bool any_artificial = false;
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) tab_[i][j] = a_[i][j];
            tab_[i][total] = b_[i];
            if (unit_col[i] >= 0) {
                int j = unit_col[i];
                basis_[i] = j;
                if (tab_[i][j] != 1) {
                    Rational f = tab_[i][j];
                    for (int jj = 0; jj <= total; ++jj)
                        if (tab_[i][jj] != 0) tab_[i][jj] /= f;
                }
            } else {
                tab_[i][n_ + i] = 1;
                basis_[i] = n_ + i;
                any_artificial = true;
            }
        }
        // phase-1 objective: maximize -sum(artificials) expressed in nonbasics
        auto& obj = tab_[m_];
        if (any_artificial) {
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] < n_) continue;
                for (int j = 0; j < n_; ++j) obj[j] += tab_[i][j];
                obj[total] += tab_[i][total];
            }
            run(total, n_ + m_);  // artificial columns allowed in phase 1
        }
        if (tab_[m_][total] != 0) return false;
        // drive artificials out of the basis
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int piv = -1;
            for (int j = 0; j < n_; ++j)
                if (tab_[i][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv >= 0) pivot(i, piv, total);
            // a redundant row (all structural coefficients zero) stays with its
            // artificial basic variable at value zero; it never re-enters play
        }
        // phase 2 objective
        for (int j = 0; j <= total; ++j) obj[j] = 0;
        for (int j = 0; j < n_; ++j) obj[j] = c_[j];
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_ || c_[basis_[i]] == 0) continue;
            Rational f = c_[basis_[i]];
            for (int j = 0; j <= total; ++j) obj[j] -= f * tab_[i][j];
        }
        // objective row convention: obj[j] = reduced cost, obj[total] = -value
        unbounded = !run(total, n_);
        sol.assign(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) sol[basis_[i]] = tab_[i][total];
        return true;
    }

  private:
    // Dantzig's rule, falling back to Bland's rule after an iteration budget
    // so degenerate cycling cannot occur; limit entering columns to indices
    // < ncols_allowed. Returns false if unbounded.
    bool run(int total, int ncols_allowed) {
        auto& obj = tab_[m_];
        long iters = 0;
        const long bland_after = 4L * (m_ + ncols_allowed);
        while (true) {
            int enter = -1;
            if (iters++ < bland_after) {
                for (int j = 0; j < ncols_allowed; ++j)
                    if (obj[j] > 0 && (enter < 0 || obj[enter] < obj[j])) enter = j;
            } else {
                for (int j = 0; j < ncols_allowed; ++j)
                    if (obj[j] > 0) {
                        enter = j;
                        break;
                    }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][total] / tab_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter, total);
        }
    }

    void pivot(int row, int col, int total) {
        Rational p = tab_[row][col];
        for (int j = 0; j <= total; ++j)
            if (tab_[row][j] != 0) tab_[row][j] /= p;
        for (int i = 0; i <= m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rational f = tab_[i][col];
            for (int j = 0; j <= total; ++j)
                if (tab_[row][j] != 0) tab_[i][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    int m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<Rational> c_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> feasible_point(int dim, const std::vector<Constraint>& cons) {
    // substitute equalities away first
    // eqs kept as (a, b, pivot var) in elimination order
    std::vector<Constraint> ineqs;
    struct Elim {
        std::vector<Rational> a;
        Rational b;
        int piv;
    };
    std::vector<Elim> elims;
    std::vector<Constraint> pending_eqs;
    for (const auto& c : cons) {
        if (int(c.a.size()) != dim) throw std::invalid_argument("constraint dimension mismatch");
        (c.rel == Rel::EQ ? pending_eqs : ineqs).push_back(c);
    }
    std::vector<bool> eliminated(dim, false);
    auto reduce = [&](std::vector<Rational>& a, Rational& b) {
        for (const auto& e : elims) {
            if (a[e.piv] == 0) continue;
            Rational f = a[e.piv] / e.a[e.piv];
            for (int j = 0; j < dim; ++j) a[j] -= f * e.a[j];
            b -= f * e.b;
            a[e.piv] = 0;
        }
    };
    for (auto& eq : pending_eqs) {
        std::vector<Rational> a = eq.a;
        Rational b = eq.b;
        reduce(a, b);
        int piv = -1;
        for (int j = 0; j < dim; ++j)
            if (a[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) {
            if (b != 0) return std::nullopt;
            continue;
        }
        eliminated[piv] = true;
        elims.push_back({std::move(a), std::move(b), piv});
    }
    // back-substitute earlier eliminations so each pivot appears in one row only
    for (size_t i = 0; i < elims.size(); ++i)
        for (size_t k = 0; k < i; ++k) {
            auto& e = elims[k];
            if (e.a[elims[i].piv] == 0) continue;
            Rational f = e.a[elims[i].piv] / elims[i].a[elims[i].piv];
            for (int j = 0; j < dim; ++j) e.a[j] -= f * elims[i].a[j];
            e.b -= f * elims[i].b;
        }

    // remaining free variables
    std::vector<int> freev;
    for (int j = 0; j < dim; ++j)
        if (!eliminated[j]) freev.push_back(j);
    int k = int(freev.size());

    bool any_strict = false;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<bool> strict_row;
    for (auto& c : ineqs) {
        std::vector<Rational> a = c.a;
        Rational b = c.b;
        reduce(a, b);
        std::vector<Rational> r(k, Rational(0));
        bool nonzero = false;
        for (int j = 0; j < k; ++j) {
            r[j] = a[freev[j]];
            if (r[j] != 0) nonzero = true;
        }
        if (!nonzero) {
            if (c.rel == Rel::LT ? !(Rational(0) < b) : !(Rational(0) <= b)) return std::nullopt;
            continue;
        }
        if (c.rel == Rel::LT) any_strict = true;
        rows.push_back(std::move(r));
        rhs.push_back(std::move(b));
        strict_row.push_back(c.rel == Rel::LT);
    }

    // variables: y+ (k), y- (k), delta, slack per row, plus delta <= 1 row
    int m = int(rows.size()) + 1;
    int nvars = 2 * k + 1 + m;
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(nvars, Rational(0)));
    std::vector<Rational> B(m);
    std::vector<Rational> C(nvars, Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < k; ++j) {
            A[i][j] = rows[i][j];
            A[i][k + j] = -rows[i][j];
        }
        if (strict_row[i]) A[i][2 * k] = 1;
        A[i][2 * k + 1 + int(i)] = 1;  // slack
        B[i] = rhs[i];
    }
    A[m - 1][2 * k] = 1;
    A[m - 1][2 * k + 1 + (m - 1)] = 1;
    B[m - 1] = 1;
    C[2 * k] = 1;  // maximize margin

    Simplex sx(std::move(A), std::move(B), std::move(C));
    std::vector<Rational> sol;
    bool unbounded = false;
    if (!sx.solve(sol, unbounded)) return std::nullopt;
    Rational delta = sol[2 * k];
    if (any_strict && delta <= 0) return std::nullopt;

    std::vector<Rational> x(dim, Rational(0));
    for (int j = 0; j < k; ++j) x[freev[j]] = sol[j] - sol[k + j];
    // recover eliminated variables
    for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
        Rational s = it->b;
        for (int j = 0; j < dim; ++j)
            if (j != it->piv && it->a[j] != 0) s -= it->a[j] * x[j];
        x[it->piv] = s / it->a[it->piv];
    }
    return x;
}

}  // namespace tropfano
