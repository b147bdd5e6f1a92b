#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfano/rational.hpp"

namespace tropfano {

// Univariate polynomial in t with rational coefficients, coeffs[i] = coeff of t^i.
// Trailing zero coefficients are always trimmed; the zero polynomial has empty coeffs.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Rational c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly t(int power = 1) {
        std::vector<Rational> c(power + 1, Rational(0));
        c[power] = 1;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? -1 : int(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    // index of lowest nonzero coefficient; -1 for the zero polynomial
    int ord() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return int(i);
        return -1;
    }

    Rational coeff(int i) const {
        if (i < 0 || i >= int(coeffs_.size())) return Rational(0);
        return coeffs_[i];
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPoly(std::move(c));
    }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    // quotient and remainder; divisor must be nonzero
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
        if (b.is_zero()) throw std::domain_error("QPoly division by zero");
        std::vector<Rational> rem = a.coeffs_;
        int db = b.degree();
        std::vector<Rational> quot;
        int dr = int(rem.size()) - 1;
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr >= db) quot.assign(dr - db + 1, Rational(0));
        while (dr >= db) {
            Rational f = rem[dr] / b.coeffs_[db];
            quot[dr - db] = f;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.coeffs_[i];
            while (dr >= 0 && rem[dr] == 0) --dr;
        }
        q = QPoly(std::move(quot));
        rem.resize(dr + 1);
        r = QPoly(std::move(rem));
    }

    friend QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            Rational lead = a.leading();
            for (auto& c : a.coeffs_) c /= lead;  // monic gcd
        }
        return a;
    }

    QPoly divided_by(const QPoly& b) const {  // exact division expected
        QPoly q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw std::domain_error("QPoly inexact division");
        return q;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (!out.empty()) out += (c > 0 ? "+" : "-");
            else if (c < 0) out += "-";
            Rational a = abs(c);
            if (i == 0 || a != 1) out += a.get_str();
            if (i >= 1) {
                if (a != 1) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

}  // namespace tropfano
