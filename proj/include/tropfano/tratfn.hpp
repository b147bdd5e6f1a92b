#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "tropfano/poly.hpp"
#include "tropfano/tropvalue.hpp"

namespace tropfano {

// Rational function in t over Q, num/den with gcd(num, den) = 1 and monic den.
// The t-adic valuation of these functions plays the role of the valuation on
// the coefficient field: val(f) = ord_t(num) - ord_t(den), val(0) = infinity.
class TRatFn {
  public:
    TRatFn() : num_(), den_(QPoly(Rational(1))) {}
    TRatFn(Rational c) : num_(QPoly(std::move(c))), den_(QPoly(Rational(1))) {}  // NOLINT
    TRatFn(long c) : TRatFn(Rational(c)) {}                                      // NOLINT
    TRatFn(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit TRatFn(QPoly num) : num_(std::move(num)), den_(QPoly(Rational(1))) {}

    static TRatFn t(int power = 1) { return TRatFn(QPoly::t(power)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend TRatFn operator+(const TRatFn& a, const TRatFn& b) {
        return TRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend TRatFn operator-(const TRatFn& a, const TRatFn& b) {
        return TRatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend TRatFn operator-(const TRatFn& a) { return TRatFn(-a.num_, a.den_); }
    friend TRatFn operator*(const TRatFn& a, const TRatFn& b) {
        return TRatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend TRatFn operator/(const TRatFn& a, const TRatFn& b) {
        if (b.is_zero()) throw std::domain_error("TRatFn division by zero");
        return TRatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    TRatFn& operator+=(const TRatFn& o) { return *this = *this + o; }
    TRatFn& operator-=(const TRatFn& o) { return *this = *this - o; }
    TRatFn& operator*=(const TRatFn& o) { return *this = *this * o; }
    friend bool operator==(const TRatFn& a, const TRatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const TRatFn& a, const TRatFn& b) { return !(a == b); }

    std::string str() const {
        if (den_ == QPoly(Rational(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("TRatFn: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Rational(1));
            return;
        }
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divided_by(g);
            den_ = den_.divided_by(g);
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            std::vector<Rational> nc = num_.coeffs(), dc = den_.coeffs();
            for (auto& c : nc) c /= lead;
            for (auto& c : dc) c /= lead;
            num_ = QPoly(std::move(nc));
            den_ = QPoly(std::move(dc));
        }
    }
    QPoly num_, den_;
};

// t-adic valuation: ord_t(num) - ord_t(den), infinity for 0.
inline TropValue tval(const TRatFn& f) {
    if (f.is_zero()) return TropValue::infinity();
    return TropValue(Rational(f.num().ord() - f.den().ord()));
}

// Parses expressions like "5", "-1/2", "t^2+3t", "(t+1)/t", "2t-1/2".
// Grammar: ratfn := factor ('/' factor)? ; factor := '(' poly ')' | poly ;
// poly := term (('+'|'-') term)* ; term := coeff? ('t' ('^' int)?)?
class TRatFnParser {
  public:
    explicit TRatFnParser(std::string s) : s_(std::move(s)) {}

    TRatFn parse() {
        QPoly num = parse_factor();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            QPoly den = parse_factor();
            expect_eof();
            return TRatFn(num, den);
        }
        expect_eof();
        return TRatFn(num);
    }

  private:
    QPoly parse_factor() {
        skip_ws();
        if (!eof() && peek() == '(') {
            ++pos_;
            QPoly p = parse_poly();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        return parse_poly();
    }

    QPoly parse_poly() {
        QPoly p;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!eof() && (peek() == '+' || peek() == '-')) {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            p += parse_term(sign);
            first = false;
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) break;
        }
        return p;
    }

    QPoly parse_term(int sign) {
        skip_ws();
        Rational coeff(sign);
        bool have_coeff = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_number();
            have_coeff = true;
        }
        skip_ws();
        if (!eof() && (peek() == '*')) {
            ++pos_;
            skip_ws();
        }
        if (!eof() && peek() == 't') {
            ++pos_;
            int power = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                power = static_cast<int>(parse_number().get_num().get_si());
            }
            return QPoly(coeff) * QPoly::t(power);
        }
        if (!have_coeff) fail("expected term");
        return QPoly(coeff);
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected number");
        std::string digits = s_.substr(start, pos_ - start);
        skip_ws();
        if (!eof() && peek() == '/') {
            size_t save = pos_;
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ > dstart) return rat_parse(digits + "/" + s_.substr(dstart, pos_ - dstart));
            pos_ = save;  // '/' belongs to the rational-function split
        }
        return rat_parse(digits);
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void expect_eof() {
        skip_ws();
        if (!eof()) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("TRatFn parse error at position " + std::to_string(pos_) +
                                    " in \"" + s_ + "\": " + msg);
    }

    std::string s_;
    size_t pos_ = 0;
};

inline TRatFn tratfn_parse(const std::string& s) { return TRatFnParser(s).parse(); }

}  // namespace tropfano
