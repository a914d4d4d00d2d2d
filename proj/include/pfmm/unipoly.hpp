#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pfmm/rational.hpp"

namespace pfmm {

// Dense univariate polynomial over Q. The formal parameter is anonymous;
// the same type serves psi and z. Trailing coefficient is nonzero unless
// the polynomial is zero (empty coefficient list).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    UniPoly(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    static UniPoly variable() { return monomial(1, 1); }
    static UniPoly monomial(const Rational& c, std::size_t e) {
        if (c == 0) return {};
        std::vector<Rational> v(e + 1);
        v[e] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(s));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(s));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> s(a.coeffs_.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = -a.coeffs_[i];
        return UniPoly(std::move(s));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(p));
    }
    friend UniPoly operator*(const Rational& c, const UniPoly& a) {
        if (c == 0) return {};
        std::vector<Rational> p(a.coeffs_.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c * a.coeffs_[i];
        return UniPoly(std::move(p));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return (1 / leading()) * *this;
    }

    // Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw DivisionByZero("univariate division by zero");
        UniPoly rem = a;
        if (a.degree() < b.degree()) return {UniPoly{}, rem};
        std::vector<Rational> q(a.coeffs_.size() - b.coeffs_.size() + 1);
        const Rational lead_inv = 1 / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            Rational c = rem.leading() * lead_inv;
            q[shift] = c;
            rem = rem - UniPoly::monomial(c, shift) * b;
        }
        return {UniPoly(std::move(q)), rem};
    }

    // Monic Euclidean gcd; remainders are re-normalized at each step to keep
    // rational coefficients small. Result is monic (or zero).
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            Rational mag = c > 0 || out.empty() ? c : Rational(-c);
            bool unit_coeff = (mag == 1 || mag == -1) && i > 0;
            if (!unit_coeff)
                out += pfmm::to_string(mag);
            else if (mag == -1)
                out += "-";
            if (i > 0) {
                if (!unit_coeff) out += "*";
                out += var;
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

}  // namespace pfmm
