#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfmm/unipoly.hpp"

namespace pfmm {

// Reduced rational function in one formal parameter: gcd(num, den) = 1 and
// the denominator is monic. The representative is unique, so operator== is
// structural equality.
class RatFunc {
public:
    RatFunc() : num_{}, den_{Rational(1)} {}
    RatFunc(const Rational& c) : num_{c}, den_{Rational(1)} {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const UniPoly& p) : num_(p), den_{Rational(1)} {}
    RatFunc(UniPoly num, UniPoly den) { normalize(std::move(num), std::move(den)); }

    static RatFunc variable() { return RatFunc(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // f(0); the denominator must not vanish at the origin.
    Rational eval_zero() const {
        Rational d0 = den_.coeff(0);
        if (d0 == 0) throw PoleAtOrigin("rational function has a pole at 0");
        return num_.coeff(0) / d0;
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw DivisionByZero("evaluation at a pole");
        return num_.eval(x) / d;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const {
        if (den_ == UniPoly(Rational(1))) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw DivisionByZero("zero denominator");
        if (num.is_zero()) {
            num_ = {};
            den_ = UniPoly(Rational(1));
            return;
        }
        UniPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Rational lead_inv = 1 / den.leading();
        num_ = lead_inv * num;
        den_ = lead_inv * den;
    }

    UniPoly num_;
    UniPoly den_;
};

inline RatFunc ratfunc_normalize(const UniPoly& num, const UniPoly& den) {
    return RatFunc(num, den);
}

// Rewrites f(psi) as a rational function of z = psi^{-k}. In reduced form
// f = N/D is mu_k-invariant iff all exponents of N and all exponents of D
// are congruent to one common residue r mod k; then N = psi^r N'(psi^k),
// D = psi^r D'(psi^k) and f = N'(1/z)/D'(1/z). The result is certified by
// resubstituting z = psi^{-k}.
inline RatFunc psi_to_z(const RatFunc& f, long k) {
    if (k < 1) throw Error("psi_to_z requires k >= 1");
    if (f.is_zero()) return RatFunc();

    auto residue = [&](const UniPoly& p) -> long {
        long r = -1;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeff(static_cast<std::size_t>(i)) == 0) continue;
            long ri = i % k;
            if (r == -1)
                r = ri;
            else if (r != ri)
                throw NotInvariantUnderMuK("exponent support not congruent mod k");
        }
        return r;
    };
    long rn = residue(f.num());
    long rd = residue(f.den());
    if (rn != rd)
        throw NotInvariantUnderMuK("numerator and denominator residues differ mod k");

    // N = psi^r N'(w), w = psi^k; collect N' coefficients.
    auto compress = [&](const UniPoly& p, long r) {
        std::vector<Rational> c(static_cast<std::size_t>(p.degree() / k) + 1);
        for (int i = 0; i <= p.degree(); ++i) {
            Rational ci = p.coeff(static_cast<std::size_t>(i));
            if (ci != 0) c[static_cast<std::size_t>((i - r) / k)] = ci;
        }
        return UniPoly(std::move(c));
    };
    UniPoly np = compress(f.num(), rn);
    UniPoly dp = compress(f.den(), rd);

    // Substitute w = 1/z and clear the common power of z.
    std::size_t m = static_cast<std::size_t>(std::max(np.degree(), dp.degree()));
    auto reverse_to = [&](const UniPoly& p) {
        std::vector<Rational> c(m + 1);
        for (std::size_t i = 0; i <= m; ++i) c[m - i] = p.coeff(i);
        return UniPoly(std::move(c));
    };
    RatFunc result(reverse_to(np), reverse_to(dp));

    // Certify: substituting z = psi^{-k} back must reproduce f exactly.
    auto resub = [&](const UniPoly& p, std::size_t deg_cap) {
        // p(psi^{-k}) * psi^{k*deg_cap} as a polynomial in psi
        std::vector<Rational> c(deg_cap * static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= p.degree(); ++i)
            c[(deg_cap - static_cast<std::size_t>(i)) * static_cast<std::size_t>(k)] =
                p.coeff(static_cast<std::size_t>(i));
        return UniPoly(std::move(c));
    };
    std::size_t cap =
        static_cast<std::size_t>(std::max(result.num().degree(), result.den().degree()));
    RatFunc back(resub(result.num(), cap), resub(result.den(), cap));
    if (!(back == f))
        throw NotInvariantUnderMuK("resubstitution certificate failed");
    return result;
}

}  // namespace pfmm
