#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "pfmm/ratfunc.hpp"

namespace pfmm {

inline constexpr std::size_t kNumVars = 5;

// Monomial exponents for x0..x4.
struct ExponentVector {
    std::array<unsigned, kNumVars> e{};

    unsigned total() const {
        unsigned t = 0;
        for (unsigned v : e) t += v;
        return t;
    }
    bool divides(const ExponentVector& other) const {
        for (std::size_t j = 0; j < kNumVars; ++j)
            if (e[j] > other.e[j]) return false;
        return true;
    }
    friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r;
        for (std::size_t j = 0; j < kNumVars; ++j) r.e[j] = std::max(a.e[j], b.e[j]);
        return r;
    }
    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r;
        for (std::size_t j = 0; j < kNumVars; ++j) r.e[j] = a.e[j] + b.e[j];
        return r;
    }
    // componentwise difference; caller guarantees b.divides(a)
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r;
        for (std::size_t j = 0; j < kNumVars; ++j) r.e[j] = a.e[j] - b.e[j];
        return r;
    }
    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.e == b.e;
    }
};

enum class OrderKind { Grevlex, Gradlex };

// Total degree first; ties broken reverse-lexicographically (grevlex) or
// lexicographically (gradlex), with variable precedence x0 > x1 > ... > x4.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    bool less(const ExponentVector& a, const ExponentVector& b) const {
        unsigned ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        if (kind == OrderKind::Grevlex) {
            for (std::size_t j = kNumVars; j-- > 0;)
                if (a.e[j] != b.e[j]) return a.e[j] > b.e[j];
        } else {
            for (std::size_t j = 0; j < kNumVars; ++j)
                if (a.e[j] != b.e[j]) return a.e[j] < b.e[j];
        }
        return false;
    }
    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind;
    }
};

// map comparator that puts the leading monomial first
struct DescendingByOrder {
    MonomialOrder order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return order.less(b, a);
    }
};

template <class F>
inline bool coeff_is_zero(const F& c) {
    return c.is_zero();
}
template <>
inline bool coeff_is_zero<Rational>(const Rational& c) {
    return c == 0;
}

// Sparse multivariate polynomial in x0..x4 over a coefficient field F
// (Rational or RatFunc-in-psi). Terms are kept sorted leading-first in the
// monomial order the polynomial was constructed with.
template <class F>
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, F, DescendingByOrder>;

    explicit MultiPoly(MonomialOrder order = {})
        : terms_(DescendingByOrder{order}) {}

    static MultiPoly constant(const F& c, MonomialOrder order = {}) {
        MultiPoly p(order);
        p.add_term(ExponentVector{}, c);
        return p;
    }
    static MultiPoly term(const F& c, const ExponentVector& ev, MonomialOrder order = {}) {
        MultiPoly p(order);
        p.add_term(ev, c);
        return p;
    }
    static MultiPoly variable(std::size_t j, MonomialOrder order = {}) {
        ExponentVector ev;
        ev.e[j] = 1;
        return term(F(1), ev, order);
    }

    MonomialOrder order() const { return terms_.key_comp().order; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const ExponentVector& leading_monomial() const {
        return terms_.begin()->first;
    }
    const F& leading_coeff() const { return terms_.begin()->second; }

    F coeff(const ExponentVector& ev) const {
        auto it = terms_.find(ev);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const ExponentVector& ev, const F& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(ev, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, F(0) - c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.order());
        for (const auto& [ev, c] : a.terms_) r.terms_.emplace(ev, F(0) - c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.order());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend MultiPoly operator*(const F& c, const MultiPoly& a) {
        MultiPoly r(a.order());
        for (const auto& [ev, ac] : a.terms_) r.add_term(ev, c * ac);
        return r;
    }
    // multiply by a single term c * x^ev
    MultiPoly times_term(const F& c, const ExponentVector& ev) const {
        MultiPoly r(order());
        for (const auto& [e, ac] : terms_) r.add_term(e + ev, c * ac);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_.size() == b.terms_.size() &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
    }

    MultiPoly with_order(MonomialOrder order) const {
        MultiPoly r(order);
        for (const auto& [ev, c] : terms_) r.terms_.emplace(ev, c);
        return r;
    }

    std::string to_string(const std::string& coeff_var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [ev, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += coeff_to_string(c, coeff_var);
            for (std::size_t j = 0; j < kNumVars; ++j) {
                if (ev.e[j] == 0) continue;
                out += " x" + std::to_string(j);
                if (ev.e[j] > 1) out += "^" + std::to_string(ev.e[j]);
            }
        }
        return out;
    }

private:
    static std::string coeff_to_string(const Rational& c, const std::string&) {
        return pfmm::to_string(c);
    }
    static std::string coeff_to_string(const RatFunc& c, const std::string& var) {
        return "(" + c.to_string(var) + ")";
    }

    TermMap terms_;
};

template <class F>
MultiPoly<F> partial_derivative(const MultiPoly<F>& p, std::size_t j) {
    MultiPoly<F> r(p.order());
    for (const auto& [ev, c] : p.terms()) {
        if (ev.e[j] == 0) continue;
        ExponentVector d = ev;
        d.e[j] -= 1;
        r.add_term(d, F(static_cast<long>(ev.e[j])) * c);
    }
    return r;
}

}  // namespace pfmm
