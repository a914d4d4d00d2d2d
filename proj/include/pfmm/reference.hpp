#pragma once

#include <array>

#include "pfmm/griffiths.hpp"

namespace pfmm {

// Golden reference data for the four built-in families, used by the verify
// command and the test suites.

inline UniPoly linear_in_z(const Rational& c0, const Rational& c1) {
    return UniPoly{c0, c1};
}

// eps_1..eps_4 as functions of z for k in {5, 6, 8, 10}
inline std::array<RatFunc, 4> reference_epsilons(long k) {
    const UniPoly z = UniPoly::variable();
    auto rf = [](const Rational& scale, const UniPoly& num, const UniPoly& den) {
        return RatFunc(scale * num, den);
    };
    switch (k) {
        case 5: {
            UniPoly den = linear_in_z(-1, 1);  // z - 1
            return {rf(Rational(1, 625), UniPoly(1), den),
                    rf(Rational(-3, 25), UniPoly(1), den),
                    rf(1, UniPoly(1), den),
                    rf(-2, UniPoly(1), den)};
        }
        case 6: {
            UniPoly den = linear_in_z(-4, 1);  // z - 4
            return {rf(Rational(1, 324), UniPoly(1), den),
                    rf(Rational(-5, 18), UniPoly(1), den),
                    rf(Rational(-1, 18), linear_in_z(-50, 1), den),
                    rf(Rational(-1, 3), linear_in_z(20, 1), den)};
        }
        case 8: {
            UniPoly den = linear_in_z(-256, 1);  // z - 256
            return {rf(Rational(1, 16), UniPoly(1), den),
                    rf(Rational(-15, 512), linear_in_z(256, 1), den),
                    rf(Rational(-5, 64), linear_in_z(-1280, 3), den),
                    rf(Rational(-1, 4), linear_in_z(1280, 3), den)};
        }
        case 10: {
            UniPoly den = linear_in_z(-12500, 1);  // z - 12500
            return {rf(Rational(5, 4), UniPoly(1), den),
                    rf(Rational(-1, 200), linear_in_z(37500, 7), den),
                    rf(Rational(-1, 20), linear_in_z(-62500, 7), den),
                    rf(-1, linear_in_z(12500, 1), den)};
        }
        default:
            throw InvalidFamily("no reference data for k = " + std::to_string(k));
    }
}

inline Rational reference_lambda(long k) {
    switch (k) {
        case 5: return 1;
        case 6: return 4;
        case 8: return 256;
        case 10: return 12500;
        default: throw InvalidFamily("no reference data for k = " + std::to_string(k));
    }
}

// n_0..n_4 for the four built-in families
inline std::array<Integer, 5> reference_curve_counts(long k) {
    auto big = [](const char* s) { return Integer(s); };
    switch (k) {
        case 5:
            return {big("5"), big("2875"), big("609250"), big("317206375"),
                    big("242467530000")};
        case 6:
            return {big("3"), big("7884"), big("6028452"), big("11900417220"),
                    big("34600752005688")};
        case 8:
            return {big("2"), big("29504"), big("128834912"), big("1423720546880"),
                    big("23193056024793312")};
        case 10:
            return {big("2"), big("462400"), big("24431571200"),
                    big("3401788732948800"), big("700309317702649312000")};
        default:
            throw InvalidFamily("no reference data for k = " + std::to_string(k));
    }
}

}  // namespace pfmm
