#pragma once

#include <array>
#include <complex>
#include <compare>
#include <string>

namespace hypertheta {

// Exact rational with denominator 1 or 2. Normalized so that 2/2 is stored
// as 1/1 and 0/2 as 0/1.
struct Rational {
    int num = 0;
    int den = 1;

    Rational() = default;
    Rational(int n, int d = 1);
    static Rational from_halves(int h);

    int halves() const { return den == 1 ? 2 * num : num; }
    double value() const { return static_cast<double>(num) / den; }
    bool is_integer() const { return den == 1; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& x, const Rational& y) {
        return x.halves() <=> y.halves();
    }
};

// Theta characteristic written as [a c; b d]: the upper row (a, c) shifts
// the summation lattice, the lower row (b, d) shifts the argument.
struct Characteristic {
    Rational a, c, b, d;

    static Characteristic integer(int a, int c, int b, int d);
    static Characteristic from_halves(int a2, int c2, int b2, int d2);

    bool is_integer() const;
    std::string to_string() const;

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend auto operator<=>(const Characteristic& x, const Characteristic& y) {
        if (auto r = x.a <=> y.a; r != 0) return r;
        if (auto r = x.c <=> y.c; r != 0) return r;
        if (auto r = x.b <=> y.b; r != 0) return r;
        return x.d <=> y.d;
    }
};

struct ReducedCharacteristic {
    Characteristic ch;
    std::complex<double> phase;
};

// Moves every entry into [0, 2). theta[ch] = phase * theta[reduced.ch].
ReducedCharacteristic reduce_characteristic(const Characteristic& ch);

// a*b + c*d odd. Throws HalfIntegerParityUndefined for half-integer input.
bool is_odd(const Characteristic& ch);

// Index 8a + 4c + 2b + d of a characteristic whose entries are 0 or 1.
int integer_index(const Characteristic& ch);
Characteristic from_integer_index(int index);

const std::array<Characteristic, 6>& odd_characteristics();

}  // namespace hypertheta
