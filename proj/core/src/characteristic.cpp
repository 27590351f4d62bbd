#include "hypertheta/characteristic.hpp"

#include "hypertheta/errors.hpp"

#include <stdexcept>

namespace hypertheta {

Rational::Rational(int n, int d) : num(n), den(d) {
    if (d != 1 && d != 2) {
        throw std::invalid_argument("characteristic denominator must be 1 or 2");
    }
    if (den == 2 && num % 2 == 0) {
        num /= 2;
        den = 1;
    }
}

Rational Rational::from_halves(int h) { return Rational(h, 2); }

Characteristic Characteristic::integer(int a, int c, int b, int d) {
    return {Rational(a), Rational(c), Rational(b), Rational(d)};
}

Characteristic Characteristic::from_halves(int a2, int c2, int b2, int d2) {
    return {Rational::from_halves(a2), Rational::from_halves(c2),
            Rational::from_halves(b2), Rational::from_halves(d2)};
}

bool Characteristic::is_integer() const {
    return a.is_integer() && c.is_integer() && b.is_integer() && d.is_integer();
}

namespace {

std::string format_entry(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/2";
}

int floor_div(int x, int m) {
    int q = x / m;
    if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
    return q;
}

}  // namespace

std::string Characteristic::to_string() const {
    return "[" + format_entry(a) + " " + format_entry(c) + "; " + format_entry(b) +
           " " + format_entry(d) + "]";
}

ReducedCharacteristic reduce_characteristic(const Characteristic& ch) {
    // In units of 1/2, canonical entries live in [0, 4).
    const int a2 = ch.a.halves();
    const int c2 = ch.c.halves();
    const int b2 = ch.b.halves();
    const int d2 = ch.d.halves();
    const int kb = floor_div(b2, 4);
    const int kd = floor_div(d2, 4);

    // Lower-row shift by 2k multiplies by exp(pi i a k) = i^(a2 k).
    const int quarter_turns = ((a2 * kb + c2 * kd) % 4 + 4) % 4;
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    Characteristic out = Characteristic::from_halves(a2 - 4 * floor_div(a2, 4),
                                                     c2 - 4 * floor_div(c2, 4),
                                                     b2 - 4 * kb, d2 - 4 * kd);
    return {out, powers[quarter_turns]};
}

bool is_odd(const Characteristic& ch) {
    if (!ch.is_integer()) {
        throw HalfIntegerParityUndefined("parity is defined only for integer characteristics, got " +
                                         ch.to_string());
    }
    const long s = static_cast<long>(ch.a.num) * ch.b.num + static_cast<long>(ch.c.num) * ch.d.num;
    return (s % 2 + 2) % 2 == 1;
}

int integer_index(const Characteristic& ch) {
    auto bit = [&](const Rational& r) {
        if (r.den != 1 || (r.num != 0 && r.num != 1)) {
            throw std::invalid_argument("expected entries 0 or 1 in " + ch.to_string());
        }
        return r.num;
    };
    return 8 * bit(ch.a) + 4 * bit(ch.c) + 2 * bit(ch.b) + bit(ch.d);
}

Characteristic from_integer_index(int index) {
    return Characteristic::integer((index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1);
}

const std::array<Characteristic, 6>& odd_characteristics() {
    static const std::array<Characteristic, 6> odd = {
        Characteristic::integer(0, 1, 0, 1), Characteristic::integer(1, 0, 1, 0),
        Characteristic::integer(0, 1, 1, 1), Characteristic::integer(1, 0, 1, 1),
        Characteristic::integer(1, 1, 0, 1), Characteristic::integer(1, 1, 1, 0)};
    return odd;
}

}  // namespace hypertheta
