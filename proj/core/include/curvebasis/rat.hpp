#ifndef CURVEBASIS_RAT_HPP
#define CURVEBASIS_RAT_HPP

#include <cstdint>
#include <numeric>
#include <ostream>

namespace curvebasis {

/// Small exact rational, used for fractional exponents (denominators divide
/// ramification indices, so values stay tiny).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }

    std::int64_t floor() const {
        std::int64_t q = num / den;
        if (num < 0 && num % den != 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num / den;
        if (num > 0 && num % den != 0) ++q;
        return q;
    }

    friend std::ostream& operator<<(std::ostream& os, Rat r) {
        os << r.num;
        if (r.den != 1) os << '/' << r.den;
        return os;
    }
};

} // namespace curvebasis

#endif
