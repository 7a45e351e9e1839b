#ifndef CACTI_RATIONAL_HPP
#define CACTI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace cacti::geom {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Integer = mpz_class;

Rat make_rat(long num, long den = 1);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rat parse_rat(std::string_view text);

Integer floor(const Rat& r);
// r - floor(r), in [0, 1).
Rat frac(const Rat& r);

double to_double(const Rat& r);

// Point of S^1 = R/Z; the coordinate is always the representative in [0, 1).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(const Rat& x) : value_(frac(x)) {}

    const Rat& value() const { return value_; }

    CirclePoint operator+(const Rat& shift) const { return CirclePoint(value_ + shift); }
    CirclePoint operator+(const CirclePoint& other) const { return CirclePoint(value_ + other.value_); }
    // Counterclockwise distance from `from` to this point, in [0, 1).
    Rat distance_from(const CirclePoint& from) const { return frac(value_ - from.value_); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.value_ == b.value_; }
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.value_ < b.value_; }

private:
    Rat value_ = 0;
};

std::string to_string(const CirclePoint& p);

}  // namespace cacti::geom

#endif
