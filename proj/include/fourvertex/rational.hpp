#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fourvertex {

/// Exact rational scalar. Thin value wrapper over GMP's mpq_class so the
/// rest of the library never touches GMP idioms and never converts through
/// floating point by accident.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design for literals
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long num, long den);

    /// Parse a plain decimal string ("17.59" -> 1759/100, "-2.9" -> -29/10).
    /// Throws GeometryError{ParseError} on malformed input.
    static Rational from_decimal(std::string_view text);

    /// Truncate a double at `digits` decimal places and take the result
    /// exactly. Used when sampling parametric curves.
    static Rational from_double_truncated(double x, int digits);

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// -1, 0, +1.
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    double to_double() const { return v_.get_d(); }

    /// "p/q" in lowest terms (q omitted when 1).
    std::string fraction_string() const;

    std::string numerator_string() const { return v_.get_num().get_str(); }
    std::string denominator_string() const { return v_.get_den().get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Decimal rendering of a rational: exact expansion when the denominator is
/// of the form 2^a 5^b, otherwise `sig_digits` significant digits with
/// `exact == false`.
struct DecimalString {
    std::string text;
    bool exact = true;
};

DecimalString rational_to_decimal(const Rational& r, int sig_digits = 15);

}  // namespace fourvertex
