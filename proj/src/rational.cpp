#include "fourvertex/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "fourvertex/geometry.hpp"

namespace fourvertex {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw GeometryError(Fault::ParseError, "zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw GeometryError(Fault::ParseError, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_decimal(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&] {
        throw GeometryError(Fault::ParseError,
                            "bad decimal literal: '" + std::string(text) + "'");
    };
    if (n == 0) fail();

    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < n; ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();

    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::from_double_truncated(double x, int digits) {
    if (!std::isfinite(x))
        throw GeometryError(Fault::ParseError, "non-finite sample coordinate");
    double scale = std::pow(10.0, digits);
    double t = std::trunc(x * scale);
    mpz_class num;
    mpz_set_d(num.get_mpz_t(), t);  // t is integral, conversion exact
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::fraction_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

DecimalString rational_to_decimal(const Rational& r, int sig_digits) {
    mpq_class q(r.numerator_string() + "/" + r.denominator_string());
    q.canonicalize();
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();

    bool neg = num < 0;
    if (neg) num = -num;

    // A finite decimal expansion exists iff den = 2^a * 5^b.
    mpz_class d = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }

    if (d == 1) {
        unsigned long k = std::max(twos, fives);
        mpz_class pow2, pow5;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k - twos);
        mpz_ui_pow_ui(pow5.get_mpz_t(), 5, k - fives);
        mpz_class scaled = num * pow2 * pow5;  // value = scaled / 10^k
        std::string s = scaled.get_str();
        std::string out;
        if (k == 0) {
            out = s;
        } else {
            if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
            out = s.substr(0, s.size() - k) + "." + s.substr(s.size() - k);
            // strip trailing zeros after the point
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
        if (neg && out != "0") out.insert(0, 1, '-');
        return {out, true};
    }

    // Non-terminating: round to sig_digits significant digits.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig_digits,
                  (neg ? -1.0 : 1.0) * mpq_class(num, den).get_d());
    return {std::string(buf), false};
}

}  // namespace fourvertex
