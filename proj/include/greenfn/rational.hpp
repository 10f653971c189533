#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace greenfn {

/// Exact rational number, always kept canonical: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Immutable value type built on GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, literals are handy
    Rational(long num, long den);

    /// Parses "p" or "p/q" with optional sign, arbitrary precision.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational reciprocal() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    /// Renders "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace greenfn
