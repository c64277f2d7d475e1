#pragma once

#include "gencert/exactnum.hpp"

#include <string>

namespace gencert {

/// Exact element a + b*sqrt(d) of Q(sqrt d), d a squarefree positive integer.
/// d == 1 means the value is rational (b is then folded into a). Values over
/// different radicands only combine when one of them is rational.
///
/// Closed-form bounds with half-integer exponents of q (q^{n^2/8}, q^{1/2},
/// sqrt(2q)) live here so they can be compared with rationals exactly.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(const ExactRat& rational);  // NOLINT(google-explicit-constructor)
    QuadraticSurd(const ExactRat& a, const ExactRat& b, const ExactInt& d);

    /// sqrt(n) for a positive integer n, normalized to s*sqrt(d).
    static QuadraticSurd sqrt_of(const ExactInt& n);
    /// base^exponent for a positive integer base and an exponent with
    /// denominator 1 or 2.
    static QuadraticSurd power(const ExactInt& base, const ExactRat& exponent);

    const ExactRat& rational_part() const { return a_; }
    const ExactRat& surd_part() const { return b_; }
    const ExactInt& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    /// -1, 0, +1.
    int sign() const;

    QuadraticSurd operator-() const;
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o);

    friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
    friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
    friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
    friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }

    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() >= 0; }
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() == 0; }

    /// Rational lower/upper bounds, tight to within 2^-precision_bits relative.
    ExactRat lower_bound(unsigned precision_bits = 64) const;
    ExactRat upper_bound(unsigned precision_bits = 64) const;

    /// "a + b*sqrt(d)" with exact fractions.
    std::string to_string() const;

private:
    void normalize();
    void unify(const QuadraticSurd& o);

    ExactRat a_ = 0;
    ExactRat b_ = 0;
    ExactInt d_ = 1;
};

}  // namespace gencert
