#include "gencert/surd.hpp"

namespace gencert {

namespace {

// n = s^2 * d with d squarefree.
std::pair<ExactInt, ExactInt> split_square(const ExactInt& n) {
    ExactInt s = 1, d = 1;
    for (const auto& [p, k] : factorize(n).primes) {
        s *= ipow(p, k / 2);
        if (k % 2 == 1) d *= p;
    }
    return {s, d};
}

int sign_of(const ExactRat& x) { return sgn(x); }

}  // namespace

QuadraticSurd::QuadraticSurd(const ExactRat& rational) : a_(rational) {}

QuadraticSurd::QuadraticSurd(const ExactRat& a, const ExactRat& b, const ExactInt& d) : a_(a), b_(b), d_(d) {
    if (d < 1) throw DomainError("radicand must be positive");
    normalize();
}

QuadraticSurd QuadraticSurd::sqrt_of(const ExactInt& n) {
    if (n < 0) throw DomainError("square root of a negative number");
    if (n == 0) return QuadraticSurd(ExactRat(0));
    auto [s, d] = split_square(n);
    return QuadraticSurd(ExactRat(0), ExactRat(s), d);
}

QuadraticSurd QuadraticSurd::power(const ExactInt& base, const ExactRat& exponent) {
    if (base < 1) throw DomainError("surd power needs a positive base");
    const ExactInt& den = exponent.get_den();
    if (den != 1 && den != 2) throw DomainError("surd power exponent must be a multiple of 1/2");
    const ExactInt twice = exponent.get_num() * (2 / den);  // 2 * exponent
    const ExactInt whole = twice >= 0 ? ExactInt(twice / 2) : ExactInt(-((-twice + 1) / 2));
    const bool half = twice - 2 * whole != 0;
    ExactRat scale;
    if (whole >= 0) scale = ExactRat(ipow(base, to_ulong(whole)));
    else scale = make_rat(1, ipow(base, to_ulong(-whole)));
    if (!half) return QuadraticSurd(scale);
    QuadraticSurd root = sqrt_of(base);
    return root * QuadraticSurd(scale);
}

void QuadraticSurd::normalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        return;
    }
    auto [s, d] = split_square(d_);
    if (s != 1) {
        b_ *= s;
        d_ = d;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }
    if (b_ == 0) d_ = 1;
}

void QuadraticSurd::unify(const QuadraticSurd& o) {
    if (o.b_ == 0 || d_ == o.d_) return;
    if (b_ == 0) {
        d_ = o.d_;
        return;
    }
    throw DomainError("cannot combine sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ")");
}

int QuadraticSurd::sign() const {
    const int sa = sign_of(a_), sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d.
    const ExactRat lhs = a_ * a_, rhs = b_ * b_ * ExactRat(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

QuadraticSurd QuadraticSurd::operator-() const {
    QuadraticSurd out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    unify(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 1;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    unify(o);
    const ExactRat d = ExactRat(o.b_ == 0 && b_ == 0 ? ExactInt(1) : d_);
    const ExactRat a = a_ * o.a_ + b_ * o.b_ * d;
    const ExactRat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    if (b_ == 0) d_ = 1;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
    unify(o);
    // Multiply by the conjugate: 1/(x + y sqrt d) = (x - y sqrt d)/(x^2 - y^2 d).
    const ExactRat norm = o.a_ * o.a_ - o.b_ * o.b_ * ExactRat(o.d_);
    if (norm == 0) throw DomainError("division by zero surd");
    QuadraticSurd conj(o.a_ / norm, -o.b_ / norm, o.b_ == 0 ? ExactInt(1) : o.d_);
    return *this *= conj;
}

ExactRat QuadraticSurd::lower_bound(unsigned precision_bits) const {
    if (b_ == 0) return a_;
    // floor(sqrt(d * 4^k)) / 2^k brackets sqrt(d) from below.
    ExactInt scaled = d_ << (2 * precision_bits);
    ExactInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    const ExactRat lo = make_rat(root, ExactInt(1) << precision_bits);
    const ExactRat hi = make_rat(root + 1, ExactInt(1) << precision_bits);
    return a_ + (b_ > 0 ? b_ * lo : b_ * hi);
}

ExactRat QuadraticSurd::upper_bound(unsigned precision_bits) const {
    return -(-*this).lower_bound(precision_bits);
}

std::string QuadraticSurd::to_string() const {
    if (b_ == 0) return to_fraction_string(a_);
    return to_fraction_string(a_) + " + " + to_fraction_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace gencert
