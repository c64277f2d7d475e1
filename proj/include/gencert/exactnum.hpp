#pragma once

// Exact integer/rational arithmetic and the number theory needed to pick
// primitive prime divisors: factorization, multiplicative order, Zsigmondy
// primes.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace gencert {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Thrown for violated preconditions on numeric inputs.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds num/den in lowest terms with a positive denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den = 1);

ExactInt ipow(const ExactInt& base, unsigned long exp);
ExactInt gcd(const ExactInt& a, const ExactInt& b);
ExactInt lcm(const ExactInt& a, const ExactInt& b);

/// floor(x) and ceil(x) of an exact rational.
ExactInt floor_rat(const ExactRat& x);
ExactInt ceil_rat(const ExactRat& x);

/// "num/den" with den omitted when it is 1.
std::string to_string(const ExactInt& x);
std::string to_string(const ExactRat& x);
/// Always "num/den", also for integers; the serialization format.
std::string to_fraction_string(const ExactRat& x);
/// Non-authoritative decimal rendering in scientific notation.
std::string to_decimal_string(const ExactRat& x, int digits = 12);

/// Unsigned long value of x; throws DomainError when x does not fit.
unsigned long to_ulong(const ExactInt& x);

// ---------------------------------------------------------------------------
// Primes and factorization

/// True when every prime factor is covered by a proof-grade primality test
/// (deterministic Miller-Rabin); false when some factor above the proven range
/// was accepted by BPSW.
enum class PrimalityGrade { proven, bpsw };

bool is_prime(const ExactInt& n);
PrimalityGrade primality_grade(const ExactInt& n);

struct Factorization {
    ExactInt value = 1;
    std::map<ExactInt, unsigned> primes;
    PrimalityGrade grade = PrimalityGrade::proven;

    ExactInt recompose() const;
    std::set<ExactInt> prime_set() const;
};

/// Optional knowledge about the prime factors of n used to speed up
/// factoring: every prime factor is known to be 1 mod `modulus`.
struct FactorHint {
    unsigned long modulus = 1;
};

/// Exact prime factorization; 1 yields an empty map.
Factorization factorize(const ExactInt& n, FactorHint hint = {});

/// Least k >= 1 with q^k = 1 (mod r). Requires r prime, r not dividing q.
ExactInt mult_order(const ExactInt& q, const ExactInt& r);

/// Value of the e-th cyclotomic polynomial at q.
ExactInt cyclotomic_value(unsigned long e, const ExactInt& q);

/// True for the Zsigmondy exceptions (q,e) = (2^a - 1, 2) and (2, 6).
bool is_zsigmondy_exception(const ExactInt& q, unsigned long e);

/// All primes r | q^e - 1 not dividing q^i - 1 for 0 < i < e.
/// Requires q >= 2, e >= 2.
std::set<ExactInt> primitive_prime_divisors(const ExactInt& q, unsigned long e);

/// Smallest primitive prime divisor of q^e - 1, if any.
std::optional<ExactInt> smallest_primitive_prime(const ExactInt& q, unsigned long e);

/// Prime power decomposition q = p^a; nullopt if q is not a prime power.
struct PrimePower {
    ExactInt p;
    unsigned long a = 0;
};
std::optional<PrimePower> as_prime_power(const ExactInt& q);

/// Prime divisors of a machine-size integer, ascending.
std::set<unsigned long> prime_divisors(unsigned long n);

/// Integer log base 2 when n is a power of 2.
std::optional<unsigned long> exact_log2(const ExactInt& n);

}  // namespace gencert
