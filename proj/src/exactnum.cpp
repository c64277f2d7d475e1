#include "gencert/exactnum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <vector>

namespace gencert {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    ExactRat r(num, den);
    r.canonicalize();
    return r;
}

ExactInt ipow(const ExactInt& base, unsigned long exp) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    ExactInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

ExactInt lcm(const ExactInt& a, const ExactInt& b) {
    ExactInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

ExactInt floor_rat(const ExactRat& x) {
    ExactInt out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

ExactInt ceil_rat(const ExactRat& x) {
    ExactInt out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

std::string to_string(const ExactInt& x) { return x.get_str(); }

std::string to_string(const ExactRat& x) { return x.get_str(); }

std::string to_fraction_string(const ExactRat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal_string(const ExactRat& x, int digits) {
    if (x == 0) return "0";
    // Scale to `digits` significant figures with exact integer arithmetic.
    const bool neg = x < 0;
    ExactRat a = neg ? ExactRat(-x) : x;
    long exp10 = 0;
    const ExactInt ten = 10;
    ExactInt lo = ipow(ten, static_cast<unsigned long>(digits - 1));
    ExactInt hi = lo * 10;
    // Coarse estimate from bit lengths keeps the loop short for huge ratios.
    long bits = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
    exp10 = static_cast<long>(std::floor(bits * 0.30102999566398120)) - (digits - 1);
    auto scaled = [&](long e10) {
        ExactRat s = a;
        if (e10 > 0) s /= ExactRat(ipow(ten, static_cast<unsigned long>(e10)));
        if (e10 < 0) s *= ExactRat(ipow(ten, static_cast<unsigned long>(-e10)));
        return s;
    };
    ExactRat s = scaled(exp10);
    while (s >= hi) s = scaled(++exp10);
    while (s < lo) s = scaled(--exp10);
    // Round half up on the last digit.
    ExactInt m = floor_rat(s + ExactRat(1, 2));
    if (m >= hi) {
        m /= 10;
        ++exp10;
    }
    std::string d = m.get_str();
    std::ostringstream os;
    if (neg) os << '-';
    os << d[0];
    if (d.size() > 1) os << '.' << d.substr(1);
    os << 'e' << (exp10 + static_cast<long>(d.size()) - 1);
    return os.str();
}

unsigned long to_ulong(const ExactInt& x) {
    if (x < 0 || !x.fits_ulong_p()) throw DomainError("value out of machine range: " + x.get_str());
    return x.get_ui();
}

// ---------------------------------------------------------------------------
// Primality

namespace {

// Sorenson & Webster: the first 13 prime bases make Miller-Rabin deterministic
// below this bound.
const ExactInt& mr_proven_bound() {
    static const ExactInt bound("3317044064679887385961981");
    return bound;
}

constexpr std::array<unsigned long, 13> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const ExactInt& n, unsigned long base) {
    ExactInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    ExactInt x;
    ExactInt b = base;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const ExactInt nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1UL << 16;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_prime(const ExactInt& n) {
    if (n < 2) return false;
    for (unsigned long p : small_primes()) {
        if (p > 1000) break;
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 1000UL * 1000UL) return true;
    if (n < mr_proven_bound()) {
        return std::all_of(kMrBases.begin(), kMrBases.end(),
                           [&](unsigned long b) { return strong_probable_prime(n, b); });
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

PrimalityGrade primality_grade(const ExactInt& n) {
    return n < mr_proven_bound() ? PrimalityGrade::proven : PrimalityGrade::bpsw;
}

ExactInt Factorization::recompose() const {
    ExactInt out = 1;
    for (const auto& [p, k] : primes) out *= ipow(p, k);
    return out;
}

std::set<ExactInt> Factorization::prime_set() const {
    std::set<ExactInt> out;
    for (const auto& [p, k] : primes) out.insert(p);
    return out;
}

// ---------------------------------------------------------------------------
// Factoring

namespace {

// Primes in [lo, hi) from a segmented sieve, fed to `emit` in order.
void for_each_prime(unsigned long lo, unsigned long hi, const std::function<bool(unsigned long)>& emit) {
    if (hi <= 2 || lo >= hi) return;
    lo = std::max(lo, 2UL);
    const auto root = static_cast<unsigned long>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<unsigned long> base;
    {
        std::vector<bool> composite(root + 1, false);
        for (unsigned long i = 2; i <= root; ++i) {
            if (composite[i]) continue;
            base.push_back(i);
            for (unsigned long j = i * i; j <= root; j += i) composite[j] = true;
        }
    }
    constexpr unsigned long kSegment = 1UL << 18;
    std::vector<char> mark(kSegment);
    for (unsigned long start = lo; start < hi; start += kSegment) {
        const unsigned long end = std::min(hi, start + kSegment);
        std::fill(mark.begin(), mark.end(), 0);
        for (unsigned long p : base) {
            if (p * p >= end) break;
            unsigned long first = std::max(p * p, (start + p - 1) / p * p);
            for (unsigned long j = first; j < end; j += p) mark[j - start] = 1;
        }
        for (unsigned long v = start; v < end; ++v) {
            if (!mark[v - start] && !emit(v)) return;
        }
    }
}

ExactInt mulmod(const ExactInt& a, const ExactInt& b, const ExactInt& n) {
    ExactInt t = a * b;
    mpz_tdiv_r(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds.
std::optional<ExactInt> pollard_brent(const ExactInt& n, unsigned long c, unsigned long max_iter) {
    const unsigned long batch = 128;
    ExactInt y = 2, x, ys, q = 1, g = 1;
    const ExactInt cc = c;
    auto step = [&](ExactInt& v) {
        v = v * v + cc;
        mpz_tdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1, iter = 0;
    while (g == 1 && iter < max_iter) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long m = std::min(batch, r - k);
            for (unsigned long i = 0; i < m; ++i) {
                step(y);
                ExactInt diff = x - y;
                q = mulmod(q, diff, n);
            }
            g = gcd(q, n);
            k += m;
            iter += m;
        }
        r *= 2;
    }
    if (g == n) {
        // Overshot inside a batch: redo one step at a time.
        do {
            step(ys);
            g = gcd(ExactInt(x - ys), n);
        } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    return std::nullopt;
}

// Pollard p-1 with a prime-by-prime second stage. `known` is folded into the
// stage-1 exponent (primes dividing n are known to be 1 mod `known`).
std::optional<ExactInt> pollard_pm1(const ExactInt& n, unsigned long known, unsigned long b1, unsigned long b2) {
    ExactInt a = 3;
    ExactInt e = known;
    mpz_powm(a.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    ExactInt chunk = 1;
    bool failed_high = false;
    auto flush = [&]() -> std::optional<ExactInt> {
        mpz_powm(a.get_mpz_t(), a.get_mpz_t(), chunk.get_mpz_t(), n.get_mpz_t());
        chunk = 1;
        ExactInt g = gcd(ExactInt(a - 1), n);
        if (g == n) failed_high = true;
        if (g != 1 && g != n) return g;
        return std::nullopt;
    };
    std::optional<ExactInt> found;
    for_each_prime(2, b1 + 1, [&](unsigned long p) {
        unsigned long pk = p;
        while (pk <= b1 / p) pk *= p;
        chunk *= pk;
        if (mpz_sizeinbase(chunk.get_mpz_t(), 2) > 4096) {
            found = flush();
            if (found || failed_high) return false;
        }
        return true;
    });
    if (found) return found;
    if (failed_high) return std::nullopt;
    if ((found = flush())) return found;
    if (failed_high) return std::nullopt;

    // Stage 2: walk primes above b1 using cached a^gap for even gaps.
    const ExactInt a2 = mulmod(a, a, n);
    std::vector<ExactInt> gap_pow(1, ExactInt(1));  // gap_pow[i] = a^(2i)
    auto power_for_gap = [&](unsigned long gap) -> const ExactInt& {
        while (gap_pow.size() <= gap / 2) gap_pow.push_back(mulmod(gap_pow.back(), a2, n));
        return gap_pow[gap / 2];
    };
    ExactInt x;
    ExactInt acc = 1;
    unsigned long prev = 0, count = 0;
    for_each_prime(b1 + 1, b2, [&](unsigned long p) {
        if (prev == 0) {
            ExactInt pe = p;
            mpz_powm(x.get_mpz_t(), a.get_mpz_t(), pe.get_mpz_t(), n.get_mpz_t());
        } else {
            x = mulmod(x, power_for_gap(p - prev), n);
        }
        prev = p;
        acc = mulmod(acc, ExactInt(x - 1), n);
        if (++count % 2048 == 0) {
            ExactInt g = gcd(acc, n);
            if (g != 1 && g != n) {
                found = g;
                return false;
            }
            if (g == n) return false;
        }
        return true;
    });
    if (found) return found;
    ExactInt g = gcd(acc, n);
    if (g != 1 && g != n) return g;
    return std::nullopt;
}

std::optional<ExactInt> perfect_power_root(const ExactInt& n) {
    if (!mpz_perfect_power_p(n.get_mpz_t())) return std::nullopt;
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
        ExactInt root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return root;
    }
    return std::nullopt;
}

// Lenstra's elliptic curve method on Montgomery curves By^2 = x^3 + Ax^2 + x
// in (X:Z) coordinates, Suyama parametrization, baby-step giant-step stage 2.
// Residues may be negative; raw mpz calls keep the inner loops allocation free.
class Ecm {
public:
    explicit Ecm(const ExactInt& n) : n_(n) {}

    std::optional<ExactInt> curve(unsigned long sigma, unsigned long b1, unsigned long b2) {
        const ExactInt s = sigma;
        const ExactInt u = red(s * s - 5), v = red(4 * s);
        const ExactInt u3 = red(u * u * u);
        Point p{red(u3), red(v * v * v)};
        ExactInt den = red(16 * u3 * v), inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t()) == 0) return proper(gcd(den, n_));
        ExactInt vu = red(v - u);
        a24_ = red(red(vu * vu * vu) * red(3 * u + v) * inv);

        for_each_prime(2, b1 + 1, [&](unsigned long q) {
            unsigned long qk = q;
            while (qk <= b1 / q) qk *= q;
            ladder(p, p, qk);
            return true;
        });
        ExactInt g = gcd(p.z, n_);
        if (g != 1) return proper(g);

        // Stage 2: primes m*D +- j with j < D/2 coprime to D. Baby steps are
        // normalized to Z = 1 so each pair costs one product.
        constexpr unsigned long D = 210;
        std::vector<Point> baby(D / 2 + 1);
        baby[1] = p;
        Point two;
        dbl(two, p);
        add(baby[3], two, p, p);
        for (unsigned long j = 5; j <= D / 2; j += 2) add(baby[j], baby[j - 2], two, baby[j - 4]);
        std::vector<ExactInt> xs;
        for (unsigned long j = 1; j <= D / 2; j += 2) {
            if (std::gcd(j, D) != 1) continue;
            ExactInt zi;
            if (mpz_invert(zi.get_mpz_t(), baby[j].z.get_mpz_t(), n_.get_mpz_t()) == 0) {
                return proper(gcd(baby[j].z, n_));
            }
            xs.push_back(red(baby[j].x * zi));
        }
        const unsigned long m0 = std::max(2UL, b1 / D);
        Point step, prev, cur, next;
        ladder(step, p, D);
        ladder(prev, p, (m0 - 1) * D);
        ladder(cur, p, m0 * D);
        ExactInt acc = 1;
        for (unsigned long m = m0; m * D <= b2 + D; ++m) {
            for (const auto& x : xs) {
                mpz_mul(t1_, x.get_mpz_t(), cur.z.get_mpz_t());
                mpz_sub(t1_, cur.x.get_mpz_t(), t1_);
                mul(acc.get_mpz_t(), acc.get_mpz_t(), t1_);
            }
            add(next, cur, step, prev);
            std::swap(prev, cur);
            std::swap(cur, next);
        }
        return proper(gcd(acc, n_));
    }

private:
    struct Point {
        ExactInt x, z;
    };

    ExactInt red(ExactInt v) const {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
        return v;
    }

    std::optional<ExactInt> proper(ExactInt g) const {
        g = abs(g);
        if (g != 1 && g != n_) return g;
        return std::nullopt;
    }

    void mul(mpz_ptr r, mpz_srcptr a, mpz_srcptr b) {
        mpz_mul(r, a, b);
        mpz_tdiv_r(r, r, n_.get_mpz_t());
    }

    void dbl(Point& r, const Point& p) {
        mpz_add(t1_, p.x.get_mpz_t(), p.z.get_mpz_t());
        mul(t1_, t1_, t1_);
        mpz_sub(t2_, p.x.get_mpz_t(), p.z.get_mpz_t());
        mul(t2_, t2_, t2_);
        mpz_sub(t3_, t1_, t2_);
        mul(r.x.get_mpz_t(), t1_, t2_);
        mul(t4_, a24_.get_mpz_t(), t3_);
        mpz_add(t4_, t4_, t2_);
        mul(r.z.get_mpz_t(), t3_, t4_);
    }

    // r = P + Q given diff = P - Q; r may alias P or Q but not diff.
    void add(Point& r, const Point& p, const Point& q, const Point& diff) {
        mpz_sub(t1_, p.x.get_mpz_t(), p.z.get_mpz_t());
        mpz_add(t2_, q.x.get_mpz_t(), q.z.get_mpz_t());
        mul(t1_, t1_, t2_);
        mpz_add(t3_, p.x.get_mpz_t(), p.z.get_mpz_t());
        mpz_sub(t4_, q.x.get_mpz_t(), q.z.get_mpz_t());
        mul(t3_, t3_, t4_);
        mpz_add(t2_, t1_, t3_);
        mul(t2_, t2_, t2_);
        mpz_sub(t4_, t1_, t3_);
        mul(t4_, t4_, t4_);
        mul(r.x.get_mpz_t(), diff.z.get_mpz_t(), t2_);
        mul(r.z.get_mpz_t(), diff.x.get_mpz_t(), t4_);
    }

    void ladder(Point& out, const Point& p, unsigned long k) {
        Point base = p, r0 = p, r1;
        dbl(r1, p);
        for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
            if ((k >> bit) & 1) {
                add(r0, r1, r0, base);
                dbl(r1, r1);
            } else {
                add(r1, r1, r0, base);
                dbl(r0, r0);
            }
        }
        out = std::move(r0);
    }

    ExactInt n_;
    ExactInt a24_;
    ExactInt t1s_, t2s_, t3s_, t4s_;
    mpz_ptr t1_ = t1s_.get_mpz_t(), t2_ = t2s_.get_mpz_t(), t3_ = t3s_.get_mpz_t(), t4_ = t4s_.get_mpz_t();
};

ExactInt find_factor(const ExactInt& n, unsigned long known) {
    if (auto root = perfect_power_root(n)) return *root;
    if (auto f = pollard_brent(n, 1, 1UL << 14)) return *f;
    if (auto f = pollard_pm1(n, known, 2000, 50000)) return *f;
    // Curves with a fixed sigma sequence, so results are reproducible.
    Ecm ecm(n);
    unsigned long sigma = 6;
    for (unsigned long b1 = 3000;; b1 = b1 * 2) {
        for (int c = 0; c < 30; ++c) {
            if (auto f = ecm.curve(sigma++, b1, 100 * b1)) return *f;
        }
    }
}

void factor_into(const ExactInt& n, unsigned long known, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.primes[n] += 1;
        if (primality_grade(n) == PrimalityGrade::bpsw) out.grade = PrimalityGrade::bpsw;
        return;
    }
    ExactInt f = find_factor(n, known);
    factor_into(f, known, out);
    factor_into(ExactInt(n / f), known, out);
}

}  // namespace

Factorization factorize(const ExactInt& n, FactorHint hint) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    Factorization out;
    out.value = n;
    ExactInt rest = n;
    for (unsigned long p : small_primes()) {
        if (rest == 1) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            out.primes[ExactInt(p)] += 1;
        }
    }
    const unsigned long small_limit = small_primes().back();
    if (rest > 1 && hint.modulus > 2) {
        // Candidates 1 + k*m only; any that divide are prime because every
        // smaller prime factor has already been removed.
        const unsigned long limit = std::min<unsigned long>(10000000UL, hint.modulus * 100000UL);
        const unsigned long m = hint.modulus % 2 == 0 ? hint.modulus : 2 * hint.modulus;
        for (unsigned long c = 1 + m; c <= limit && rest > 1; c += m) {
            if (c <= small_limit) continue;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), c)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), c);
                out.primes[ExactInt(c)] += 1;
            }
            if (ExactInt(c) * c > rest) break;
        }
    }
    factor_into(rest, std::max(1UL, hint.modulus), out);
    return out;
}

// ---------------------------------------------------------------------------
// Orders and Zsigmondy primes

ExactInt mult_order(const ExactInt& q, const ExactInt& r) {
    if (!is_prime(r)) throw DomainError("mult_order: modulus is not prime: " + r.get_str());
    ExactInt qm = q % r;
    if (qm < 0) qm += r;
    if (qm == 0) throw DomainError("mult_order: prime divides the base");
    ExactInt order = r - 1;
    const Factorization f = factorize(order);
    for (const auto& [p, k] : f.primes) {
        for (unsigned i = 0; i < k; ++i) {
            ExactInt cand = order / p;
            ExactInt t;
            mpz_powm(t.get_mpz_t(), qm.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
            if (t != 1) break;
            order = cand;
        }
    }
    return order;
}

namespace {

int moebius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

ExactInt cyclotomic_value(unsigned long e, const ExactInt& q) {
    if (e == 0) throw DomainError("cyclotomic index must be positive");
    ExactInt num = 1, den = 1;
    for (unsigned long d = 1; d <= e; ++d) {
        if (e % d != 0) continue;
        const int mu = moebius(e / d);
        if (mu == 0) continue;
        ExactInt term = ipow(q, d) - 1;
        (mu > 0 ? num : den) *= term;
    }
    if (num % den != 0) throw std::logic_error("cyclotomic value not integral");
    return num / den;
}

bool is_zsigmondy_exception(const ExactInt& q, unsigned long e) {
    if (e == 6 && q == 2) return true;
    if (e == 2) {
        ExactInt qp1 = q + 1;
        return mpz_popcount(qp1.get_mpz_t()) == 1;
    }
    return false;
}

std::set<ExactInt> primitive_prime_divisors(const ExactInt& q, unsigned long e) {
    if (q < 2 || e < 2) throw DomainError("primitive_prime_divisors requires q >= 2 and e >= 2");
    // Primes dividing Phi_e(q) are primitive unless they divide e.
    ExactInt part = cyclotomic_value(e, q);
    for (unsigned long l : prime_divisors(e)) {
        while (mpz_divisible_ui_p(part.get_mpz_t(), l)) mpz_divexact_ui(part.get_mpz_t(), part.get_mpz_t(), l);
    }
    return factorize(part, FactorHint{e}).prime_set();
}

std::optional<ExactInt> smallest_primitive_prime(const ExactInt& q, unsigned long e) {
    auto all = primitive_prime_divisors(q, e);
    if (all.empty()) return std::nullopt;
    return *all.begin();
}

std::optional<PrimePower> as_prime_power(const ExactInt& q) {
    if (q < 2) return std::nullopt;
    ExactInt base = q;
    unsigned long exp = 1;
    while (auto root = perfect_power_root(base)) {
        // perfect_power_root returns the root for the smallest k; accumulate.
        ExactInt r = *root;
        unsigned long k = 2;
        while (ipow(r, k) != base) ++k;
        exp *= k;
        base = r;
    }
    if (!is_prime(base)) return std::nullopt;
    return PrimePower{base, exp};
}

std::set<unsigned long> prime_divisors(unsigned long n) {
    std::set<unsigned long> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.insert(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.insert(n);
    return out;
}

std::optional<unsigned long> exact_log2(const ExactInt& n) {
    if (n < 1 || mpz_popcount(n.get_mpz_t()) != 1) return std::nullopt;
    return mpz_scan1(n.get_mpz_t(), 0);
}

}  // namespace gencert
