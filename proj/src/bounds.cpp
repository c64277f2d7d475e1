#include "gencert/bounds.hpp"

namespace gencert {

std::string_view verdict_key(Verdict v) { return v == Verdict::certified ? "certified" : "inconclusive"; }

std::string_view denominator_key(Denominator d) { return d == Denominator::table4 ? "table4" : "table5"; }

std::string_view term_source_key(TermSource s) {
    switch (s) {
        case TermSource::geometric: return "geometric";
        case TermSource::socle: return "socle";
        case TermSource::socle_alternating: return "socle-alternating";
        case TermSource::aggregate: return "aggregate";
        case TermSource::alternating: return "alternating";
    }
    return "?";
}

PrimitivePrimeWitness witness_for(const GroupSpec& s, const BoundOptions& options) {
    if (!options.r_override) return select_r(s);
    if (!s.in_theorem_scope()) throw SpecError(s.name() + " is outside the n >= 8 scope of the (2,r) bound");
    PrimitivePrimeWitness w;
    w.q = s.q;
    w.e = table1_e(s);
    w.r = *options.r_override;
    if (!is_prime(w.r) || s.q % w.r == 0) throw SpecError("r = " + w.r.get_str() + " is not a prime coprime to q");
    w.ord = mult_order(s.q, w.r);
    if (w.ord != w.e) {
        throw SpecError("r = " + w.r.get_str() + " is not a primitive prime divisor of q^" + std::to_string(w.e) + " - 1");
    }
    return w;
}

namespace {

ExactInt factorial(unsigned long n) {
    ExactInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BoundReport start_report(const GroupSpec& s, const BoundOptions& options, std::string method) {
    BoundReport rep;
    rep.spec = s;
    rep.witness = witness_for(s, options);
    rep.method = std::move(method);
    rep.normalizer = normalizer_order(s);
    return rep;
}

ExactInt denominator_value(const GroupSpec& s, Denominator d) {
    return d == Denominator::table4 ? i2_lower_bound(s) : involution_class_size_lower(s).class_size_lower;
}

BoundTerm make_term(unsigned sigma, TermSource src, std::string label, std::string condition, ExactInt classes,
                    ExactRat count, ExactInt i2) {
    BoundTerm t;
    t.sigma = sigma;
    t.source = src;
    t.label = std::move(label);
    t.condition = std::move(condition);
    t.classes = std::move(classes);
    t.count_factor = std::move(count);
    t.i2_upper = std::move(i2);
    return t;
}

void add_geometric(BoundReport& rep, bool small_n) {
    const GroupSpec& s = rep.spec;
    for (const auto& m : geometric_candidates(s, rep.witness)) {
        ExactInt i2 = m.i2_upper;
        std::string cond = m.condition;
        if (small_n && m.aschbacher_class == 2) {
            // O_1(q) wr S_n: at most 2^{n-1} sign patterns per element of S_n
            // of order dividing 2.
            i2 = ipow(2, s.n - 1) * sym_involutions_plus1(s.n);
            cond += "; i2 <= 2^(n-1) (i2(S_n) + 1)";
        }
        const ExactRat count = m.normalizer_is_full ? ExactRat(1) : ExactRat(rep.normalizer) / m.normalizer_lower;
        rep.terms.push_back(make_term(m.aschbacher_class, TermSource::geometric, m.type, cond, m.c_M, count, i2));
    }
}

ExactRat alternating_floor(const ExactInt& r) { return make_rat(r * (r - 1), 2); }

void add_generic_sigma0(BoundReport& rep, const BoundOptions& options) {
    const GroupSpec& s = rep.spec;
    const ExactInt& r = rep.witness.r;
    const auto feas = sclass_feasible(s, rep.witness);
    if (!feas.feasible && options.drop_sigma0_if_infeasible) {
        rep.sigma0_dropped = true;
        rep.notes.push_back("no cross-characteristic S-class socle is consistent with r = " + r.get_str() +
                            "; aggregate S-class term dropped");
    } else {
        rep.terms.push_back(make_term(0, TermSource::aggregate, "S-class, non-alternating socle", "aggregate class cap",
                                      sclass_cap(s), ExactRat(rep.normalizer) / ExactRat(r),
                                      ipow(s.q, 2 * s.n + 4)));
    }
    const ExactInt alt = alternating_socle_classes(s);
    if (alt == 0) return;
    if (r > s.n + 2) {
        rep.notes.push_back("r = " + r.get_str() + " > n + 2, so socles A_{n+1}, A_{n+2} have order prime to r");
        return;
    }
    rep.terms.push_back(make_term(0, TermSource::alternating, "A_" + std::to_string(s.n + 1) + " or A_" + std::to_string(s.n + 2),
                                  "", alt, ExactRat(rep.normalizer) / alternating_floor(r), factorial(s.n + 2)));
}

void add_small_sigma0(BoundReport& rep) {
    const ExactInt& r = rep.witness.r;
    for (const auto& row : small_n_sclass(rep.spec, rep.witness)) {
        const bool alt = row.kind == SocleKind::alternating;
        const ExactRat floor = alt ? alternating_floor(r) : ExactRat(r);
        rep.terms.push_back(make_term(0, alt ? TermSource::socle_alternating : TermSource::socle, row.socle, row.condition,
                                      row.cap, ExactRat(rep.normalizer) / floor, row.i2_upper));
    }
}

void finish(BoundReport& rep, Denominator d) {
    rep.denominator = d;
    rep.i2_denominator = denominator_value(rep.spec, d);
    const ExactRat denom(rep.i2_denominator);
    for (auto& x : rep.sigma) x = 0;
    rep.total = 0;
    for (auto& t : rep.terms) {
        t.involution_ratio = ExactRat(t.i2_upper) / denom;
        t.contribution = ExactRat(t.classes) * t.count_factor * t.involution_ratio;
        rep.sigma.at(t.sigma) += t.contribution;
        rep.total += t.contribution;
    }
    rep.verdict = rep.total < 1 ? Verdict::certified : Verdict::inconclusive;
}

// For q = 3 (mod 4) the closed form q^{n^2/4+n/2}/2 exceeds the exact
// involution count of PSp_n(q) (about 0.72 of it at q = 3).
void flag_symplectic_denominator(BoundReport& rep) {
    const GroupSpec& s = rep.spec;
    if (s.family != Family::symplectic || s.q % 4 != 3 || rep.denominator != Denominator::table4) return;
    rep.notes.push_back("for q = 3 mod 4 the closed-form involution bound exceeds i_2(PSp_n(q)); "
                        "the class-size denominator (--table5) gives a valid total");
}

}  // namespace

BoundReport q2_bound(const GroupSpec& s, const BoundOptions& options) {
    BoundReport rep = start_report(s, options, "generic");
    add_geometric(rep, false);
    add_generic_sigma0(rep, options);
    finish(rep, options.denominator);
    flag_symplectic_denominator(rep);
    return rep;
}

BoundReport q2_bound_small_n(const GroupSpec& s, const BoundOptions& options) {
    if (!in_dagger_list(s)) throw SpecError(s.name() + " is not in the small-dimension list");
    BoundReport rep = start_report(s, options, "small-n");
    add_geometric(rep, true);
    add_small_sigma0(rep);
    finish(rep, Denominator::table4);
    if (rep.verdict == Verdict::inconclusive && options.table5_fallback) {
        const ExactRat t4 = rep.total;
        if (denominator_value(s, Denominator::table5) > rep.i2_denominator) {
            finish(rep, Denominator::table5);
            rep.table4_total = t4;
            rep.notes.push_back("closed-form involution bound gives total " + to_string(t4) +
                                "; switched to the explicit class size");
        }
    }
    flag_symplectic_denominator(rep);
    return rep;
}

BoundReport q2_bound_auto(const GroupSpec& s, const BoundOptions& options) {
    return in_dagger_list(s) ? q2_bound_small_n(s, options) : q2_bound(s, options);
}

namespace {

void need_even_14(unsigned long n) {
    if (n % 2 != 0 || n < 14) throw DomainError("closed forms need even n >= 14");
}

}  // namespace

QuadraticSurd closed_form_sigma3_omegaminus(unsigned long n, const ExactInt& q) {
    need_even_14(n);
    const ExactInt nn = n;
    const QuadraticSurd a = QuadraticSurd(ExactRat(8 * nn * (q * q + 1))) *
                            QuadraticSurd::power(q, -make_rat(nn * nn + 8, 8));
    const QuadraticSurd b = QuadraticSurd(ExactRat(16 * (q + 1) * (q + 1))) *
                            QuadraticSurd::power(q, -make_rat(nn * nn - 2 * nn + 8, 8));
    return a + b;
}

QuadraticSurd closed_form_sigma0_omegaminus(unsigned long n, const ExactInt& q) {
    need_even_14(n);
    const ExactInt nn = n;
    const ExactInt tq = q % 2 == 0 ? 1 : 2;
    const ExactInt half = ipow(q, n / 2) + 1;
    const ExactRat cap = make_rat(4 * nn * nn + 21 * nn - 4, 4);
    const QuadraticSurd a = QuadraticSurd(ExactRat(8 * tq * half) * cap) *
                            QuadraticSurd::power(q, -make_rat(nn * nn - 8 * nn - 20, 4));
    const QuadraticSurd b = QuadraticSurd(make_rat(16 * tq * factorial(n + 2) * half, nn)) *
                            QuadraticSurd::power(q, -make_rat(nn * nn - 4, 4));
    return a + b;
}

ExactRat q2p_bound_psl34(const Psl34Data& d) {
    return ExactRat(d.classes * d.index) * make_rat(d.i2_m, d.i2_g) * make_rat(d.i7_m, d.i7_g);
}

Psp4Bound q25_bound_psp4(const ExactInt& q) {
    Psp4Bound out;
    out.counts = psp4_counts(q);
    const auto& c = out.counts;
    out.assembled = 0;
    for (const auto& row : c.rows) {
        if (!row.present) continue;
        Psp4Term t{row.type, row.classes, row.index, row.i2, row.i5_upper, 0};
        t.contribution = ExactRat(row.classes) * row.index * make_rat(row.i2, c.i2_group) * make_rat(row.i5_upper, c.i5_group_lower);
        out.assembled += t.contribution;
        out.terms.push_back(std::move(t));
    }

    using S = QuadraticSurd;
    auto R = [](const ExactInt& x) { return S(ExactRat(x)); };
    const ExactInt q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q6 = q3 * q3;
    const S rq = S::sqrt_of(q);
    const S r2q = S::sqrt_of(2 * q);
    const ExactInt twin = 2 * q3 * (q2 + 1) * (q3 + 2 * q2 + 2 * q + 1) * (q4 + q3 - q - 1);
    const ExactInt quad = 2 * q6 * (q2 - 1) * (q2 + 1) * (q2 + 1);
    S num = R(4 * q3 * (q - 1) * (q + 1) * (q + 1) * (2 * q + 5) * (q2 + 1) * (q3 + 2 * q2 + q + 1));
    num += R(twin);
    num += R(quad);
    num += R(2 * ExactInt(c.a) * q3 * (q + 1) * (q2 - 1) * (q4 - 1)) * rq * (rq + R(1)) * (R(q + 4) + rq);
    num += R(twin);
    num += R(quad);
    num += R(q4 * (q - 1) * (q - 1) * (q + 1) * (q2 - 1) * (q2 + 1)) * (R(q + 1) + r2q);
    out.displayed = num / R(q3 * (q - 1) * (q2 + 1) * (q2 + 1) * (q2 - q + 4) * (q4 - 1));
    out.assembled_le_displayed = S(out.assembled) <= out.displayed;
    out.equal = S(out.assembled) == out.displayed;
    out.verdict = out.assembled < 1 ? Verdict::certified : Verdict::inconclusive;
    return out;
}

}  // namespace gencert
