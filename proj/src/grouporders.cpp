#include "gencert/grouporders.hpp"

namespace gencert {

std::string_view family_key(Family f) {
    switch (f) {
        case Family::linear: return "psl";
        case Family::unitary: return "psu";
        case Family::symplectic: return "psp";
        case Family::orthogonal_plus: return "omega+";
        case Family::orthogonal_minus: return "omega-";
        case Family::orthogonal_odd: return "omega-odd";
    }
    return "?";
}

Family parse_family(std::string_view key) {
    for (Family f : {Family::linear, Family::unitary, Family::symplectic, Family::orthogonal_plus,
                     Family::orthogonal_minus, Family::orthogonal_odd}) {
        if (family_key(f) == key) return f;
    }
    throw SpecError("unknown family '" + std::string(key) + "' (expected psl, psu, psp, omega+, omega-, omega-odd)");
}

GroupSpec GroupSpec::make(Family family, unsigned long n, const ExactInt& q) {
    auto pp = as_prime_power(q);
    if (!pp) throw SpecError("q = " + q.get_str() + " is not a prime power");
    if (n < 2) throw SpecError("dimension must be at least 2");
    switch (family) {
        case Family::symplectic:
        case Family::orthogonal_plus:
        case Family::orthogonal_minus:
            if (n % 2 != 0) throw SpecError(std::string(family_key(family)) + " requires even n");
            break;
        case Family::orthogonal_odd:
            if (n % 2 == 0 || pp->p == 2) throw SpecError("omega-odd requires n and q odd");
            break;
        default: break;
    }
    GroupSpec s;
    s.family = family;
    s.n = n;
    s.q = q;
    s.p = pp->p;
    s.a = pp->a;
    return s;
}

int GroupSpec::eps() const {
    switch (family) {
        case Family::linear:
        case Family::orthogonal_plus: return 1;
        case Family::unitary:
        case Family::orthogonal_minus: return -1;
        default: return 0;
    }
}

bool GroupSpec::in_theorem_scope() const {
    if (n < 8) return false;
    return !(family == Family::orthogonal_plus && n == 8 && q == 2);
}

std::string GroupSpec::name() const {
    std::string head;
    switch (family) {
        case Family::linear: head = "PSL"; break;
        case Family::unitary: head = "PSU"; break;
        case Family::symplectic: head = "PSp"; break;
        case Family::orthogonal_plus: head = "POmega+"; break;
        case Family::orthogonal_minus: head = "POmega-"; break;
        case Family::orthogonal_odd: head = "POmega"; break;
    }
    return head + std::to_string(n) + "(" + q.get_str() + ")";
}

namespace {

// prod_{i=1}^{m} (q^{step*i} - sign^i); sign = -1 gives the unitary factors.
ExactInt product_factor(const ExactInt& q, unsigned long m, unsigned long step, int sign) {
    ExactInt out = 1;
    for (unsigned long i = 1; i <= m; ++i) {
        ExactInt term = ipow(q, step * i);
        if (sign < 0 && i % 2 == 1) term += 1;
        else term -= 1;
        out *= term;
    }
    return out;
}

ExactInt orthogonal_even(int eps, unsigned long n, const ExactInt& q) {
    if (n == 0) return 1;
    const unsigned long m = n / 2;
    ExactInt qm = ipow(q, m);
    ExactInt out = 2 * ipow(q, m * (m - 1)) * ExactInt(eps > 0 ? ExactInt(qm - 1) : ExactInt(qm + 1)) * product_factor(q, m - 1, 2, 1);
    return out;
}

}  // namespace

ExactInt form_group_order(FormGroup kind, unsigned long n, const ExactInt& q) {
    const bool q_odd = q % 2 != 0;
    const unsigned long two_q = q_odd ? 2 : 1;  // (2, q-1)
    auto need_even = [&] {
        if (n % 2 != 0) throw SpecError("form group requires even dimension");
    };
    auto need_odd = [&] {
        if (n % 2 == 0 || !q_odd) throw SpecError("odd orthogonal form group requires n and q odd");
    };
    switch (kind) {
        case FormGroup::GL: return ipow(q, n * (n - 1) / 2) * product_factor(q, n, 1, 1);
        case FormGroup::GU: return n == 0 ? ExactInt(1) : ipow(q, n * (n - 1) / 2) * product_factor(q, n, 1, -1);
        case FormGroup::Sp: {
            need_even();
            const unsigned long m = n / 2;
            return ipow(q, m * m) * product_factor(q, m, 2, 1);
        }
        case FormGroup::O_plus: need_even(); return orthogonal_even(1, n, q);
        case FormGroup::O_minus:
            need_even();
            if (n == 0) throw SpecError("O^-_0 is undefined");
            return orthogonal_even(-1, n, q);
        case FormGroup::O_odd: {
            if (n == 1) return 2;
            need_odd();
            const unsigned long m = n / 2;
            return 2 * ipow(q, m * m) * product_factor(q, m, 2, 1);
        }
        case FormGroup::SO_plus: need_even(); return orthogonal_even(1, n, q) / two_q;
        case FormGroup::SO_minus: need_even(); return orthogonal_even(-1, n, q) / two_q;
        case FormGroup::SO_odd: return form_group_order(FormGroup::O_odd, n, q) / 2;
        case FormGroup::Omega_plus: need_even(); return orthogonal_even(1, n, q) / (2 * two_q);
        case FormGroup::Omega_minus: need_even(); return orthogonal_even(-1, n, q) / (2 * two_q);
        case FormGroup::Omega_odd: return form_group_order(FormGroup::O_odd, n, q) / 4;
    }
    return 0;
}

ExactInt simple_order(const GroupSpec& s) {
    if (s.n < 3 && s.family != Family::linear) throw SpecError("degenerate classical group " + s.name());
    if (s.family == Family::linear && s.n == 2 && s.q < 4) throw SpecError(s.name() + " is not simple");
    if (s.family == Family::unitary && s.n == 3 && s.q == 2) throw SpecError(s.name() + " is not simple");
    if (s.family == Family::symplectic && s.n == 4 && s.q == 2) throw SpecError(s.name() + " is not simple");
    switch (s.family) {
        case Family::linear:
            return form_group_order(FormGroup::GL, s.n, s.q) / ((s.q - 1) * gcd(ExactInt(s.n), s.q - 1));
        case Family::unitary:
            return form_group_order(FormGroup::GU, s.n, s.q) / ((s.q + 1) * gcd(ExactInt(s.n), s.q + 1));
        case Family::symplectic:
            return form_group_order(FormGroup::Sp, s.n, s.q) / (s.q_odd() ? 2 : 1);
        case Family::orthogonal_plus:
        case Family::orthogonal_minus: {
            if (s.n < 8) throw SpecError("even orthogonal groups below dimension 8 are treated as other types");
            const auto kind = s.family == Family::orthogonal_plus ? FormGroup::Omega_plus : FormGroup::Omega_minus;
            return form_group_order(kind, s.n, s.q) / center_constants(s).z_eps;
        }
        case Family::orthogonal_odd:
            return form_group_order(FormGroup::Omega_odd, s.n, s.q);
    }
    return 0;
}

unsigned long table1_e(const GroupSpec& s) {
    switch (s.family) {
        case Family::linear:
        case Family::symplectic:
        case Family::orthogonal_minus: return s.n;
        case Family::orthogonal_plus: return s.n - 2;
        case Family::orthogonal_odd: return s.n - 1;
        case Family::unitary: return s.n % 2 == 1 ? 2 * s.n : 2 * s.n - 2;
    }
    return 0;
}

CenterConstants center_constants(int eps, unsigned long n, const ExactInt& q) {
    if (n % 2 != 0 || eps == 0) throw SpecError("center constants need an even-dimensional orthogonal form");
    if (q % 2 == 0) return {1, 1};
    ExactInt r = ipow(q, n / 2) % 4;
    const bool minus_one_in_omega = (eps > 0) ? r == 1 : r == 3;
    return minus_one_in_omega ? CenterConstants{2, 2} : CenterConstants{1, 1};
}

CenterConstants center_constants(const GroupSpec& s) {
    if (s.family != Family::orthogonal_plus && s.family != Family::orthogonal_minus)
        throw SpecError("center constants are defined for even orthogonal groups only");
    return center_constants(s.eps(), s.n, s.q);
}

ExactInt similarity_index(const GroupSpec& s) {
    const ExactInt two_q = s.q_odd() ? 2 : 1;
    switch (s.family) {
        case Family::linear: return gcd(ExactInt(s.n), s.q - 1);
        case Family::unitary: return gcd(ExactInt(s.n), s.q + 1);
        case Family::symplectic: return two_q;
        case Family::orthogonal_plus:
        case Family::orthogonal_minus: return center_constants(s).a_eps * two_q * two_q;
        case Family::orthogonal_odd: return 2;
    }
    return 1;
}

bool PrimitivePrimeWitness::verify() const {
    if (e == 0 || !is_prime(r) || q % r == 0) return false;
    if ((ipow(q, e) - 1) % r != 0) return false;
    return ord == e && mult_order(q, r) == e && r % e == 1;
}

PrimitivePrimeWitness select_r(const GroupSpec& s) {
    if (!s.in_theorem_scope()) throw SpecError(s.name() + " is outside the n >= 8 scope of the (2,r) bound");
    PrimitivePrimeWitness w;
    w.q = s.q;
    w.e = table1_e(s);
    auto r = smallest_primitive_prime(s.q, w.e);
    if (!r) throw SpecError("no primitive prime divisor of " + s.q.get_str() + "^" + std::to_string(w.e) + " - 1");
    w.r = *r;
    w.ord = mult_order(s.q, w.r);
    return w;
}

}  // namespace gencert
