#include "gencert/involutions.hpp"

namespace gencert {

unsigned long RootSystemDatum::dim() const {
    const unsigned long m = rank;
    switch (type) {
        case RootType::A: return (m + 1) * (m + 1) - 1;
        case RootType::B:
        case RootType::C: return 2 * m * m + m;
        case RootType::D: return 2 * m * m - m;
        case RootType::G2: return 14;
    }
    return 0;
}

unsigned long RootSystemDatum::positive_roots() const {
    const unsigned long m = rank;
    switch (type) {
        case RootType::A: return m * (m + 1) / 2;
        case RootType::B:
        case RootType::C: return m * m;
        case RootType::D: return m * m - m;
        case RootType::G2: return 6;
    }
    return 0;
}

std::string RootSystemDatum::label() const {
    switch (type) {
        case RootType::A: return "A" + std::to_string(rank);
        case RootType::B: return "B" + std::to_string(rank);
        case RootType::C: return "C" + std::to_string(rank);
        case RootType::D: return "D" + std::to_string(rank);
        case RootType::G2: return "G2";
    }
    return "?";
}

ExactInt aut_i2_upper(const RootSystemDatum& datum, const ExactInt& q) {
    const unsigned long n2 = datum.n2();
    return 2 * (ipow(q, n2) + ipow(q, n2 - 1));
}

ExactRat i2_lower_bound_exact(const GroupSpec& s) {
    const unsigned long n = s.n;
    switch (s.family) {
        case Family::linear:
        case Family::unitary: return make_rat(ipow(s.q, n * n / 2), 8);
        case Family::symplectic: return make_rat(ipow(s.q, n * n / 4 + n / 2), 2);
        case Family::orthogonal_plus:
        case Family::orthogonal_minus: return make_rat(ipow(s.q, n * n / 4 - 1), 8);
        case Family::orthogonal_odd: return make_rat(ipow(s.q, (n * n - 1) / 4), 2);
    }
    return 0;
}

ExactInt i2_lower_bound(const GroupSpec& s) { return ceil_rat(i2_lower_bound_exact(s)); }

namespace {

std::string group_label(std::string_view head, unsigned long n, const ExactInt& q) {
    return std::string(head) + "_" + std::to_string(n) + "(" + q.get_str() + ")";
}

ExactInt gl_eps(int eps, unsigned long n, const ExactInt& q) {
    return form_group_order(eps > 0 ? FormGroup::GL : FormGroup::GU, n, q);
}

ExactInt o_eps(int eps, unsigned long n, const ExactInt& q) {
    return form_group_order(eps > 0 ? FormGroup::O_plus : FormGroup::O_minus, n, q);
}

// The centralizer order is an upper bound that need not divide the ambient
// order, so the quotient is floored.
InvolutionClassRecord finish(InvolutionClassRecord rec) {
    rec.class_size_lower = rec.ambient_order * rec.omega_index / rec.centralizer_order;
    return rec;
}

InvolutionClassRecord linear_eps_row(const GroupSpec& s) {
    const int eps = s.eps();
    const unsigned long n = s.n;
    const ExactInt& q = s.q;
    const std::string gl = eps > 0 ? "GL" : "GU";
    InvolutionClassRecord r;
    r.ambient = group_label(gl, n, q);
    r.ambient_order = gl_eps(eps, n, q);
    if (n % 2 == 0) {
        const unsigned long h = n / 2;
        if (s.q_even()) {
            r.label = "j_" + std::to_string(h);
            r.centralizer = "[q^" + std::to_string(n * n / 4) + "]." + group_label(gl, h, q);
            r.centralizer_order = ipow(q, n * n / 4) * gl_eps(eps, h, q);
        } else if ((eps > 0 && q % 4 == 1) || (eps < 0 && q % 4 == 3)) {
            r.label = "s";
            r.centralizer = group_label(gl, h, q) + "^2.2";
            r.centralizer_order = 2 * gl_eps(eps, h, q) * gl_eps(eps, h, q);
        } else {
            r.label = "t";
            r.centralizer = group_label("GL", h, ExactInt(q * q)) + ".2";
            r.centralizer_order = 2 * form_group_order(FormGroup::GL, h, q * q);
        }
    } else {
        const unsigned long h = (n - 1) / 2;
        if (s.q_even()) {
            r.label = "j_" + std::to_string(h);
            const unsigned long k = (n * n + 2 * n - 7) / 4;
            r.centralizer = "[q^" + std::to_string(k) + "].(" + group_label(gl, h, q) + " x " + group_label(gl, 1, q) + ")";
            r.centralizer_order = ipow(q, k) * gl_eps(eps, h, q) * gl_eps(eps, 1, q);
        } else {
            r.label = std::string((h + 1) % 2 == 0 ? "" : "-") + "u_" + std::to_string(h);
            r.centralizer = group_label(gl, h, q) + " x " + group_label(gl, h + 1, q);
            r.centralizer_order = gl_eps(eps, h, q) * gl_eps(eps, h + 1, q);
        }
    }
    return finish(r);
}

InvolutionClassRecord symplectic_row(const GroupSpec& s) {
    const unsigned long n = s.n;
    const ExactInt& q = s.q;
    if (n < 4) throw SpecError("no involution class row for " + s.name());
    InvolutionClassRecord r;
    r.ambient = group_label("Sp", n, q);
    r.ambient_order = form_group_order(FormGroup::Sp, n, q);
    const unsigned long h = n / 2;
    if (s.q_even()) {
        if (h % 2 == 0) {
            r.label = "c_" + std::to_string(h);
            const unsigned long k = (n * n / 4 + 3 * n / 2 - 2) / 2;
            r.centralizer = "[q^" + std::to_string(k) + "]." + group_label("Sp", h - 2, q);
            r.centralizer_order = ipow(q, k) * form_group_order(FormGroup::Sp, h - 2, q);
        } else {
            r.label = "b_" + std::to_string(h);
            const unsigned long k = h * (h + 1) / 2;
            r.centralizer = "[q^" + std::to_string(k) + "]." + group_label("Sp", h - 1, q);
            r.centralizer_order = ipow(q, k) * form_group_order(FormGroup::Sp, h - 1, q);
        }
    } else if (q % 4 == 1) {
        r.label = "s";
        r.centralizer = group_label("GL", h, q) + ".2";
        r.centralizer_order = 2 * form_group_order(FormGroup::GL, h, q);
    } else {
        r.label = "t";
        r.centralizer = group_label("GU", h, q) + ".2";
        r.centralizer_order = 2 * form_group_order(FormGroup::GU, h, q);
    }
    return finish(r);
}

// Shared shape of the characteristic-2 rows for both even orthogonal types.
bool orthogonal_even_char2(unsigned long n, const ExactInt& q, InvolutionClassRecord& r) {
    const unsigned long h = n / 2;
    if (h % 2 == 0) {
        r.label = "c_" + std::to_string(h);
        const unsigned long k = (n * n / 4 + n / 2 - 2) / 2;
        r.centralizer = "[q^" + std::to_string(k) + "]." + group_label("Sp", h - 2, q);
        r.centralizer_order = ipow(q, k) * form_group_order(FormGroup::Sp, h - 2, q);
    } else {
        r.label = "c_" + std::to_string(h - 1);
        const unsigned long k = (n * n / 4 + 3 * n / 2 - 10) / 2;
        r.centralizer = "[q^" + std::to_string(k) + "].(" + group_label("Sp", h - 3, q) + " x Sp_2(" + q.get_str() + "))";
        r.centralizer_order = ipow(q, k) * form_group_order(FormGroup::Sp, h - 3, q) * form_group_order(FormGroup::Sp, 2, q);
    }
    r.intersection_dropped = true;
    return true;
}

InvolutionClassRecord orthogonal_plus_row(const GroupSpec& s) {
    const unsigned long n = s.n;
    const ExactInt& q = s.q;
    if (n < 8) throw SpecError("no involution class row for " + s.name());
    InvolutionClassRecord r;
    r.ambient = group_label("Omega+", n, q);
    r.ambient_order = form_group_order(FormGroup::Omega_plus, n, q);
    const unsigned long h = n / 2;
    if (s.q_even()) {
        orthogonal_even_char2(n, q, r);
    } else if (h % 2 == 0) {
        const int eps = ipow(q, n / 4) % 4 == 1 ? 1 : -1;
        r.label = "u_" + std::to_string(h);
        r.centralizer = std::string("O") + (eps > 0 ? "+" : "-") + "_" + std::to_string(h) + "(" + q.get_str() + ")^2.2";
        r.centralizer_order = 2 * o_eps(eps, h, q) * o_eps(eps, h, q);
        r.omega_index = 4;
    } else {
        r.label = "u_" + std::to_string(h - 1);
        r.centralizer = group_label("O+", h - 1, q) + " x " + group_label("O+", h + 1, q);
        r.centralizer_order = o_eps(1, h - 1, q) * o_eps(1, h + 1, q);
        r.omega_index = 4;
    }
    return finish(r);
}

InvolutionClassRecord orthogonal_minus_row(const GroupSpec& s) {
    const unsigned long n = s.n;
    const ExactInt& q = s.q;
    if (n < 8) throw SpecError("no involution class row for " + s.name());
    InvolutionClassRecord r;
    r.ambient = group_label("Omega-", n, q);
    r.ambient_order = form_group_order(FormGroup::Omega_minus, n, q);
    const unsigned long h = n / 2;
    if (s.q_even()) {
        orthogonal_even_char2(n, q, r);
    } else if (h % 2 == 0) {
        r.label = "u_" + std::to_string(h);
        r.centralizer = "(" + group_label("O+", h, q) + " x " + group_label("O-", h, q) + ").2";
        r.centralizer_order = 2 * o_eps(1, h, q) * o_eps(-1, h, q);
        r.omega_index = 4;
    } else {
        // q^{(n-2)/4} = eps (mod 4) selects u_{n/2 - eps}.
        const int eps = ipow(q, (n - 2) / 4) % 4 == 1 ? 1 : -1;
        r.label = "u_" + std::to_string(eps > 0 ? h - 1 : h + 1);
        r.centralizer = std::string("O") + (eps > 0 ? "+" : "-") + "_" + std::to_string(h - 1) + "(" + q.get_str() +
                        ") x O" + (eps > 0 ? "-" : "+") + "_" + std::to_string(h + 1) + "(" + q.get_str() + ")";
        r.centralizer_order = o_eps(eps, h - 1, q) * o_eps(-eps, h + 1, q);
        r.omega_index = 4;
    }
    return finish(r);
}

InvolutionClassRecord orthogonal_odd_row(const GroupSpec& s) {
    const unsigned long n = s.n;
    const ExactInt& q = s.q;
    if (n < 7) throw SpecError("no involution class row for " + s.name());
    InvolutionClassRecord r;
    r.ambient = group_label("Omega", n, q);
    r.ambient_order = form_group_order(FormGroup::Omega_odd, n, q);
    const unsigned long k = (n + 1) / 4;
    const int eps = ipow(q, k) % 4 == 1 ? 1 : -1;
    const unsigned long h = (n - 1) / 2;
    r.label = std::string((h + 1) % 2 == 0 ? "" : "-") + "u_" + std::to_string(h);
    r.centralizer = std::string("O") + (eps > 0 ? "+" : "-") + "_" + std::to_string(2 * k) + "(" + q.get_str() + ") x " +
                    group_label("O", n - 2 * k, q);
    r.centralizer_order = o_eps(eps, 2 * k, q) * form_group_order(FormGroup::O_odd, n - 2 * k, q);
    r.omega_index = 4;
    return finish(r);
}

}  // namespace

InvolutionClassRecord involution_class_size_lower(const GroupSpec& s) {
    switch (s.family) {
        case Family::linear:
        case Family::unitary: return linear_eps_row(s);
        case Family::symplectic: return symplectic_row(s);
        case Family::orthogonal_plus: return orthogonal_plus_row(s);
        case Family::orthogonal_minus: return orthogonal_minus_row(s);
        case Family::orthogonal_odd: return orthogonal_odd_row(s);
    }
    throw SpecError("no involution class row for " + s.name());
}

ExactInt sym_involutions_plus1(unsigned long n) {
    if (n == 0) return 1;
    ExactInt total = 0;
    ExactInt nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        ExactInt kf, rest;
        mpz_fac_ui(kf.get_mpz_t(), k);
        mpz_fac_ui(rest.get_mpz_t(), n - 2 * k);
        total += nfact / (ipow(2, k) * kf * rest);
    }
    return total;
}

Psp4Counts psp4_counts(const ExactInt& q) {
    auto a = exact_log2(q);
    if (!a || *a < 2) throw DomainError("psp4_counts requires q = 2^a with a >= 2");
    Psp4Counts out;
    out.q = q;
    out.a = *a;
    const ExactInt q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
    out.i2_group = (q2 + 1) * (q4 - 1);
    out.i5_group_lower = q3 * (q - 1) * (q2 + 1) * (q2 - q + 4);

    auto& rows = out.rows;
    rows.push_back({"[q^3]:GL_2(q)", 2, ExactRat((q + 1) * (q2 + 1)), (q - 1) * (q3 + 2 * q2 + q + 1),
                    2 * q3 * (q + 1) * (2 * q + 5)});
    rows.push_back({"Sp_2(q) wr S_2", 1, make_rat(q2 * (q2 + 1), 2), q4 + q3 - q - 1,
                    4 * q * (q3 + 2 * q2 + 2 * q + 1)});
    rows.push_back({"Sp_2(q^2).2", 1, make_rat(q2 * (q2 - 1), 2), 2 * q2 * (q2 + 1), 2 * q2 * (q2 + 1)});
    {
        // Sp_4(q^{1/t}); the term grows with the subfield, so the smallest
        // prime t | a dominates every subfield class.
        const unsigned long t = *prime_divisors(*a).begin();
        const ExactInt s = ipow(2, *a / t);
        const ExactInt s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
        Psp4SubgroupRow row{"Sp_4(q^(1/" + std::to_string(t) + "))", ExactInt(*a),
                            make_rat(q4 * (q2 - 1) * (q4 - 1), s4 * (s2 - 1) * (s4 - 1)), (s2 + 1) * (s4 - 1),
                            s3 * (s + 1) * (s2 + 1) * (s2 + s + 4)};
        row.subfield_degree = t;
        rows.push_back(row);
    }
    rows.push_back({"SO^+_4(q)", 1, make_rat(q2 * (q2 + 1), 2), q4 + q3 - q - 1, 4 * q * (q3 + 2 * q2 + 2 * q + 1)});
    rows.push_back({"SO^-_4(q)", 1, make_rat(q2 * (q2 - 1), 2), 2 * q2 * (q2 + 1), 2 * q2 * (q2 + 1)});
    {
        // Sz(q) exists only for q = 2^{odd}; then sqrt(2q) is an integer.
        Psp4SubgroupRow row{"Sz(q)", 1, ExactRat(q2 * (q + 1) * (q2 - 1)), (q - 1) * (q2 + 1), 0};
        if (*a % 2 == 1) {
            ExactInt root;
            ExactInt twoq = 2 * q;
            mpz_sqrt(root.get_mpz_t(), twoq.get_mpz_t());
            row.i5_upper = q2 * (q + root + 1) * (q - 1);
        } else {
            row.present = false;
        }
        rows.push_back(row);
    }
    return out;
}

}  // namespace gencert
