#pragma once

// Classical group families, order formulas and the structural constants used
// by the bound evaluator.

#include "gencert/exactnum.hpp"

#include <string>
#include <string_view>

namespace gencert {

enum class Family {
    linear,            // PSL_n(q)
    unitary,           // PSU_n(q), natural module over F_{q^2}
    symplectic,        // PSp_n(q)
    orthogonal_plus,   // POmega^+_n(q)
    orthogonal_minus,  // POmega^-_n(q)
    orthogonal_odd,    // POmega_n(q), nq odd
};

/// CLI names: psl, psu, psp, omega+, omega-, omega-odd.
std::string_view family_key(Family f);
Family parse_family(std::string_view key);

/// A simple classical group instance. Construct through make(), which
/// validates the prime-power and parity constraints.
struct GroupSpec {
    Family family = Family::linear;
    unsigned long n = 0;
    ExactInt q;
    ExactInt p;
    unsigned long a = 0;

    static GroupSpec make(Family family, unsigned long n, const ExactInt& q);

    /// +1 / -1 for the linear/unitary pair and the two even orthogonal types, 0 otherwise.
    int eps() const;
    /// 2 for unitary groups, 1 otherwise.
    unsigned delta() const { return family == Family::unitary ? 2 : 1; }
    bool q_even() const { return p == 2; }
    bool q_odd() const { return p != 2; }

    /// n >= 8 and not POmega^+_8(2).
    bool in_theorem_scope() const;

    /// e.g. "PSp12(2)", "POmega+14(2)".
    std::string name() const;

    friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
        return x.family == y.family && x.n == y.n && x.q == y.q;
    }
};

/// Thrown when a GroupSpec is malformed or outside the scope of an operation.
class SpecError : public DomainError {
public:
    using DomainError::DomainError;
};

enum class FormGroup {
    GL, GU, Sp,
    O_plus, O_minus, O_odd,
    SO_plus, SO_minus, SO_odd,
    Omega_plus, Omega_minus, Omega_odd,
};

/// Exact order of a classical matrix group of dimension n over F_q
/// (over F_{q^2} for GU). Dimension 0 gives 1.
ExactInt form_group_order(FormGroup kind, unsigned long n, const ExactInt& q);

/// Order of the simple group named by the spec.
ExactInt simple_order(const GroupSpec& spec);

/// Exponent e of the primitive prime divisor used for the generation bound.
unsigned long table1_e(const GroupSpec& spec);

struct CenterConstants {
    unsigned a_eps = 1;  // |PSO : POmega|
    unsigned z_eps = 1;  // |Z(Omega)|
};

/// a_eps = z_eps = 2 iff q odd and q^{n/2} = eps (mod 4).
CenterConstants center_constants(const GroupSpec& spec);
/// Same rule for an explicitly given even-dimensional orthogonal form.
CenterConstants center_constants(int eps, unsigned long n, const ExactInt& q);

/// Index e_G of G in its projective similarity group.
ExactInt similarity_index(const GroupSpec& spec);

/// A primitive prime divisor r of q^e - 1 with its check data.
struct PrimitivePrimeWitness {
    ExactInt q;
    unsigned long e = 0;
    ExactInt r;
    ExactInt ord;  // multiplicative order of q mod r; equals e

    /// Re-checks r prime, r | q^e - 1, ord = e and r = 1 (mod e).
    bool verify() const;
};

/// The smallest primitive prime divisor of q^e - 1 for e = table1_e(spec).
/// Throws SpecError outside the n >= 8 scope or when no such prime exists.
PrimitivePrimeWitness select_r(const GroupSpec& spec);

}  // namespace gencert
