#pragma once

// Involution counts and bounds: lower bounds for i_2(G), explicit class
// sizes, the root-datum bound on i_2(Aut G), symmetric-group involutions and
// the 4-dimensional symplectic data in characteristic 2.

#include "gencert/grouporders.hpp"

#include <string>
#include <vector>

namespace gencert {

enum class RootType { A, B, C, D, G2 };

/// Root system datum of a simple algebraic group: rank, dim Y, number N of
/// positive roots and N2 = dim Y - N.
struct RootSystemDatum {
    RootType type = RootType::A;
    unsigned long rank = 1;

    static RootSystemDatum A(unsigned long rank) { return {RootType::A, rank}; }
    static RootSystemDatum B(unsigned long rank) { return {RootType::B, rank}; }
    static RootSystemDatum C(unsigned long rank) { return {RootType::C, rank}; }
    static RootSystemDatum D(unsigned long rank) { return {RootType::D, rank}; }
    static RootSystemDatum G2() { return {RootType::G2, 2}; }

    unsigned long dim() const;
    unsigned long positive_roots() const;
    unsigned long n2() const { return dim() - positive_roots(); }
    std::string label() const;
};

/// Upper bound 2(q^{N2} + q^{N2-1}) on i_2(Aut G) for G of the given type
/// over F_q (twisted types use the same datum).
ExactInt aut_i2_upper(const RootSystemDatum& datum, const ExactInt& q);

/// Lower bound for i_2(G) from the per-family closed forms, as an exact
/// rational (q^k/8 or q^k/2).
ExactRat i2_lower_bound_exact(const GroupSpec& spec);
/// Smallest integer >= i2_lower_bound_exact; still a valid lower bound since
/// i_2(G) is an integer.
ExactInt i2_lower_bound(const GroupSpec& spec);

/// One explicit involution class: its label and the lower bound
/// |ambient| / |centralizer upper bound| for its size.
struct InvolutionClassRecord {
    std::string label;
    std::string ambient;      // e.g. "GL_8(2)"
    std::string centralizer;  // structure of the centralizer bound
    ExactInt ambient_order;
    ExactInt centralizer_order;
    ExactInt class_size_lower;
    /// For q odd, (O_a(q) x O_b(q)) cap Omega_n(q) has index 4 in O_a x O_b
    /// (determinant and spinor norm are both onto), so |centralizer| is
    /// divided by 4. Characteristic-2 "cap Omega" rows keep the full group.
    unsigned omega_index = 1;
    bool intersection_dropped = false;
};

/// The involution class used for the given spec. Throws SpecError when no
/// row applies.
InvolutionClassRecord involution_class_size_lower(const GroupSpec& spec);

/// i_2(S_n) + 1 = sum_k n!/(2^k k! (n-2k)!).
ExactInt sym_involutions_plus1(unsigned long n);

/// Involution and order-5 data for one maximal subgroup type of PSp_4(q),
/// q = 2^a.
struct Psp4SubgroupRow {
    std::string type;
    ExactInt classes;      // number of G-classes (upper bound for the subfield row)
    ExactRat index;        // |G:M|
    ExactInt i2;           // i_2(M) or an upper bound for it
    ExactInt i5_upper;     // upper bound for i_5(M)
    bool present = true;   // Sz(q) needs a odd; the subfield row needs a composite
    unsigned long subfield_degree = 0;  // prime t for Sp_4(q^{1/t})
};

struct Psp4Counts {
    ExactInt q;
    unsigned long a = 0;
    ExactInt i2_group;        // exact i_2(G)
    ExactInt i5_group_lower;  // lower bound for i_5(G)
    std::vector<Psp4SubgroupRow> rows;
};

/// Requires q = 2^a with a >= 2.
Psp4Counts psp4_counts(const ExactInt& q);

}  // namespace gencert
