#pragma once

// Exact Q-bounds: the fixed instances for PSL_3(4) and PSp_4(2^a), the
// per-spec sum over maximal overgroups of x, the closed forms for
// POmega^-_n(q), and the small-dimension refinements.

#include "gencert/catalog.hpp"
#include "gencert/surd.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gencert {

enum class Verdict { certified, inconclusive };

/// "certified" or "inconclusive"; inconclusive only means the bound is >= 1.
std::string_view verdict_key(Verdict v);

enum class Denominator { table4, table5 };

std::string_view denominator_key(Denominator d);

enum class TermSource { geometric, socle, socle_alternating, aggregate, alternating };

std::string_view term_source_key(TermSource s);

/// One summand c_M * (|N_G(<x>)| / N_M) * (I_2(M) / I_2(G)).
struct BoundTerm {
    unsigned sigma = 0;  // Aschbacher class index, 0 for S
    TermSource source = TermSource::geometric;
    std::string label;
    std::string condition;
    ExactInt classes;
    ExactRat count_factor;     // |N_G(<x>)| / N_M, or |N_G| / r, |N_G| / (r(r-1)/2)
    ExactInt i2_upper;
    ExactRat involution_ratio; // i2_upper / I_2(G)
    ExactRat contribution;
};

struct BoundOptions {
    /// Drop the aggregate S-class term when no cross-characteristic socle
    /// row is consistent with r (the n = 14, q = 2 refinement).
    bool drop_sigma0_if_infeasible = true;
    /// Use this prime instead of the smallest primitive prime divisor. It
    /// must itself be a primitive prime divisor of q^e - 1.
    std::optional<ExactInt> r_override;
    /// Denominator for the generic evaluator.
    Denominator denominator = Denominator::table4;
    /// Small-dimension path: retry with the explicit class size when the
    /// closed-form lower bound does not certify.
    bool table5_fallback = true;
};

struct BoundReport {
    GroupSpec spec;
    PrimitivePrimeWitness witness;
    std::string method;  // "generic" or "small-n"
    Denominator denominator = Denominator::table4;
    ExactInt i2_denominator;
    ExactInt normalizer;  // |N_G(<x>)|
    bool sigma0_dropped = false;
    std::vector<BoundTerm> terms;
    std::array<ExactRat, 9> sigma{};  // index 0 is Sigma_0
    ExactRat total;
    Verdict verdict = Verdict::inconclusive;
    /// Closed-form-denominator total when the small-n path fell back to the class size.
    std::optional<ExactRat> table4_total;
    std::vector<std::string> notes;
};

/// Witness for the spec, honouring options.r_override.
PrimitivePrimeWitness witness_for(const GroupSpec& spec, const BoundOptions& options = {});

/// Generic evaluator over the geometric rows, the aggregate S-class cap and the
/// alternating socles. Requires the theorem scope and the n range of the
/// aggregate cap.
BoundReport q2_bound(const GroupSpec& spec, const BoundOptions& options = {});

/// Small-dimension evaluator: refined C_2 count, explicit S-class socles and
/// the class-size denominator fallback. Requires in_dagger_list(spec).
BoundReport q2_bound_small_n(const GroupSpec& spec, const BoundOptions& options = {});

/// q2_bound_small_n for specs in the small-dimension list, q2_bound otherwise.
BoundReport q2_bound_auto(const GroupSpec& spec, const BoundOptions& options = {});

/// Displayed closed forms for POmega^-_n(q), n even >= 14. Half-integer
/// powers of q make these elements of Q(sqrt q).
QuadraticSurd closed_form_sigma3_omegaminus(unsigned long n, const ExactInt& q);
QuadraticSurd closed_form_sigma0_omegaminus(unsigned long n, const ExactInt& q);

/// PSL_3(4) with p = 7: 3 classes of PSL_2(7), index 120.
struct Psl34Data {
    ExactInt classes = 3, index = 120;
    ExactInt i2_m = 21, i2_g = 315, i7_m = 48, i7_g = 5760;
};
ExactRat q2p_bound_psl34(const Psl34Data& data = {});

struct Psp4Term {
    std::string type;
    ExactInt classes;
    ExactRat index;
    ExactInt i2;
    ExactInt i5;
    ExactRat contribution;  // classes * index * i2/i2(G) * i5/i5(G)
};

struct Psp4Bound {
    Psp4Counts counts;
    std::vector<Psp4Term> terms;
    ExactRat assembled;
    QuadraticSurd displayed;
    bool assembled_le_displayed = false;
    bool equal = false;
    Verdict verdict = Verdict::inconclusive;
};

/// Q_{2,5}(PSp_4(q)) for q = 2^a, a >= 2.
Psp4Bound q25_bound_psp4(const ExactInt& q);

}  // namespace gencert
