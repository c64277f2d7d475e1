#pragma once

// Maximal subgroups that can contain an element of order r: geometric rows
// with class counts, involution caps and normalizer floors; S-class socles
// with class caps; and the normalizer orders |N_G(<x>)|.

#include "gencert/grouporders.hpp"
#include "gencert/involutions.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gencert {

/// One geometric maximal subgroup type instantiated for a spec.
struct SubgroupCandidate {
    unsigned aschbacher_class = 1;  // 1..8
    std::string type;                // e.g. "GL_4(q^2).2"
    std::vector<std::pair<std::string, long>> params;  // t, k, ...
    std::string condition;           // the row condition that held
    ExactInt c_M;                    // classes of this type (maximum of "1 or 2")
    ExactInt i2_upper;               // value used by the evaluator
    ExactInt i2_table;               // value printed in the source row
    bool normalizer_is_full = false; // N_M = |N_G(<x>)|
    ExactRat normalizer_lower;       // N_M

    /// Root-datum reconstruction: multiplier * aut_i2_upper(datum, field).
    std::optional<RootSystemDatum> aut_datum;
    ExactInt aut_field;
    ExactRat aut_multiplier = 1;
};

enum class SocleKind { lie_cross_char, alternating, aggregate, other };

/// One S-class socle (or the aggregate cap) with a class cap.
struct SocleCandidate {
    std::string socle;
    std::string condition;
    SocleKind kind = SocleKind::other;
    ExactInt cap;       // number of G-classes, e_G already folded in
    ExactInt i2_upper;  // 0 when not supplied by the row
};

/// |N_G(<x>)| for x of order r = select_r(spec).
ExactInt normalizer_order(const GroupSpec& spec);

/// Geometric rows whose conditions hold for (spec, r).
std::vector<SubgroupCandidate> geometric_candidates(const GroupSpec& spec, const PrimitivePrimeWitness& w);

/// Aggregate cap C_S on S-class subgroups with non-alternating socle.
/// Throws SpecError when the dimension is below the row's range.
ExactInt sclass_cap(const GroupSpec& spec);

struct SclassFeasibility {
    bool feasible = false;
    std::vector<SocleCandidate> rows;
};

/// Cross-characteristic socles whose arithmetic conditions hold for r.
SclassFeasibility sclass_feasible(const GroupSpec& spec, const PrimitivePrimeWitness& w);

/// Membership in the small-dimension list handled case by case.
bool in_dagger_list(const GroupSpec& spec);

/// Explicit S-class rows for a spec in the small-dimension list.
/// Throws SpecError for specs outside the list.
std::vector<SocleCandidate> small_n_sclass(const GroupSpec& spec, const PrimitivePrimeWitness& w);

/// Classes of subgroups with socle A_{n+1} or A_{n+2}: 0 for linear and
/// unitary groups, e_G otherwise.
ExactInt alternating_socle_classes(const GroupSpec& spec);

}  // namespace gencert
