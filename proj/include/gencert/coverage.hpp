#pragma once

// Which step of the reduction covers a named finite simple group: a static
// lookup with no computation beyond select_r.

#include "gencert/grouporders.hpp"

#include <optional>
#include <string>

namespace gencert {

enum class CoverageCase {
    table2,       // (2,3)-generated small classical group
    table3,       // small classical group, (2,p) with p in {5,7}
    lemma24,      // PSp_4(2^a), a > 1, and PSp_4(3^a): (2,5)
    theorem2,     // n >= 8: (2,r) with r a primitive prime divisor of q^e - 1
    alternating,
    sporadic,
    suzuki,
    exceptional,
};

std::string_view coverage_key(CoverageCase c);

struct CoverageRecord {
    std::string input;
    std::string canonical;          // e.g. "PSp4(9)", or the isomorphic classical name
    CoverageCase coverage = CoverageCase::table2;
    std::optional<ExactInt> prime;  // p of the (2,p) pair; r for theorem2
    std::optional<unsigned long> e; // theorem2 only
    std::optional<GroupSpec> spec;  // classical groups
    std::string reason;
};

/// Accepts PSL3(4), PSU8(2), PSp4(9), POmega+8(2), POmega-10(3), POmega7(3),
/// A7 or Alt(7), Sz(8) or 2B2(8), exceptional names such as G2(3), E8(2),
/// 3D4(2), 2F4(8), and the 26 sporadic names (M11, J1, Co1, BM, M, ...).
/// Throws SpecError for unknown or non-simple names.
CoverageRecord classify(const std::string& name);

}  // namespace gencert
