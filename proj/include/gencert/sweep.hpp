#pragma once

// Grid sweeps with the embedded threshold table: which specs the generic
// bound must certify, and which are routed to the small-dimension recipe.

#include "gencert/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gencert {

enum class Expectation {
    must_certify,  // n at or above the family threshold, not in the small-dimension list
    small_n,       // small-dimension list: certify or report as deferred
};

enum class PointStatus { certified, inconclusive, deferred, failed, error };

std::string_view point_status_key(PointStatus s);

/// Smallest n from which the generic evaluator is expected to certify every q.
unsigned long generic_threshold(Family f);

/// Expectation for a spec in the n >= 8 scope.
Expectation expectation_for(const GroupSpec& spec);

struct SweepJob {
    Family family = Family::linear;
    unsigned long n_min = 0, n_max = 0;
    std::vector<ExactInt> qs;
    bool use_small_n = true;      // route the small-dimension list to q2_bound_small_n
    bool table5_denominator = false;
    bool drop_sigma0_if_infeasible = true;
    unsigned threads = 1;
};

struct SweepPoint {
    GroupSpec spec;
    Expectation expectation = Expectation::must_certify;
    std::optional<BoundReport> report;
    PointStatus status = PointStatus::error;
    std::string message;  // error text for skipped points
};

/// Parses "a..b" or "a" into an inclusive range. Throws SpecError.
std::pair<unsigned long, unsigned long> parse_range(const std::string& text);

/// Parses "2,3,4", "2..25" or a mix into sorted distinct prime powers.
/// Throws SpecError on malformed input or non prime powers.
std::vector<ExactInt> parse_q_list(const std::string& text);

/// Evaluates every (n, q) with a valid spec in the family. Points that fail
/// parity are omitted; points outside scope are kept with status error.
/// The result is sorted by (n, q) whatever the thread count.
std::vector<SweepPoint> run_sweep(const SweepJob& job);

/// Evaluates one spec with the routing and status rules used by run_sweep.
SweepPoint evaluate_point(const GroupSpec& spec, const SweepJob& job);

}  // namespace gencert
