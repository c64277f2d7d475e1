#include "gencert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace gencert {

std::string_view point_status_key(PointStatus s) {
    switch (s) {
        case PointStatus::certified: return "certified";
        case PointStatus::inconclusive: return "inconclusive";
        case PointStatus::deferred: return "paper-deferred";
        case PointStatus::failed: return "FAILED";
        case PointStatus::error: return "error";
    }
    return "?";
}

unsigned long generic_threshold(Family f) {
    switch (f) {
        case Family::linear: return 9;
        case Family::unitary: return 8;
        case Family::symplectic: return 12;
        case Family::orthogonal_plus:
        case Family::orthogonal_minus: return 14;
        case Family::orthogonal_odd: return 13;
    }
    return 0;
}

Expectation expectation_for(const GroupSpec& s) {
    return in_dagger_list(s) ? Expectation::small_n : Expectation::must_certify;
}

namespace {

unsigned long parse_ulong(const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw SpecError("malformed number '" + t + "'");
    }
    return std::stoul(t);
}

}  // namespace

std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned long v = parse_ulong(text);
        return {v, v};
    }
    const unsigned long a = parse_ulong(text.substr(0, dots));
    const unsigned long b = parse_ulong(text.substr(dots + 2));
    if (a > b) throw SpecError("empty range '" + text + "'");
    return {a, b};
}

std::vector<ExactInt> parse_q_list(const std::string& text) {
    std::vector<ExactInt> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const bool is_range = item.find("..") != std::string::npos;
        const auto [a, b] = parse_range(item);
        for (unsigned long q = a; q <= b; ++q) {
            const bool pp = as_prime_power(ExactInt(q)).has_value();
            if (pp) out.emplace_back(q);
            else if (!is_range) throw SpecError("q = " + std::to_string(q) + " is not a prime power");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw SpecError("no prime powers in '" + text + "'");
    return out;
}

SweepPoint evaluate_point(const GroupSpec& spec, const SweepJob& job) {
    SweepPoint pt;
    pt.spec = spec;
    if (!spec.in_theorem_scope()) {
        pt.message = spec.name() + " is outside the n >= 8 scope";
        return pt;
    }
    pt.expectation = expectation_for(spec);
    BoundOptions opt;
    opt.drop_sigma0_if_infeasible = job.drop_sigma0_if_infeasible;
    opt.denominator = job.table5_denominator ? Denominator::table5 : Denominator::table4;
    try {
        const bool small = job.use_small_n && pt.expectation == Expectation::small_n;
        pt.report = small ? q2_bound_small_n(spec, opt) : q2_bound(spec, opt);
    } catch (const DomainError& e) {
        pt.message = e.what();
        return pt;
    }
    if (pt.report->verdict == Verdict::certified) pt.status = PointStatus::certified;
    else if (pt.expectation == Expectation::small_n) pt.status = PointStatus::deferred;
    else pt.status = PointStatus::failed;
    return pt;
}

std::vector<SweepPoint> run_sweep(const SweepJob& job) {
    std::vector<GroupSpec> specs;
    for (unsigned long n = job.n_min; n <= job.n_max; ++n) {
        for (const auto& q : job.qs) {
            try {
                specs.push_back(GroupSpec::make(job.family, n, q));
            } catch (const SpecError&) {
                // parity or characteristic does not fit the family
            }
        }
    }
    std::vector<SweepPoint> out(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) out[i] = evaluate_point(specs[i], job);
    };
    const unsigned threads = std::max(1u, job.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::stable_sort(out.begin(), out.end(), [](const SweepPoint& x, const SweepPoint& y) {
        return x.spec.n != y.spec.n ? x.spec.n < y.spec.n : x.spec.q < y.spec.q;
    });
    return out;
}

}  // namespace gencert
