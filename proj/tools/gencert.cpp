// gencert: verify, sweep and classify from the command line.
//
// Exit codes: 0 certified (sweep: every expected point certified),
// 1 inconclusive (sweep: some expected point not certified), 2 input error.

#include "gencert/coverage.hpp"
#include "gencert/serialization.hpp"
#include "gencert/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gencert;

namespace {

constexpr int exit_certified = 0;
constexpr int exit_inconclusive = 1;
constexpr int exit_input = 2;

struct VerifyArgs {
    std::string family;
    unsigned long n = 0;
    std::string q;
    bool small_n = false;
    bool generic = false;
    bool lemma24 = false;
    bool no_sigma0_drop = false;
    bool table5 = false;
    bool timestamp = false;
    std::string r;
    std::string emit = "json";
    std::string out;
};

struct SweepArgs {
    std::string family;
    std::string n;
    std::string q;
    unsigned threads = 1;
    bool generic = false;
    bool no_sigma0_drop = false;
    bool table5 = false;
    std::string emit = "csv";
    std::string out;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw SpecError("cannot write " + path);
    f << text;
}

ExactInt parse_q(const std::string& text) {
    try {
        return ExactInt(text);
    } catch (const std::invalid_argument&) {
        throw SpecError("malformed q '" + text + "'");
    }
}

int run_lemma24(const VerifyArgs& a) {
    const ExactInt q = parse_q(a.q);
    const auto pp = as_prime_power(q);
    if (a.family != "psp" || a.n != 4 || !pp) throw SpecError("--lemma24 needs --family psp --n 4 and q = 2^a or 3^a");
    if (pp->p == 3) throw SpecError("q = 3^a: the (2,5) bound for PSp4(3^a) is not evaluated by this tool");
    if (pp->p != 2 || pp->a < 2) throw SpecError("--lemma24 needs q = 2^a with a >= 2");
    const Psp4Bound b = q25_bound_psp4(q);
    if (a.emit == "json") write_output(psp4_json(b).dump(2) + "\n", a.out);
    else if (a.emit == "text") write_output(psp4_text(b), a.out);
    else throw SpecError("--lemma24 supports --emit json|text");
    return b.verdict == Verdict::certified ? exit_certified : exit_inconclusive;
}

int run_verify(const VerifyArgs& a) {
    if (a.lemma24) return run_lemma24(a);
    const GroupSpec s = GroupSpec::make(parse_family(a.family), a.n, parse_q(a.q));
    if (!s.in_theorem_scope()) throw SpecError(s.name() + " is outside the n >= 8 scope of the (2,r) bound");
    if (a.small_n && a.generic) throw SpecError("--small-n and --generic are exclusive");
    BoundOptions opt;
    opt.drop_sigma0_if_infeasible = !a.no_sigma0_drop;
    opt.denominator = a.table5 ? Denominator::table5 : Denominator::table4;
    if (!a.r.empty()) opt.r_override = parse_q(a.r);
    BoundReport rep;
    if (a.small_n) rep = q2_bound_small_n(s, opt);
    else if (a.generic) rep = q2_bound(s, opt);
    else rep = q2_bound_auto(s, opt);

    if (a.emit == "json") {
        write_output(make_certificate(rep, a.timestamp ? utc_timestamp() : "").dump(2) + "\n", a.out);
    } else if (a.emit == "csv") {
        write_output(report_csv(rep), a.out);
    } else {
        write_output(report_text(rep), a.out);
    }
    return rep.verdict == Verdict::certified ? exit_certified : exit_inconclusive;
}

std::string sweep_csv(const std::vector<SweepPoint>& pts) {
    std::ostringstream out;
    out << "family,n,q,e,r,method,sigma0,sigma1,sigma2,sigma3,sigma4,sigma5,sigma6,sigma7,sigma8,total,total_approx,"
           "verdict,status\n";
    for (const auto& p : pts) {
        out << family_key(p.spec.family) << ',' << p.spec.n << ',' << p.spec.q << ',';
        if (!p.report) {
            out << ",,,,,,,,,,,,,,," << point_status_key(p.status) << '\n';
            continue;
        }
        const auto& r = *p.report;
        out << r.witness.e << ',' << r.witness.r << ',' << r.method;
        for (const auto& x : r.sigma) out << ',' << to_fraction_string(x);
        out << ',' << to_fraction_string(r.total) << ',' << to_decimal_string(r.total) << ',' << verdict_key(r.verdict)
            << ',' << point_status_key(p.status) << '\n';
    }
    return out.str();
}

Json sweep_json(const std::vector<SweepPoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) {
        Json row{{"spec", spec_json(p.spec)}, {"status", point_status_key(p.status)}};
        if (p.report) {
            row["witness"] = witness_json(p.report->witness);
            row["method"] = p.report->method;
            Json sigmas = Json::object();
            for (std::size_t i = 0; i < p.report->sigma.size(); ++i) {
                sigmas["sigma" + std::to_string(i)] = to_fraction_string(p.report->sigma[i]);
            }
            row["sigmas"] = std::move(sigmas);
            row["total"] = to_fraction_string(p.report->total);
            row["total_approx"] = to_decimal_string(p.report->total);
            row["verdict"] = verdict_key(p.report->verdict);
        } else {
            row["error"] = p.message;
        }
        out.push_back(std::move(row));
    }
    return out;
}

int run_sweep_cmd(const SweepArgs& a) {
    SweepJob job;
    job.family = parse_family(a.family);
    std::tie(job.n_min, job.n_max) = parse_range(a.n);
    job.qs = parse_q_list(a.q);
    job.threads = a.threads;
    job.use_small_n = !a.generic;
    job.drop_sigma0_if_infeasible = !a.no_sigma0_drop;
    job.table5_denominator = a.table5;
    const auto pts = run_sweep(job);
    if (pts.empty()) throw SpecError("the range contains no valid specs for " + a.family);

    if (a.emit == "json") write_output(sweep_json(pts).dump(2) + "\n", a.out);
    else if (a.emit == "csv") write_output(sweep_csv(pts), a.out);
    else throw SpecError("sweep supports --emit csv|json");

    int code = exit_certified;
    for (const auto& p : pts) {
        if (p.status == PointStatus::error) {
            std::cerr << "error: " << p.message << '\n';
            return exit_input;
        }
        if (p.status == PointStatus::failed) {
            std::cerr << p.spec.name() << ": expected to certify, total " << to_decimal_string(p.report->total) << '\n';
            code = exit_inconclusive;
        }
    }
    return code;
}

int run_classify(const std::string& name, bool json) {
    const CoverageRecord c = classify(name);
    if (json) {
        Json j{{"input", c.input}, {"group", c.canonical}, {"case", coverage_key(c.coverage)}, {"reason", c.reason}};
        if (c.prime) j[c.coverage == CoverageCase::theorem2 ? "r" : "p"] = c.prime->get_str();
        if (c.e) j["e"] = *c.e;
        std::cout << j.dump(2) << '\n';
        return exit_certified;
    }
    std::cout << c.canonical << ": " << coverage_key(c.coverage);
    if (c.coverage == CoverageCase::theorem2) std::cout << ", e = " << *c.e << ", r = " << *c.prime;
    else if (c.prime) std::cout << ", p = " << *c.prime;
    std::cout << "  (" << c.reason << ")\n";
    return exit_certified;
}

// Expands "--config FILE" (key=value lines mirroring the long flags) into
// command-line arguments. Keys already given on the command line are skipped,
// so flags win over the file. Subcommand config in CLI11 is not read, hence
// the expansion happens before parsing.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            kept.push_back(args[i]);
        }
    }
    if (path.empty() || kept.empty()) return args;
    auto given = [&](const std::string& flag) {
        return std::any_of(kept.begin(), kept.end(),
                           [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    std::vector<std::string> extra;
    for (const auto& item : CLI::ConfigINI().from_file(path)) {
        if (!item.parents.empty() && item.parents.front() != kept.front()) continue;
        std::string key = item.name;
        std::replace(key.begin(), key.end(), '_', '-');
        const std::string flag = "--" + key;
        if (given(flag) || item.inputs.empty()) continue;
        const std::string value = item.inputs.front();
        if (value == "true" || value == "1" || value == "on") {
            extra.push_back(flag);
        } else if (value != "false" && value != "0" && value != "off") {
            extra.push_back(flag);
            extra.insert(extra.end(), item.inputs.begin(), item.inputs.end());
        }
    }
    kept.insert(kept.end(), extra.begin(), extra.end());
    return kept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Q-bound certificates for (2,r)-generation of simple classical groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", toolchain_stamp());

    const std::vector<std::string> families{"psl", "psu", "psp", "omega+", "omega-", "omega-odd"};

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Evaluate the bound for one group and emit a certificate");
    std::string config_path;
    verify->add_option("--config", config_path, "key=value file mirroring the flags; flags given on the command line win");
    verify->add_option("--family", va.family, "Group family")->required()->check(CLI::IsMember(families));
    verify->add_option("--n", va.n, "Dimension of the natural module")->required();
    verify->add_option("--q", va.q, "Field size (prime power)")->required();
    verify->add_flag("--small-n", va.small_n, "Force the small-dimension recipe");
    verify->add_flag("--generic", va.generic, "Force the generic evaluator");
    verify->add_flag("--lemma24", va.lemma24, "Q_{2,5} bound for PSp4(2^a)");
    verify->add_flag("--no-sigma0-drop", va.no_sigma0_drop, "Keep the aggregate S-class term even when infeasible");
    verify->add_flag("--table5", va.table5, "Use the explicit class size as the generic denominator");
    verify->add_flag("--timestamp", va.timestamp, "Add a timestamp (excluded from the checksum)");
    verify->add_option("--r", va.r, "Use this primitive prime divisor instead of the smallest");
    verify->add_option("--emit", va.emit, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", va.out, "Write to this file instead of stdout");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a grid of (n, q) for one family");
    sweep->add_option("--config", config_path, "key=value file mirroring the flags; flags given on the command line win");
    sweep->add_option("--family", sa.family, "Group family")->required()->check(CLI::IsMember(families));
    sweep->add_option("--n", sa.n, "Dimension or range a..b")->required();
    sweep->add_option("--q", sa.q, "Comma-separated prime powers or ranges a..b (non prime powers in ranges are skipped)")
        ->required();
    sweep->add_option("--threads", sa.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sweep->add_flag("--generic", sa.generic, "Do not route the small-dimension list to its own recipe");
    sweep->add_flag("--no-sigma0-drop", sa.no_sigma0_drop, "Keep the aggregate S-class term even when infeasible");
    sweep->add_flag("--table5", sa.table5, "Use the explicit class size as the generic denominator");
    sweep->add_option("--emit", sa.emit, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sa.out, "Write to this file instead of stdout");

    std::string group;
    bool classify_json = false;
    auto* cls = app.add_subcommand("classify", "Which case of the reduction covers a simple group");
    cls->add_option("group", group, "e.g. PSL3(4), PSp4(9), PSU8(2), A7, M11")->required();
    cls->add_flag("--json", classify_json, "Emit JSON");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*verify) return run_verify(va);
        if (*sweep) return run_sweep_cmd(sa);
        return run_classify(group, classify_json);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
}
