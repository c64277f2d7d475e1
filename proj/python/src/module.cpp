// Python bindings: every function returns the JSON text the CLI would emit,
// and the Python package parses it.

#include "gencert/coverage.hpp"
#include "gencert/serialization.hpp"
#include "gencert/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace gencert;

namespace {

BoundOptions options(bool drop_sigma0, bool table5, const std::optional<std::string>& r) {
    BoundOptions opt;
    opt.drop_sigma0_if_infeasible = drop_sigma0;
    opt.denominator = table5 ? Denominator::table5 : Denominator::table4;
    if (r) opt.r_override = ExactInt(*r);
    return opt;
}

std::string verify(const std::string& family, unsigned long n, const std::string& q, const std::string& method,
                   bool drop_sigma0, bool table5, const std::optional<std::string>& r) {
    const GroupSpec s = GroupSpec::make(parse_family(family), n, ExactInt(q));
    if (!s.in_theorem_scope()) throw SpecError(s.name() + " is outside the n >= 8 scope of the (2,r) bound");
    const BoundOptions opt = options(drop_sigma0, table5, r);
    BoundReport rep;
    if (method == "auto") rep = q2_bound_auto(s, opt);
    else if (method == "generic") rep = q2_bound(s, opt);
    else if (method == "small-n") rep = q2_bound_small_n(s, opt);
    else throw SpecError("method must be auto, generic or small-n");
    return make_certificate(rep).dump();
}

std::string sweep(const std::string& family, const std::string& n, const std::string& q, unsigned threads,
                  bool use_small_n, bool drop_sigma0, bool table5) {
    SweepJob job;
    job.family = parse_family(family);
    std::tie(job.n_min, job.n_max) = parse_range(n);
    job.qs = parse_q_list(q);
    job.threads = threads;
    job.use_small_n = use_small_n;
    job.drop_sigma0_if_infeasible = drop_sigma0;
    job.table5_denominator = table5;
    Json out = Json::array();
    for (const auto& p : run_sweep(job)) {
        Json row{{"spec", spec_json(p.spec)}, {"status", point_status_key(p.status)}};
        if (p.report) row["report"] = report_json(*p.report);
        else row["error"] = p.message;
        out.push_back(std::move(row));
    }
    return out.dump();
}

std::string classify_json(const std::string& name) {
    const CoverageRecord c = classify(name);
    Json j{{"input", c.input}, {"group", c.canonical}, {"case", coverage_key(c.coverage)}, {"reason", c.reason}};
    if (c.prime) j[c.coverage == CoverageCase::theorem2 ? "r" : "p"] = c.prime->get_str();
    if (c.e) j["e"] = *c.e;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Q-bound certificates for (2,r)-generation of simple classical groups";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("verify", &verify, py::arg("family"), py::arg("n"), py::arg("q"), py::arg("method") = "auto",
          py::arg("drop_sigma0") = true, py::arg("table5") = false, py::arg("r") = py::none());
    m.def("sweep", &sweep, py::arg("family"), py::arg("n"), py::arg("q"), py::arg("threads") = 1,
          py::arg("use_small_n") = true, py::arg("drop_sigma0") = true, py::arg("table5") = false);
    m.def("classify", &classify_json, py::arg("name"));
    m.def("psp4_bound", [](const std::string& q) {
        const ExactInt qq(q);
        const auto pp = as_prime_power(qq);
        if (!pp || pp->p != 2 || pp->a < 2) throw SpecError("q must be 2^a with a >= 2");
        return psp4_json(q25_bound_psp4(qq)).dump();
    }, py::arg("q"));
    m.def("psl34_bound", [] { return to_fraction_string(q2p_bound_psl34()); });
    m.def("select_r", [](const std::string& family, unsigned long n, const std::string& q) {
        return witness_json(select_r(GroupSpec::make(parse_family(family), n, ExactInt(q)))).dump();
    }, py::arg("family"), py::arg("n"), py::arg("q"));
    m.def("primitive_prime_divisors", [](const std::string& q, unsigned long e) {
        std::vector<std::string> out;
        for (const auto& r : primitive_prime_divisors(ExactInt(q), e)) out.push_back(r.get_str());
        return out;
    }, py::arg("q"), py::arg("e"));
    m.def("certificate_checksum_ok", [](const std::string& text) { return certificate_checksum_ok(Json::parse(text)); },
          py::arg("certificate"));
    m.attr("__version__") = GENCERT_VERSION;
}
