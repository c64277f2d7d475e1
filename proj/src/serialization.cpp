#include "gencert/serialization.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#ifndef GENCERT_VERSION
#define GENCERT_VERSION "0.0.0"
#endif

namespace gencert {

namespace {

Json rat(const ExactRat& x) { return to_fraction_string(x); }
Json approx(const ExactRat& x) { return to_decimal_string(x); }

Json integer(const ExactInt& x) { return x.get_str(); }

const char* sigma_key(std::size_t i) {
    static const char* keys[] = {"sigma0", "sigma1", "sigma2", "sigma3", "sigma4",
                                 "sigma5", "sigma6", "sigma7", "sigma8"};
    return keys[i];
}

Json term_json(const BoundTerm& t) {
    return Json{{"sigma", t.sigma},
                {"source", term_source_key(t.source)},
                {"label", t.label},
                {"condition", t.condition},
                {"classes", integer(t.classes)},
                {"count_factor", rat(t.count_factor)},
                {"i2_upper", integer(t.i2_upper)},
                {"involution_ratio", rat(t.involution_ratio)},
                {"contribution", rat(t.contribution)},
                {"contribution_approx", approx(t.contribution)}};
}

Json socle_json(const SocleCandidate& s, const char* source) {
    static const char* kinds[] = {"lie-cross-char", "alternating", "aggregate", "other"};
    return Json{{"source", source},
                {"type", s.socle},
                {"params", Json{{"kind", kinds[static_cast<int>(s.kind)]}, {"condition", s.condition}}},
                {"c_M", integer(s.cap)},
                {"i2_upper", integer(s.i2_upper)},
                {"normalizer_lower", nullptr}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json spec_json(const GroupSpec& s) {
    return Json{{"family", family_key(s.family)}, {"n", s.n}, {"q", integer(s.q)}, {"name", s.name()}};
}

Json witness_json(const PrimitivePrimeWitness& w) {
    return Json{{"e", w.e}, {"r", integer(w.r)}, {"ord_r_q", integer(w.ord)}};
}

Json report_json(const BoundReport& rep) {
    Json terms = Json::array();
    for (const auto& t : rep.terms) terms.push_back(term_json(t));
    Json sigmas = Json::object();
    for (std::size_t i = 0; i < rep.sigma.size(); ++i) sigmas[sigma_key(i)] = rat(rep.sigma[i]);
    Json j{{"spec", spec_json(rep.spec)},
           {"witness", witness_json(rep.witness)},
           {"method", rep.method},
           {"denominator", denominator_key(rep.denominator)},
           {"i2_denominator", integer(rep.i2_denominator)},
           {"normalizer", integer(rep.normalizer)},
           {"sigma0_dropped", rep.sigma0_dropped},
           {"terms", std::move(terms)},
           {"sigmas", std::move(sigmas)},
           {"total", rat(rep.total)},
           {"total_approx", approx(rep.total)},
           {"verdict", verdict_key(rep.verdict)},
           {"notes", rep.notes}};
    if (rep.table4_total) j["table4_total"] = rat(*rep.table4_total);
    return j;
}

Json psp4_json(const Psp4Bound& b) {
    Json terms = Json::array();
    for (const auto& t : b.terms) {
        terms.push_back(Json{{"type", t.type},
                             {"classes", integer(t.classes)},
                             {"index", rat(t.index)},
                             {"i2", integer(t.i2)},
                             {"i5_upper", integer(t.i5)},
                             {"contribution", rat(t.contribution)}});
    }
    return Json{{"spec", Json{{"family", "psp"}, {"n", 4}, {"q", integer(b.counts.q)}}},
                {"prime", 5},
                {"i2_group", integer(b.counts.i2_group)},
                {"i5_group_lower", integer(b.counts.i5_group_lower)},
                {"terms", std::move(terms)},
                {"assembled", rat(b.assembled)},
                {"assembled_approx", approx(b.assembled)},
                {"displayed", b.displayed.to_string()},
                {"displayed_approx", approx(b.displayed.upper_bound())},
                {"assembled_le_displayed", b.assembled_le_displayed},
                {"equal", b.equal},
                {"verdict", verdict_key(b.verdict)}};
}

Json catalog_json(const GroupSpec& s, const PrimitivePrimeWitness& w) {
    Json out = Json::array();
    for (const auto& m : geometric_candidates(s, w)) {
        Json params = Json::object();
        for (const auto& [k, v] : m.params) params[k] = v;
        params["class"] = m.aschbacher_class;
        params["condition"] = m.condition;
        out.push_back(Json{{"source", "C" + std::to_string(m.aschbacher_class)},
                           {"type", m.type},
                           {"params", std::move(params)},
                           {"c_M", integer(m.c_M)},
                           {"i2_upper", integer(m.i2_upper)},
                           {"normalizer_lower", m.normalizer_is_full ? Json(nullptr) : Json(to_string(m.normalizer_lower))}});
    }
    if (in_dagger_list(s)) {
        for (const auto& row : small_n_sclass(s, w)) out.push_back(socle_json(row, "S"));
    } else {
        for (const auto& row : sclass_feasible(s, w).rows) out.push_back(socle_json(row, "S"));
    }
    return out;
}

std::string report_csv(const BoundReport& rep) {
    std::ostringstream out;
    out << "family,n,q,r,sigma,source,label,classes,count_factor,i2_upper,involution_ratio,contribution,"
           "contribution_approx\n";
    for (const auto& t : rep.terms) {
        out << family_key(rep.spec.family) << ',' << rep.spec.n << ',' << rep.spec.q << ',' << rep.witness.r << ','
            << t.sigma << ',' << term_source_key(t.source) << ',' << csv_field(t.label) << ',' << t.classes << ','
            << to_fraction_string(t.count_factor) << ',' << t.i2_upper << ','
            << to_fraction_string(t.involution_ratio) << ',' << to_fraction_string(t.contribution) << ','
            << to_decimal_string(t.contribution) << '\n';
    }
    return out.str();
}

std::string report_text(const BoundReport& rep) {
    std::ostringstream out;
    out << rep.spec.name() << "  e = " << rep.witness.e << ", r = " << rep.witness.r << '\n';
    out << "method " << rep.method << ", denominator " << denominator_key(rep.denominator) << " ("
        << rep.i2_denominator << "), |N_G(<x>)| = " << rep.normalizer << '\n';
    for (const auto& t : rep.terms) {
        out << "  S" << t.sigma << "  " << t.label << "  c=" << t.classes << "  i2<=" << t.i2_upper << "  -> "
            << to_decimal_string(t.contribution) << '\n';
    }
    for (std::size_t i = 0; i < rep.sigma.size(); ++i) {
        if (rep.sigma[i] != 0) out << "Sigma" << i << " = " << to_decimal_string(rep.sigma[i]) << '\n';
    }
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
    out << "total = " << to_decimal_string(rep.total) << "  (" << verdict_key(rep.verdict) << ")\n";
    if (rep.verdict == Verdict::inconclusive) out << "the bound is >= 1: this method does not decide this group\n";
    return out.str();
}

std::string psp4_text(const Psp4Bound& b) {
    std::ostringstream out;
    out << "PSp4(" << b.counts.q << ")  p = 5\n";
    for (const auto& t : b.terms) out << "  " << t.type << "  -> " << to_decimal_string(t.contribution) << '\n';
    out << "assembled = " << to_decimal_string(b.assembled) << "  (" << verdict_key(b.verdict) << ")\n";
    out << "displayed = " << to_decimal_string(b.displayed.upper_bound()) << "  assembled <= displayed: "
        << (b.assembled_le_displayed ? "yes" : "no") << (b.equal ? ", equal" : ", strict") << '\n';
    return out.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string toolchain_stamp() {
    std::ostringstream out;
    out << "gencert " << GENCERT_VERSION << " (";
#if defined(__clang__)
    out << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
    out << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
    out << "unknown compiler";
#endif
    out << ", GMP " << gmp_version << ')';
    return out.str();
}

namespace {

std::string checksum_payload(Json cert) {
    cert.erase("timestamp");
    cert.erase("certificate_checksum");
    return cert.dump();
}

}  // namespace

Json make_certificate(const BoundReport& rep, const std::string& timestamp) {
    Json cert = report_json(rep);
    cert["catalog_checksum"] = sha256_hex(catalog_json(rep.spec, rep.witness).dump());
    cert["toolchain"] = toolchain_stamp();
    cert["certificate_checksum"] = sha256_hex(checksum_payload(cert));
    if (!timestamp.empty()) cert["timestamp"] = timestamp;
    return cert;
}

bool certificate_checksum_ok(const Json& cert) {
    if (!cert.contains("certificate_checksum")) return false;
    return cert["certificate_checksum"] == sha256_hex(checksum_payload(cert));
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace gencert
