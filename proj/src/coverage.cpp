#include "gencert/coverage.hpp"

#include <array>
#include <cctype>
#include <regex>
#include <utility>

namespace gencert {

std::string_view coverage_key(CoverageCase c) {
    switch (c) {
        case CoverageCase::table2: return "table2";
        case CoverageCase::table3: return "table3";
        case CoverageCase::lemma24: return "lemma2.4";
        case CoverageCase::theorem2: return "theorem2";
        case CoverageCase::alternating: return "alternating";
        case CoverageCase::sporadic: return "sporadic";
        case CoverageCase::suzuki: return "suzuki";
        case CoverageCase::exceptional: return "exceptional";
    }
    return "?";
}

namespace {

struct Sporadic {
    const char* name;
    int prime;
};

// (2,3)-generated except M11, M22, M23, McL.
constexpr std::array<Sporadic, 26> sporadics{{
    {"M11", 11}, {"M12", 3}, {"M22", 5}, {"M23", 23}, {"M24", 3}, {"J1", 3}, {"J2", 3},
    {"J3", 3}, {"J4", 3}, {"HS", 3}, {"McL", 5}, {"Co1", 3}, {"Co2", 3}, {"Co3", 3},
    {"He", 3}, {"Ru", 3}, {"Suz", 3}, {"O'N", 3}, {"HN", 3}, {"Ly", 3}, {"Th", 3},
    {"Fi22", 3}, {"Fi23", 3}, {"Fi24'", 3}, {"BM", 3}, {"M", 3},
}};

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

ExactInt parse_int(const std::string& s) { return ExactInt(s); }

CoverageRecord record(const std::string& input, std::string canonical, CoverageCase c, long prime, std::string reason) {
    CoverageRecord r;
    r.input = input;
    r.canonical = std::move(canonical);
    r.coverage = c;
    r.prime = ExactInt(prime);
    r.reason = std::move(reason);
    return r;
}

// Low-dimensional isomorphisms onto the families handled below.
std::pair<Family, ExactInt> canonical_family(Family f, unsigned long& n, const ExactInt& q) {
    switch (f) {
        case Family::orthogonal_odd:
            if (n == 3) { n = 2; return {Family::linear, q}; }
            if (n == 5) { n = 4; return {Family::symplectic, q}; }
            break;
        case Family::symplectic:
        case Family::unitary:
            if (n == 2) return {Family::linear, q};
            break;
        case Family::orthogonal_plus:
            if (n <= 4) throw SpecError("POmega+" + std::to_string(n) + "(q) is not simple");
            if (n == 6) { n = 4; return {Family::linear, q}; }
            break;
        case Family::orthogonal_minus:
            if (n == 2) throw SpecError("POmega-2(q) is not simple");
            if (n == 4) { n = 2; return {Family::linear, q * q}; }
            if (n == 6) { n = 4; return {Family::unitary, q}; }
            break;
        default: break;
    }
    return {f, q};
}

bool is_power_of(const ExactInt& q, unsigned long p) {
    const auto pp = as_prime_power(q);
    return pp && pp->p == p;
}

CoverageRecord classify_classical(const std::string& input, Family family, unsigned long n, const ExactInt& q) {
    GroupSpec::make(family, n, q);  // parity and prime-power checks on the name as given
    auto [f, qq] = canonical_family(family, n, q);
    const GroupSpec s = GroupSpec::make(f, n, qq);
    const std::string name = s.name();
    if ((f == Family::linear && n == 2 && (qq == 2 || qq == 3)) || (f == Family::unitary && n == 3 && qq == 2) ||
        (f == Family::symplectic && n == 4 && qq == 2)) {
        throw SpecError(name + " is not simple");
    }
    auto t2 = [&] {
        auto r = record(input, name, CoverageCase::table2, 3, "small classical group, (2,3)-generated");
        r.spec = s;
        return r;
    };
    auto t3 = [&](long p) {
        auto r = record(input, name, CoverageCase::table3, p, "small classical group not (2,3)-generated; (2," +
                                                                   std::to_string(p) + ") bound verified directly");
        r.spec = s;
        return r;
    };
    if (f == Family::orthogonal_plus && n == 8 && qq == 2) return t3(5);
    if (n >= 8) {
        const auto w = select_r(s);
        CoverageRecord r;
        r.input = input;
        r.canonical = name;
        r.coverage = CoverageCase::theorem2;
        r.prime = w.r;
        r.e = w.e;
        r.spec = s;
        r.reason = "n >= 8: (2,r) with r the smallest primitive prime divisor of q^e - 1";
        return r;
    }
    switch (f) {
        case Family::linear:
            if ((n == 2 && qq == 9) || (n == 4 && qq == 2)) return t3(5);
            if (n == 3 && qq == 4) return t3(7);
            return t2();
        case Family::unitary:
            if ((n == 4 || n == 5) && qq == 2) return t3(5);
            if ((n == 3 && (qq == 3 || qq == 5)) || (n == 4 && qq == 3)) return t3(7);
            return t2();
        case Family::symplectic:
            if (n == 4 && (is_power_of(qq, 2) || is_power_of(qq, 3))) {
                auto r = record(input, name, CoverageCase::lemma24, 5, "PSp4(2^a), a > 1, or PSp4(3^a): (2,5)");
                r.spec = s;
                return r;
            }
            return t2();
        case Family::orthogonal_odd: return t2();  // n = 7
        default: break;
    }
    throw SpecError(name + " has no coverage entry");
}

}  // namespace

CoverageRecord classify(const std::string& input) {
    std::smatch m;
    static const std::regex classical(R"(^(PSL|PSU|PSp|POmega\+|POmega-|POmega|Omega)\s*_?(\d+)\s*\((\d+)\)$)",
                                      std::regex::icase);
    static const std::regex alternating(R"(^(A|Alt)\s*\(?(\d+)\)?$)", std::regex::icase);
    static const std::regex suzuki(R"(^(Sz|2B2)\s*\((\d+)\)$)", std::regex::icase);
    static const std::regex exceptional(R"(^(G2|F4|E6|2E6|E7|E8|3D4|2G2|2F4)\s*\((\d+)\)('?)$)", std::regex::icase);

    if (std::regex_match(input, m, classical)) {
        const std::string head = lower(m[1]);
        Family f = Family::linear;
        if (head == "psu") f = Family::unitary;
        else if (head == "psp") f = Family::symplectic;
        else if (head == "pomega+") f = Family::orthogonal_plus;
        else if (head == "pomega-") f = Family::orthogonal_minus;
        else if (head == "pomega" || head == "omega") f = Family::orthogonal_odd;
        return classify_classical(input, f, std::stoul(m[2]), parse_int(m[3]));
    }
    if (std::regex_match(input, m, alternating)) {
        const unsigned long n = std::stoul(m[2]);
        if (n < 5) throw SpecError("A" + std::to_string(n) + " is not a nonabelian simple group");
        const std::string name = "A" + std::to_string(n);
        if (n >= 6 && n <= 8) return record(input, name, CoverageCase::alternating, 5, "A6, A7, A8 are (2,5)-generated");
        return record(input, name, CoverageCase::alternating, 3, "(2,3)-generated");
    }
    if (std::regex_match(input, m, suzuki)) {
        const ExactInt q = parse_int(m[2]);
        const auto pp = as_prime_power(q);
        if (!pp || pp->p != 2 || pp->a % 2 == 0 || pp->a < 3) throw SpecError("Sz(q) needs q = 2^(2m+1) >= 8");
        return record(input, "Sz(" + q.get_str() + ")", CoverageCase::suzuki, 5,
                       "no elements of order 3; (2,5)-generated");
    }
    if (std::regex_match(input, m, exceptional)) {
        const std::string type = m[1];
        const ExactInt q = parse_int(m[2]);
        const auto pp = as_prime_power(q);
        if (!pp) throw SpecError("q = " + q.get_str() + " is not a prime power");
        const std::string t = lower(type);
        const bool derived = m[3].length() > 0;
        if (t == "2g2" && (pp->p != 3 || pp->a % 2 == 0 || pp->a < 3)) throw SpecError("2G2(q) needs q = 3^(2m+1) >= 27");
        if (t == "2f4" && (pp->p != 2 || pp->a % 2 == 0 || (pp->a == 1 && !derived))) {
            throw SpecError("2F4(q) needs q = 2^(2m+1); use 2F4(2)' for the Tits group");
        }
        if (t == "g2" && q == 2) throw SpecError("G2(2) is not simple");
        return record(input, type + "(" + q.get_str() + ")" + (derived ? "'" : ""), CoverageCase::exceptional, 3,
                      "(2,3)-generated");
    }
    for (const auto& s : sporadics) {
        if (lower(input) == lower(s.name)) {
            return record(input, s.name, CoverageCase::sporadic, s.prime,
                          s.prime == 3 ? "(2,3)-generated" : "not (2,3)-generated; (2," + std::to_string(s.prime) + ")");
        }
    }
    throw SpecError("unrecognized group name '" + input + "'");
}

}  // namespace gencert
