#include "binsum/parse.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <set>

namespace binsum {

namespace {

ExactInt pow10(unsigned long e) {
    ExactInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

unsigned long parse_unsigned(const std::string& text) {
    const std::string t = trim(text);
    unsigned long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw DomainError("'" + text + "' is not a nonnegative integer");
    }
    return v;
}

ExactRational parse_rational(const std::string& text) {
    static const std::regex fraction(R"(([+-]?\d+)/(\d+))");
    static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
    const std::string t = trim(text);
    std::smatch m;
    if (std::regex_match(t, m, fraction)) {
        const ExactInt den(m[2].str());
        if (den == 0) {
            throw DomainError("'" + text + "' has a zero denominator");
        }
        ExactRational q(ExactInt(m[1].str()), den);
        q.canonicalize();
        return q;
    }
    if (!std::regex_match(t, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
        throw DomainError("'" + text + "' is not a rational number");
    }
    const std::string digits = m[2].str() + m[3].str();
    ExactRational q{ExactInt(digits)};
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
        const std::string e = m[4].str();
        const char* first = e.data() + (e[0] == '+' ? 1 : 0);
        long ev = 0;
        const auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), ev);
        if (ec != std::errc() || ev > 100000 || ev < -100000) {
            throw DomainError("'" + text + "' has an unusable exponent");
        }
        exponent += ev;
    }
    if (exponent >= 0) {
        q *= pow10(static_cast<unsigned long>(exponent));
    } else {
        q /= pow10(static_cast<unsigned long>(-exponent));
    }
    if (m[1].str() == "-") {
        q = -q;
    }
    q.canonicalize();
    return q;
}

std::string Range::str() const { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }

Range parse_range(const std::string& text) {
    const std::string t = trim(text);
    const auto dots = t.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_unsigned(t);
    } else {
        r.lo = parse_unsigned(t.substr(0, dots));
        r.hi = parse_unsigned(t.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw DomainError("range '" + text + "' is empty");
    }
    return r;
}

HypercubeSubset parse_set(std::istream& in) {
    std::vector<std::string> rows;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        if (!seen.insert(t).second) {
            throw DomainError("line " + std::to_string(lineno) + ": vertex '" + t + "' repeated");
        }
        rows.push_back(t);
    }
    if (rows.empty()) {
        throw DomainError("set file contains no vertices");
    }
    return HypercubeSubset::from_strings(rows);
}

HypercubeSubset read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open set file '" + path + "'");
    }
    return parse_set(in);
}

}  // namespace binsum
