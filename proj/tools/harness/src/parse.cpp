#include "hypertheta/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace hypertheta::harness {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

double parse_real(const std::string& s, const std::string& context) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
        throw ConfigError("cannot parse number '" + s + "' in " + context);
    return v;
}

// Coefficient of an imaginary part written without digits ("i", "-i").
double imaginary_coefficient(const std::string& s, const std::string& context) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, context);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(strip(cur));
    return out;
}

cplx parse_complex(const std::string& token) {
    const std::string s = strip(token);
    if (s.empty()) throw ConfigError("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, "'" + token + "'"), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, imaginary_coefficient(body, "'" + token + "'")};
    return {parse_real(body.substr(0, split), "'" + token + "'"),
            imaginary_coefficient(body.substr(split), "'" + token + "'")};
}

Rational parse_rational(const std::string& token) {
    const std::string s = strip(token);
    const auto slash = s.find('/');
    auto to_int = [&](const std::string& part) {
        int v = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (!part.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (part.empty() || ec != std::errc() || ptr != last)
            throw ConfigError("cannot parse characteristic entry '" + token + "'");
        return v;
    };
    try {
        if (slash == std::string::npos) return Rational(to_int(s), 1);
        return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ConfigError("characteristic entry '" + token + "' must have denominator 1 or 2");
    }
}

Characteristic parse_characteristic(const std::string& text) {
    const auto parts = split_list(text);
    if (parts.size() != 4) throw ConfigError("characteristic needs four entries a,c,b,d");
    return Characteristic{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                          parse_rational(parts[3])};
}

EvalPoint parse_point(const std::string& text) {
    const auto parts = split_list(text);
    if (parts.size() == 4) {
        return {{parse_real(parts[0], "--z"), parse_real(parts[1], "--z")},
                {parse_real(parts[2], "--z"), parse_real(parts[3], "--z")}};
    }
    if (parts.size() == 2) return {parse_complex(parts[0]), parse_complex(parts[1])};
    throw ConfigError("--z needs four reals or two complex numbers");
}

PeriodMatrix parse_period(const std::string& text) {
    const auto parts = split_list(text);
    PeriodMatrix tau;
    if (parts.size() == 6) {
        tau.tau1 = {parse_real(parts[0], "--tau"), parse_real(parts[1], "--tau")};
        tau.tau2 = {parse_real(parts[2], "--tau"), parse_real(parts[3], "--tau")};
        tau.tau12 = {parse_real(parts[4], "--tau"), parse_real(parts[5], "--tau")};
    } else if (parts.size() == 3) {
        tau.tau1 = parse_complex(parts[0]);
        tau.tau2 = parse_complex(parts[1]);
        tau.tau12 = parse_complex(parts[2]);
    } else {
        throw ConfigError("--tau needs six reals or three complex numbers");
    }
    return tau;
}

std::string format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "jsonl"; }

OutputFormat parse_format(const std::string& s) {
    if (s == "jsonl" || s == "json-lines") return OutputFormat::JsonLines;
    if (s == "csv") return OutputFormat::Csv;
    throw ConfigError("unknown output format '" + s + "' (expected jsonl or csv)");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Catalog: return "catalog";
        case Suite::Addition: return "addition";
        case Suite::Elliptic: return "elliptic";
        case Suite::All: return "all";
    }
    return "all";
}

Suite parse_suite(const std::string& s) {
    if (s == "catalog") return Suite::Catalog;
    if (s == "addition") return Suite::Addition;
    if (s == "elliptic") return Suite::Elliptic;
    if (s == "all") return Suite::All;
    throw ConfigError("unknown suite '" + s + "'");
}

}  // namespace hypertheta::harness
