#pragma once

// JSON / CSV / plain-text rendering of VerifyReport. Rationals are always
// written as "p/q" strings; capped determinant entries are null (JSON) or "-".

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "somos/verify.hpp"

namespace somos {

using Json = nlohmann::ordered_json;

inline Json to_json(const VerifyReport& r) {
    Json j;
    j["kind"] = r.kind;
    j["n_max"] = r.n_max;
    j["determinant_cap"] = r.determinant_cap;
    j["seed"] = r.seed;
    j["series"] = Json::array();
    for (const auto& c : r.series) j["series"].push_back(c.str());
    j["route_determinant"] = Json::array();
    for (const auto& d : r.route_determinant) j["route_determinant"].push_back(d ? Json(d->str()) : Json(nullptr));
    j["route_product"] = Json::array();
    for (const auto& p : r.route_product) j["route_product"].push_back(p.str());
    j["route_recurrence"] = Json::array();
    for (const auto& s : r.route_recurrence) j["route_recurrence"].push_back(s.str());
    j["suites"] = Json::array();
    for (const auto& s : r.suites) {
        j["suites"].push_back({{"name", s.name},
                               {"trials", s.trials},
                               {"passes", s.passes},
                               {"first_failure", s.first_failure ? Json(*s.first_failure) : Json(nullptr)}});
    }
    j["errors"] = r.errors;
    j["overall"] = r.overall ? "pass" : "fail";
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    j["timing_ms"] = Json::object();
    for (const auto& [phase, ms] : r.timing_ms) j["timing_ms"][phase] = ms;
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

template <typename Vec>
std::string cell(const Vec& v, std::size_t n) {
    if (n >= v.size()) return "-";
    if constexpr (requires { v[n].has_value(); }) {
        return v[n] ? v[n]->str() : "-";
    } else {
        return v[n].str();
    }
}

inline std::size_t route_rows(const VerifyReport& r) {
    return std::max({r.route_determinant.size(), r.route_product.size(), r.route_recurrence.size()});
}

}  // namespace detail

/// Three tables separated by blank lines: routes by index, suites, phase timings.
inline std::string to_csv(const VerifyReport& r) {
    std::ostringstream os;
    os << "index,determinant,product,recurrence\n";
    for (std::size_t n = 0; n < detail::route_rows(r); ++n) {
        os << n << ',' << detail::cell(r.route_determinant, n) << ',' << detail::cell(r.route_product, n) << ','
           << detail::cell(r.route_recurrence, n) << '\n';
    }
    os << "\nsuite,trials,passes,first_failure\n";
    for (const auto& s : r.suites) {
        os << s.name << ',' << s.trials << ',' << s.passes << ',' << detail::csv_field(s.first_failure.value_or("")) << '\n';
    }
    for (const auto& e : r.errors) os << "error,0,0," << detail::csv_field(e) << '\n';
    os << "overall," << (r.overall ? "pass" : "fail") << ",," << detail::csv_field(r.first_failure.value_or("")) << '\n';
    os << "\nphase,ms\n";
    for (const auto& [phase, ms] : r.timing_ms) os << phase << ',' << ms << '\n';
    return os.str();
}

inline std::string to_plain(const VerifyReport& r) {
    std::ostringstream os;
    os << r.kind << " verification: n_max=" << r.n_max << " determinant_cap=" << r.determinant_cap << " seed=" << r.seed << '\n';
    os << "n\tdeterminant\tproduct\trecurrence\n";
    for (std::size_t n = 0; n < detail::route_rows(r); ++n) {
        os << n << '\t' << detail::cell(r.route_determinant, n) << '\t' << detail::cell(r.route_product, n) << '\t'
           << detail::cell(r.route_recurrence, n) << '\n';
    }
    for (const auto& s : r.suites) {
        os << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << " " << s.passes << "/" << s.trials;
        if (s.first_failure) os << "  first failure: " << *s.first_failure;
        os << '\n';
    }
    for (const auto& e : r.errors) os << "[ERROR] " << e << '\n';
    os << "overall: " << (r.overall ? "pass" : "fail") << '\n';
    for (const auto& [phase, ms] : r.timing_ms) os << "time " << phase << " " << ms << " ms\n";
    return os.str();
}

}  // namespace somos
