#include "hypertheta/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace hypertheta::harness {

using nlohmann::json;

void VerificationConfig::validate() const {
    if (n_samples < 1) throw ConfigError("samples must be at least 1");
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    try {
        pol.validate();
        tau_family.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

VerificationConfig config_from_json(const std::string& text, VerificationConfig c) {
    try {
        const json j = json::parse(text);
        if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
        static const std::vector<std::string> known{"seed",   "samples", "eps_tail", "rel_tol",    "abs_tol",
                                                    "max_radius", "jobs", "suite",   "only",       "format",
                                                    "out",    "summary", "tau_family", "rng"};
        for (const auto& [key, _] : j.items()) {
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw ConfigError("unknown config key '" + key + "'");
        }
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("samples")) c.n_samples = j.at("samples").get<int>();
        if (j.contains("eps_tail")) c.pol.eps_tail = j.at("eps_tail").get<double>();
        if (j.contains("rel_tol")) c.pol.rel_tol = j.at("rel_tol").get<double>();
        if (j.contains("abs_tol")) c.pol.abs_tol = j.at("abs_tol").get<double>();
        if (j.contains("max_radius")) c.pol.max_radius = j.at("max_radius").get<int>();
        if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
        if (j.contains("suite")) c.suite = parse_suite(j.at("suite").get<std::string>());
        if (j.contains("only")) {
            const auto& o = j.at("only");
            c.only = o.is_string() ? split_list(o.get<std::string>()) : o.get<std::vector<std::string>>();
            std::erase(c.only, std::string());
        }
        if (j.contains("format") && j.at("format") != "default")
            c.output_format = parse_format(j.at("format").get<std::string>());
        if (j.contains("out")) c.output_path = j.at("out").get<std::string>();
        if (j.contains("summary")) c.summary_path = j.at("summary").get<std::string>();
        if (j.contains("tau_family")) {
            const auto& f = j.at("tau_family");
            auto& t = c.tau_family;
            t.im_diag_min = f.value("im_diag_min", t.im_diag_min);
            t.im_diag_max = f.value("im_diag_max", t.im_diag_max);
            t.det_floor = f.value("det_floor", t.det_floor);
            t.re_min = f.value("re_min", t.re_min);
            t.re_max = f.value("re_max", t.re_max);
            t.point_re = f.value("point_re", t.point_re);
            t.point_im = f.value("point_im", t.point_im);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config file: ") + e.what());
    }
    return c;
}

std::string config_to_json(const VerificationConfig& c) {
    const auto& t = c.tau_family;
    json j = {{"seed", c.seed},
              {"samples", c.n_samples},
              {"eps_tail", c.pol.eps_tail},
              {"rel_tol", c.pol.rel_tol},
              {"abs_tol", c.pol.abs_tol},
              {"max_radius", c.pol.max_radius},
              {"suite", suite_name(c.suite)},
              {"only", c.only},
              {"format", c.output_format ? format_name(*c.output_format) : "default"},
              {"tau_family",
               {{"im_diag_min", t.im_diag_min},
                {"im_diag_max", t.im_diag_max},
                {"det_floor", t.det_floor},
                {"re_min", t.re_min},
                {"re_max", t.re_max},
                {"point_re", t.point_re},
                {"point_im", t.point_im}}},
              {"rng", "mt19937_64, per-sample seed splitmix64(seed + index), 53-bit doubles"}};
    // Output paths and the worker count do not change the report bytes.
    return j.dump();
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("HYPERTHETA_CATALOG"); env && *env) return env;
    for (const char* candidate : {HYPERTHETA_BUILD_CATALOG, HYPERTHETA_INSTALL_CATALOG}) {
        if (std::filesystem::exists(candidate)) return candidate;
    }
    return HYPERTHETA_BUILD_CATALOG;
}

}  // namespace hypertheta::harness
