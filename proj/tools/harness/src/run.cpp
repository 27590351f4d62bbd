#include "hypertheta/harness.hpp"
#include "hypertheta/digest.hpp"
#include "hypertheta/version.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

namespace hypertheta::harness {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// nlohmann writes NaN as null; residuals of failed evaluations stay NaN.
ordered_json real_json(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json report_json(const std::string& suite, const ResidualReport& r, double rel_tol, double abs_tol) {
    ordered_json j = {{"suite", suite},
                      {"id", r.id},
                      {"sample", r.sample},
                      {"sample_seed", r.sample_seed},
                      {"lhs", complex_json(r.lhs)},
                      {"rhs", complex_json(r.rhs)},
                      {"abs_residual", real_json(r.abs_residual)},
                      {"rel_residual", real_json(r.rel_residual)},
                      {"rel_tol", rel_tol},
                      {"abs_tol", abs_tol},
                      {"pass", r.pass}};
    if (r.sign) {
        j["sign"] = {{"signs", r.sign->signs},
                     {"value", complex_json(r.sign->value)},
                     {"direct", complex_json(r.sign->direct)},
                     {"rel_residual", r.sign->rel_residual}};
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

const char* kResidualHeader =
    "suite,id,sample,sample_seed,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,pass,signs,error\n";
const char* kEllipticHeader = "suite,sample,sample_seed,u1,u3,k,yang_baxter,c11,c33,c13,c12,c23,c22,pass\n";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    return out + "\"";
}

std::string report_csv(const std::string& suite, const ResidualReport& r) {
    std::string signs;
    if (r.sign)
        for (std::size_t i = 0; i < r.sign->signs.size(); ++i)
            signs += (i ? ";" : "") + std::to_string(r.sign->signs[i]);
    return suite + "," + csv_field(r.id) + "," + std::to_string(r.sample) + "," + std::to_string(r.sample_seed) + "," +
           num(r.lhs.real()) + "," + num(r.lhs.imag()) + "," + num(r.rhs.real()) + "," + num(r.rhs.imag()) + "," +
           num(r.abs_residual) + "," + num(r.rel_residual) + "," + (r.pass ? "true" : "false") + "," + signs + "," +
           csv_field(r.error) + "\n";
}

struct Tally {
    int evaluations = 0;
    int passed = 0;
    double max_rel = 0.0;
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, double>> per_id;  // passes, max rel
    std::set<std::string> failing;

    void add(const ResidualReport& r) {
        ++evaluations;
        auto [it, fresh] = per_id.try_emplace(r.id, 0, 0.0);
        if (fresh) order.push_back(r.id);
        if (r.pass) {
            ++passed;
            ++it->second.first;
        } else {
            failing.insert(r.id);
        }
        const double rel = std::isfinite(r.rel_residual) ? r.rel_residual : INFINITY;
        it->second.second = std::max(it->second.second, rel);
        max_rel = std::max(max_rel, rel);
    }

    ordered_json summary() const {
        ordered_json per = ordered_json::object();
        for (const auto& id : order) {
            const auto& [passes, rel] = per_id.at(id);
            per[id] = {{"passed", passes}, {"max_rel_residual", real_json(rel)}};
        }
        ordered_json fails = ordered_json::array();
        for (const auto& id : order)
            if (failing.count(id)) fails.push_back(id);
        return {{"evaluations", evaluations}, {"passed", passed},        {"failed", evaluations - passed},
                {"max_rel_residual", real_json(max_rel)}, {"failing_ids", fails}, {"per_identity", per}};
    }
};

}  // namespace

bool is_static_id(const std::string& id) {
    const auto& fs = addition_formulas();
    if (std::any_of(fs.begin(), fs.end(), [&](const AdditionFormula& f) { return f.id == id; })) return true;
    if (id == "E" || id == "E.yang-baxter") return true;
    const auto& labels = ComponentResiduals::labels();
    return std::any_of(labels.begin(), labels.end(), [&](const std::string& l) { return id == "E." + l; });
}

std::vector<EllipticSample> verify_elliptic(int n_samples, std::uint64_t seed) {
    std::vector<EllipticSample> out;
    for (int s = 0; s < n_samples; ++s) {
        EllipticSample e;
        e.sample = s;
        e.sample_seed = sample_seed(seed, static_cast<std::uint64_t>(s));
        SampleRng rng(e.sample_seed);
        e.u1 = rng.uniform(-elliptic_u_range, elliptic_u_range);
        e.u3 = rng.uniform(-elliptic_u_range, elliptic_u_range);
        e.k = rng.unit();
        e.yang_baxter = yang_baxter_residual(e.u1, e.u3, e.k);
        e.components = component_residuals(e.u1, e.u3, e.k);
        e.pass = e.yang_baxter < elliptic_tol && e.components.max_abs() < elliptic_tol;
        out.push_back(e);
    }
    return out;
}

RunOutput run_verification(const VerificationConfig& config, const Catalog& catalog, const std::string& catalog_path,
                           const std::string& catalog_sha256) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const bool do_catalog = config.suite == Suite::Catalog || config.suite == Suite::All;
    const bool do_addition = config.suite == Suite::Addition || config.suite == Suite::All;
    const bool do_elliptic = config.suite == Suite::Elliptic || config.suite == Suite::All;
    const OutputFormat fmt = config.output_format.value_or(config.suite == Suite::Elliptic ? OutputFormat::Csv
                                                                                         : OutputFormat::JsonLines);
    RunOutput out;
    ordered_json suites = ordered_json::object();
    std::string residual_lines;
    std::string elliptic_lines;
    std::vector<std::string> failing;

    auto emit = [&](const std::string& suite, const ResidualReport& r, double rel_tol) {
        if (fmt == OutputFormat::Csv)
            residual_lines += report_csv(suite, r);
        else
            residual_lines += report_json(suite, r, rel_tol, config.pol.abs_tol).dump() + "\n";
    };

    if (do_catalog) {
        std::vector<std::string> only;
        for (const auto& id : config.only)
            if (!catalog.group(id).empty()) only.push_back(id);
        for (const auto& id : config.only) {
            if (catalog.group(id).empty() && !is_static_id(id)) throw ConfigError("unknown identity id '" + id + "'");
        }
        if (config.only.empty() || !only.empty()) {
            const auto reports = verify_catalog(catalog, config.n_samples, config.seed, config.pol, only,
                                                config.tau_family, config.jobs);
            Tally tally;
            for (const auto& r : reports) {
                tally.add(r);
                emit("catalog", r, config.pol.rel_tol);
            }
            ordered_json s = tally.summary();
            s["samples"] = config.n_samples;
            s["identities"] = tally.order.size();
            for (const auto& id : tally.order)
                if (tally.failing.count(id)) failing.push_back(id);
            suites["catalog"] = s;
        }
    }

    const bool addition_selected =
        config.only.empty() ||
        std::any_of(config.only.begin(), config.only.end(), [](const std::string& id) { return !id.empty() && id[0] == 'A'; });
    if (do_addition && addition_selected) {
        const AdditionRun run = verify_addition(config.n_samples, config.seed, config.pol, config.tau_family);
        std::set<std::string> wanted;
        for (const auto& id : config.only)
            if (!id.empty() && id[0] == 'A') wanted.insert(id);
        for (const auto& id : wanted) {
            const auto& fs = addition_formulas();
            if (std::none_of(fs.begin(), fs.end(), [&](const AdditionFormula& f) { return f.id == id; }))
                throw ConfigError("unknown identity id '" + id + "'");
        }
        auto keep = [&](const ResidualReport& r) { return wanted.empty() || wanted.count(r.id) > 0; };
        Tally law, path;
        for (const auto& r : run.law) {
            if (!keep(r)) continue;
            law.add(r);
            emit("addition-law", r, addition_law_tol);
        }
        for (const auto& r : run.path) {
            if (!keep(r)) continue;
            path.add(r);
            emit("addition-path", r, path_tol);
        }
        ordered_json s = {{"samples", config.n_samples},
                          {"redraws", run.redraws},
                          {"warnings", run.warnings},
                          {"law", law.summary()},
                          {"path", path.summary()}};
        for (const auto& id : law.order)
            if (law.failing.count(id)) failing.push_back("law:" + id);
        for (const auto& id : path.order)
            if (path.failing.count(id)) failing.push_back("path:" + id);
        suites["addition"] = s;
    }

    const bool elliptic_selected =
        config.only.empty() ||
        std::any_of(config.only.begin(), config.only.end(), [](const std::string& id) { return !id.empty() && id[0] == 'E'; });
    if (do_elliptic && elliptic_selected) {
        const auto samples = verify_elliptic(config.n_samples, config.seed);
        int passed = 0;
        double worst_yb = 0.0, worst_comp = 0.0;
        for (const auto& e : samples) {
            passed += e.pass;
            worst_yb = std::max(worst_yb, e.yang_baxter);
            worst_comp = std::max(worst_comp, e.components.max_abs());
            if (fmt == OutputFormat::Csv) {
                std::string line = "elliptic," + std::to_string(e.sample) + "," + std::to_string(e.sample_seed) + "," +
                                   num(e.u1) + "," + num(e.u3) + "," + num(e.k) + "," + num(e.yang_baxter);
                for (double v : e.components.values) line += "," + num(v);
                elliptic_lines += line + "," + (e.pass ? "true" : "false") + "\n";
            } else {
                ordered_json comps = ordered_json::object();
                for (std::size_t i = 0; i < 6; ++i) comps[ComponentResiduals::labels()[i]] = e.components.values[i];
                elliptic_lines += ordered_json{{"suite", "elliptic"},
                                               {"sample", e.sample},
                                               {"sample_seed", e.sample_seed},
                                               {"u1", e.u1},
                                               {"u3", e.u3},
                                               {"k", e.k},
                                               {"yang_baxter", e.yang_baxter},
                                               {"components", comps},
                                               {"tol", elliptic_tol},
                                               {"pass", e.pass}}
                                      .dump() +
                                  "\n";
            }
        }
        if (passed != config.n_samples) failing.push_back("elliptic");
        suites["elliptic"] = {{"samples", config.n_samples},
                              {"passed", passed},
                              {"failed", config.n_samples - passed},
                              {"max_yang_baxter_residual", worst_yb},
                              {"max_component_residual", worst_comp},
                              {"tol", elliptic_tol}};
    }

    if (fmt == OutputFormat::Csv) {
        if (!residual_lines.empty()) out.reports += kResidualHeader + residual_lines;
        if (!elliptic_lines.empty()) out.reports += kEllipticHeader + elliptic_lines;
    } else {
        out.reports = residual_lines + elliptic_lines;
    }

    out.failing_ids = failing;
    out.all_pass = failing.empty();
    ordered_json summary = {{"tool", "hypertheta"},
                            {"version", version_string},
                            {"catalog",
                             {{"path", catalog_path},
                              {"sha256", catalog_sha256},
                              {"format_version", catalog.format_version},
                              {"identities", catalog.identities.size()}}},
                            {"config", json::parse(config_to_json(config))},
                            {"output_format", format_name(fmt)},
                            {"suites", suites},
                            {"all_pass", out.all_pass},
                            {"failing_ids", failing}};
    // The hash covers the residual lines and every summary field above; wall
    // time is added afterwards and stays outside it.
    summary["determinism_hash"] = sha256_hex(out.reports + summary.dump());
    summary["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.summary = summary.dump(2) + "\n";
    return out;
}

}  // namespace hypertheta::harness
