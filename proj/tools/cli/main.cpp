#include "hypertheta/addition.hpp"
#include "hypertheta/catalog.hpp"
#include "hypertheta/digest.hpp"
#include "hypertheta/errors.hpp"
#include "hypertheta/harness.hpp"
#include "hypertheta/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hypertheta;
using namespace hypertheta::harness;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
}

std::string format_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g %c %.17gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
    return buf;
}

struct EvalOptions {
    std::string ch = "0,0,0,0";
    std::string z = "0,0";
    std::string tau = "i,i,0";
    bool ratio = false;
    bool doubled = false;
    bool json = false;
    std::string config;
    double eps_tail = PrecisionPolicy{}.eps_tail;
    int max_radius = PrecisionPolicy{}.max_radius;
};

int run_eval(const EvalOptions& o, const CLI::App& sub) {
    std::string ch_text = o.ch, z_text = o.z, tau_text = o.tau;
    PrecisionPolicy pol;
    bool ratio = o.ratio;
    if (!o.config.empty()) {
        const auto j = nlohmann::json::parse(read_file(o.config), nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw ConfigError("eval config must be a JSON object");
        auto text = [&](const char* key, std::string& dst) {
            if (j.contains(key)) dst = j.at(key).is_string() ? j.at(key).get<std::string>() : j.at(key).dump();
        };
        text("char", ch_text);
        text("z", z_text);
        text("tau", tau_text);
        for (auto* s : {&ch_text, &z_text, &tau_text})
            if (!s->empty() && s->front() == '[') *s = s->substr(1, s->size() - 2);
        pol.eps_tail = j.value("eps_tail", pol.eps_tail);
        pol.max_radius = j.value("max_radius", pol.max_radius);
        ratio = j.value("ratio", ratio);
    }
    if (sub.count("--char")) ch_text = o.ch;
    if (sub.count("--z")) z_text = o.z;
    if (sub.count("--tau")) tau_text = o.tau;
    if (sub.count("--eps-tail") || o.config.empty()) pol.eps_tail = o.eps_tail;
    if (sub.count("--max-radius") || o.config.empty()) pol.max_radius = o.max_radius;
    if (sub.count("--ratio")) ratio = true;
    try {
        pol.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const Characteristic ch = parse_characteristic(ch_text);
    const EvalPoint z = parse_point(z_text);
    PeriodMatrix tau = parse_period(tau_text);
    require_valid(tau);
    if (o.doubled) tau = double_periods(tau);

    cplx value;
    int radius = 0;
    if (ratio) {
        value = f_eval(ch, z, tau, pol).value;
        radius = std::max(theta_eval_detailed(ch, z, tau, pol).radius,
                          theta_eval_detailed(Characteristic::integer(0, 0, 0, 0), z, tau, pol).radius);
    } else {
        const ThetaValue tv = theta_eval_detailed(ch, z, tau, pol);
        value = tv.value;
        radius = tv.radius;
    }
    if (o.json) {
        nlohmann::ordered_json j = {{"characteristic", ch.to_string()},
                                    {"quantity", ratio ? "ratio" : "theta"},
                                    {"scale", o.doubled ? "doubled" : "base"},
                                    {"value", {{"re", value.real()}, {"im", value.imag()}}},
                                    {"radius", radius},
                                    {"eps_tail", pol.eps_tail}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (ratio ? "F" : "theta") << ch.to_string() << " = " << format_complex(value) << "\n"
                  << "radius = " << radius << "\n";
    }
    return exit_ok;
}

struct VerifyOptions {
    std::string config;
    std::string catalog;
    std::uint64_t seed = 0;
    int samples = 0;
    double eps_tail = 0.0, rel_tol = 0.0, abs_tol = 0.0;
    int max_radius = 0;
    std::string only;
    std::string format;
    std::string out;
    std::string summary;
    std::string suite;
    int jobs = 1;
};

std::string resolve_catalog_path(const std::string& flag) { return flag.empty() ? default_catalog_path() : flag; }

int run_verify(const VerifyOptions& o, const CLI::App& sub) {
    VerificationConfig cfg;
    if (!o.config.empty()) cfg = config_from_json(read_file(o.config));
    if (sub.count("--seed")) cfg.seed = o.seed;
    if (sub.count("--samples")) cfg.n_samples = o.samples;
    if (sub.count("--eps-tail")) cfg.pol.eps_tail = o.eps_tail;
    if (sub.count("--rel-tol")) cfg.pol.rel_tol = o.rel_tol;
    if (sub.count("--abs-tol")) cfg.pol.abs_tol = o.abs_tol;
    if (sub.count("--max-radius")) cfg.pol.max_radius = o.max_radius;
    if (sub.count("--only")) {
        cfg.only = split_list(o.only);
        std::erase(cfg.only, std::string());
    }
    if (sub.count("--format")) cfg.output_format = parse_format(o.format);
    if (sub.count("--out")) cfg.output_path = o.out;
    if (sub.count("--summary")) cfg.summary_path = o.summary;
    if (sub.count("--suite")) cfg.suite = parse_suite(o.suite);
    if (sub.count("--jobs")) cfg.jobs = o.jobs;
    cfg.validate();

    const std::string path = resolve_catalog_path(o.catalog);
    std::string text;
    Catalog catalog;
    try {
        text = read_file(path);
        catalog = catalog_from_json(text);
    } catch (const CatalogError& e) {
        throw ConfigError(e.what());
    }

    const RunOutput run = run_verification(cfg, catalog, path, sha256_hex(text));
    if (!cfg.output_path.empty()) write_file(cfg.output_path, run.reports);
    if (!cfg.summary_path.empty())
        write_file(cfg.summary_path, run.summary);
    else
        std::cout << run.summary;
    if (!run.all_pass) {
        std::cerr << "failing:";
        for (const auto& id : run.failing_ids) std::cerr << " " << id;
        std::cerr << "\n";
        return exit_numeric_failure;
    }
    return exit_ok;
}

int run_list(const std::string& format, const std::string& catalog_flag) {
    const std::string path = resolve_catalog_path(catalog_flag);
    std::string text;
    Catalog catalog;
    try {
        text = read_file(path);
        catalog = catalog_from_json(text);
    } catch (const CatalogError& e) {
        throw ConfigError(e.what());
    }
    if (format == "json") {
        std::cout << text;
        return exit_ok;
    }
    if (format != "text") throw ConfigError("list format must be text or json");
    for (const auto& idty : catalog.identities) {
        std::cout << idty.id << "\t" << idty.family << "\t" << domain_name(idty.domain) << "\t" << idty.summary;
        if (idty.root) std::cout << "\t[sign-resolved]";
        for (const auto& f : idty.flags) std::cout << "\t{" << f << "}";
        std::cout << "\n";
    }
    for (const auto& f : addition_formulas()) {
        std::cout << f.id << "\taddition\tTwoPoint\tF" << f.ch.to_string() << "(p1+p2) = ";
        for (std::size_t i = 0; i < f.numerator.size(); ++i) std::cout << (i ? "*" : "") << f.numerator[i];
        std::cout << " / ";
        for (std::size_t i = 0; i < f.denominator.size(); ++i) std::cout << (i ? "*" : "") << f.denominator[i];
        std::cout << "\n";
    }
    std::cout << "E.yang-baxter\telliptic\tOnePoint\tX(u3) Z(u1+u3) X(u1) = Z(u1) X(u1+u3) Z(u3)\n";
    for (const auto& label : ComponentResiduals::labels())
        std::cout << "E." << label << "\telliptic\tOnePoint\tspherical relation, component " << label << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-2 theta functions with characteristics and identity verification"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    EvalOptions eo;
    auto* eval = app.add_subcommand("eval", "Evaluate a theta function (or ratio) at one point");
    eval->add_option("--char", eo.ch, "Characteristic a,c,b,d; entries may be n/2");
    eval->add_option("--z", eo.z, "Point: x_re,x_im,y_re,y_im or two complex numbers");
    eval->add_option("--tau", eo.tau, "Period matrix: six reals or three complex numbers tau1,tau2,tau12");
    eval->add_flag("--ratio", eo.ratio, "Divide by theta[0 0; 0 0] at the same point");
    eval->add_flag("--doubled", eo.doubled, "Evaluate at the doubled period matrix");
    eval->add_flag("--json", eo.json, "Print a JSON object");
    eval->add_option("--eps-tail", eo.eps_tail, "Bound on the neglected lattice tail");
    eval->add_option("--max-radius", eo.max_radius, "Largest allowed summation radius");
    eval->add_option("--config", eo.config, "JSON file with char, z, tau, eps_tail, max_radius, ratio");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Verify the identity catalog, the addition law and the elliptic relations");
    verify->add_option("--config", vo.config, "JSON config file; flags override it");
    verify->add_option("--catalog", vo.catalog, "Catalog file (default: HYPERTHETA_CATALOG or the shipped file)");
    verify->add_option("--suite", vo.suite, "catalog, addition, elliptic or all");
    verify->add_option("--seed", vo.seed, "Run seed");
    verify->add_option("--samples", vo.samples, "Samples per identity");
    verify->add_option("--eps-tail", vo.eps_tail, "Bound on the neglected lattice tail");
    verify->add_option("--rel-tol", vo.rel_tol, "Relative residual tolerance");
    verify->add_option("--abs-tol", vo.abs_tol, "Absolute residual tolerance");
    verify->add_option("--max-radius", vo.max_radius, "Largest allowed summation radius");
    verify->add_option("--only", vo.only, "Comma-separated identity ids");
    verify->add_option("--format", vo.format, "Residual report format: jsonl or csv");
    verify->add_option("--out", vo.out, "Residual report file");
    verify->add_option("--summary", vo.summary, "Run report file (default: stdout)");
    verify->add_option("--jobs", vo.jobs, "Worker threads for catalog samples");

    std::string list_format = "text";
    std::string list_catalog;
    auto* list = app.add_subcommand("list", "List catalog identities, addition formulas and elliptic relations");
    list->add_option("--format", list_format, "text or json (json prints the catalog file verbatim)");
    list->add_option("--catalog", list_catalog, "Catalog file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config_error;
    }

    try {
        if (*eval) return run_eval(eo, *eval);
        if (*verify) return run_verify(vo, *verify);
        if (*list) return run_list(list_format, list_catalog);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const InvalidPeriod& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_period;
    } catch (const RadiusExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_radius_exceeded;
    } catch (const DivisorHit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_divisor_hit;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric_failure;
    }
    return exit_config_error;
}
