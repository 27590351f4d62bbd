#pragma once

#include "hypertheta/addition.hpp"
#include "hypertheta/catalog.hpp"
#include "hypertheta/elliptic.hpp"
#include "hypertheta/sampling.hpp"
#include "hypertheta/theta.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertheta::harness {

enum ExitCode : int {
    exit_ok = 0,
    exit_numeric_failure = 2,
    exit_config_error = 3,
    exit_invalid_period = 4,
    exit_radius_exceeded = 5,
    exit_divisor_hit = 6,
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { JsonLines, Csv };
enum class Suite { Catalog, Addition, Elliptic, All };

std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& s);
std::string suite_name(Suite s);
Suite parse_suite(const std::string& s);

struct VerificationConfig {
    std::uint64_t seed = 20240611;
    int n_samples = 100;
    PrecisionPolicy pol;
    SamplingFamily tau_family;
    Suite suite = Suite::All;
    std::vector<std::string> only;
    // Empty when not set; elliptic tables default to CSV, the rest to JSON lines.
    std::optional<OutputFormat> output_format;
    std::string output_path;
    std::string summary_path;
    int jobs = 1;

    void validate() const;
};

// Fields present in the JSON object replace those of base.
VerificationConfig config_from_json(const std::string& text, VerificationConfig base = {});
std::string config_to_json(const VerificationConfig& config);

// "1.5", "-2i", "i", "0.3-0.1i", "1e-3+2e-2i"
cplx parse_complex(const std::string& token);
// "1", "-1", "1/2", "-1/2"
Rational parse_rational(const std::string& token);
Characteristic parse_characteristic(const std::string& text);
// Four reals (x_re, x_im, y_re, y_im) or two complex tokens.
EvalPoint parse_point(const std::string& text);
// Six reals (re, im for tau1, tau2, tau12) or three complex tokens.
PeriodMatrix parse_period(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

// Ids outside the catalog: A1..A15, E, E.yang-baxter and E.<component>.
bool is_static_id(const std::string& id);

struct EllipticSample {
    int sample = 0;
    std::uint64_t sample_seed = 0;
    double u1 = 0.0, u3 = 0.0, k = 0.0;
    double yang_baxter = 0.0;
    ComponentResiduals components;
    bool pass = false;
};

inline constexpr double elliptic_tol = 1e-10;
inline constexpr double elliptic_u_range = 2.0;

// u1, u3 uniform in [-2, 2], k uniform in [0, 1].
std::vector<EllipticSample> verify_elliptic(int n_samples, std::uint64_t seed);

struct RunOutput {
    std::string reports;       // per-sample residual lines
    std::string summary;       // RunReport JSON
    bool all_pass = false;
    std::vector<std::string> failing_ids;
};

// catalog_sha256 identifies the catalog file the identities were loaded from.
RunOutput run_verification(const VerificationConfig& config, const Catalog& catalog,
                           const std::string& catalog_path, const std::string& catalog_sha256);

// HYPERTHETA_CATALOG if set, otherwise the build tree
// data file, then the installed copy.
std::string default_catalog_path();

}  // namespace hypertheta::harness
