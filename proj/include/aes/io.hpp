#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "aes/moments.hpp"
#include "aes/zoo.hpp"

namespace aes {

// "a", "bi", "a+bi", "a-bi", "i", "-i"; no whitespace
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);
std::string format_real(double x);

enum class OutputFormat { Json, Csv };

struct RunConfig {
    int truncation = 256;
    double tail_threshold = 1e-14;
    double residual_tol = 1e-7;
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::Json;
    void validate() const;
    FockOptions fock_options() const;
};

RunConfig load_config(const std::filesystem::path& path);
// reads AES_WORKBENCH_CONFIG if set, otherwise defaults
RunConfig config_from_env();

nlohmann::json to_json(const RunConfig& c);
nlohmann::json to_json(const AlgebraSpec& s);
nlohmann::json to_json(const DerivedParams& p);
nlohmann::json to_json(const MomentReport& r);

struct StateRecord {
    StateBundle bundle;
    MomentReport quadrature;
    MomentReport su11;
    double eigen_residual = 0;
    int interior_dim = 0;
    RunConfig config;
};

StateRecord make_record(StateBundle bundle, const RunConfig& config);
// top-level {spec, derived, coefficients, moments, residuals, config}
nlohmann::json to_json(const StateRecord& r);

// columns n, Re c_n, Im c_n, |c_n|^2 at 17 significant digits
std::string coefficients_text(const std::vector<cplx>& c, char sep = ' ');
std::vector<cplx> parse_coefficients(const std::string& text);
std::vector<cplx> read_coefficients(const std::filesystem::path& path);
std::string moments_csv(const StateRecord& r);

// write to a sibling temporary then rename over the target
void atomic_write(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace aes
