#include "aes/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "aes/error.hpp"
#include "aes/fock_oracle.hpp"

namespace aes {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

double parse_real(std::string_view s, const std::string& whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') bad("malformed number in '" + whole + "'");
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) bad("malformed number in '" + whole + "'");
    return v;
}

double parse_imag_coeff(std::string_view s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, whole);
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json cvec(const std::vector<cplx>& v) {
    json a = json::array();
    for (auto z : v) a.push_back(cjson(z));
    return a;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    if (text.empty()) bad("empty complex number");
    for (char ch : text)
        if (std::isspace(static_cast<unsigned char>(ch))) bad("whitespace in complex number '" + text + "'");
    std::string_view s(text);
    if (s.back() != 'i') return {parse_real(s, text), 0.0};
    s.remove_suffix(1);
    size_t split = std::string_view::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imag_coeff(s, text)};
    return {parse_real(s.substr(0, split), text), parse_imag_coeff(s.substr(split), text)};
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(cplx z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

void RunConfig::validate() const {
    if (truncation < 8) bad("truncation must be >= 8");
    if (!(tail_threshold > 0) || !(residual_tol > 0)) bad("thresholds must be positive");
}

FockOptions RunConfig::fock_options() const {
    FockOptions o;
    o.n_max = truncation;
    o.n_start = std::min(o.n_start, truncation);
    o.tail_threshold = tail_threshold;
    return o;
}

RunConfig load_config(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        bad("config " + path.string() + ": " + e.what());
    }
    RunConfig c;
    try {
        c.truncation = j.value("truncation", c.truncation);
        c.tail_threshold = j.value("tail_threshold", c.tail_threshold);
        c.residual_tol = j.value("residual_tol", c.residual_tol);
        c.output_dir = j.value("output_dir", c.output_dir);
        const std::string fmt = j.value("format", std::string("json"));
        if (fmt == "json") c.format = OutputFormat::Json;
        else if (fmt == "csv") c.format = OutputFormat::Csv;
        else bad("config format must be json or csv");
    } catch (const json::exception& e) {
        bad("config " + path.string() + ": " + e.what());
    }
    c.validate();
    return c;
}

RunConfig config_from_env() {
    const char* p = std::getenv("AES_WORKBENCH_CONFIG");
    if (p == nullptr || *p == '\0') return {};
    return load_config(p);
}

json to_json(const RunConfig& c) {
    return {{"truncation", c.truncation},
            {"tail_threshold", c.tail_threshold},
            {"residual_tol", c.residual_tol},
            {"output_dir", c.output_dir},
            {"format", c.format == OutputFormat::Json ? "json" : "csv"}};
}

json to_json(const AlgebraSpec& s) {
    json b = json::array();
    for (auto z : s.beta) b.push_back(cjson(z));
    return {{"beta", b}, {"lambda", cjson(s.lambda)}};
}

json to_json(const DerivedParams& p) {
    return {{"delta", cjson(p.delta)},     {"delta2", cjson(p.delta2)},           {"sigma", cjson(p.sigma)},
            {"mu", cjson(p.mu)},           {"d", cjson(p.d)},                     {"omega_plus", cjson(p.omega_plus)},
            {"omega_minus", cjson(p.omega_minus)}, {"p", cjson(p.p)}, {"scale", cjson(p.scale)},
            {"gauss", cjson(p.gauss)}};
}

json to_json(const MomentReport& r) {
    return {{"pair", to_string(r.pair)},
            {"mean_A", r.mean_A},
            {"mean_B", r.mean_B},
            {"var_A", r.var_A},
            {"var_B", r.var_B},
            {"covar", r.covar},
            {"mean_C", r.mean_C},
            {"robertson_residual", r.robertson_residual},
            {"heisenberg_residual", r.heisenberg_residual}};
}

StateRecord make_record(StateBundle bundle, const RunConfig& config) {
    StateRecord r;
    r.bundle = std::move(bundle);
    r.config = config;
    r.quadrature = quadrature_report(r.bundle.fock, config.tail_threshold);
    r.su11 = su11_report(r.bundle.fock, config.tail_threshold);
    Residual res = eigen_residual(r.bundle.spec, r.bundle.fock, config.tail_threshold);
    r.eigen_residual = res.value;
    r.interior_dim = res.interior_dim;
    return r;
}

json to_json(const StateRecord& r) {
    const StateBundle& b = r.bundle;
    json params = json::object();
    for (const auto& [k, v] : b.params) params[k] = cjson(v);
    json derived = to_json(b.analytic.params);
    derived["case"] = to_string(b.analytic.tag);
    derived["mix"] = {{"even", cjson(b.analytic.mix.even)}, {"odd", cjson(b.analytic.mix.odd)}};
    derived["norm"] = cjson(b.analytic.norm);
    json moments = {{"quadrature", to_json(r.quadrature)}, {"su11", to_json(r.su11)}};
    try {
        PhotonStats ps = photon_stats(b.fock, r.config.tail_threshold);
        moments["photon"] = {{"mean_n", ps.mean_n}, {"var_n", ps.var_n}, {"mandel_q", ps.mandel_q}};
    } catch (const Error&) {
        moments["photon"] = {{"mean_n", 0.0}, {"var_n", 0.0}, {"mandel_q", nullptr}};
    }
    return {{"family", b.family},
            {"params", params},
            {"spec", to_json(b.spec)},
            {"derived", derived},
            {"coefficients",
             {{"dim", b.fock.dim}, {"tail_mass", b.fock.tail_mass}, {"values", cvec(b.fock.coeffs)}}},
            {"moments", moments},
            {"residuals",
             {{"eigen", r.eigen_residual},
              {"interior_dim", r.interior_dim},
              {"recurrence", b.fock.recurrence_residual},
              {"tail_mass", b.fock.tail_mass},
              {"pass", r.eigen_residual <= r.config.residual_tol}}},
            {"config", to_json(r.config)}};
}

std::string coefficients_text(const std::vector<cplx>& c, char sep) {
    std::string out = sep == ',' ? "n,re,im,abs2\n" : "# n re im abs2\n";
    char buf[128];
    for (size_t n = 0; n < c.size(); ++n) {
        std::snprintf(buf, sizeof buf, "%zu%c%.17g%c%.17g%c%.17g\n", n, sep, c[n].real(), sep, c[n].imag(), sep,
                      std::norm(c[n]));
        out += buf;
    }
    return out;
}

std::vector<cplx> parse_coefficients(const std::string& text) {
    std::vector<cplx> c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::string sn, sr, si;
        if (!(ls >> sn >> sr >> si)) bad("malformed coefficient line '" + line + "'");
        const double re = parse_real(sr, line), im = parse_real(si, line);
        if (std::stoul(sn) != c.size()) bad("coefficient index out of order at '" + line + "'");
        c.emplace_back(re, im);
    }
    return c;
}

std::vector<cplx> read_coefficients(const std::filesystem::path& path) { return parse_coefficients(read_file(path)); }

std::string moments_csv(const StateRecord& r) {
    std::string out = "pair,mean_A,mean_B,var_A,var_B,covar,mean_C,robertson_residual,heisenberg_residual\n";
    for (const MomentReport* m : {&r.quadrature, &r.su11}) {
        out += to_string(m->pair);
        for (double v : {m->mean_A, m->mean_B, m->var_A, m->var_B, m->covar, m->mean_C, m->robertson_residual,
                         m->heisenberg_residual})
            out += "," + format_real(v);
        out += "\n";
    }
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) bad("cannot read " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace aes
