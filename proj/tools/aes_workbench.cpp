#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aes/error.hpp"
#include "aes/io.hpp"
#include "aes/moments.hpp"
#include "aes/verify.hpp"
#include "aes/zoo.hpp"

namespace fs = std::filesystem;
using namespace aes;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3;

struct StateArgs {
    std::string family;
    std::string upsilon = "1", z = "0", lambda = "0", eta = "1", mix, beta;
    int n = 0;
    double s = 0, theta = 0, tau = 1, varphi = 0;
    std::string branch = "auto";
    std::string out;
    std::string format;
    std::optional<int> truncation;
    std::string config;
};

void add_state_options(CLI::App* cmd, StateArgs& a) {
    cmd->add_option("family", a.family, "state family")->required()->check(CLI::IsMember([] {
        auto v = family_names();
        v.push_back("raw-aes");
        return v;
    }()));
    cmd->add_option("--upsilon", a.upsilon, "complex amplitude (a+bi)");
    cmd->add_option("--z", a.z, "complex displacement");
    cmd->add_option("--lambda", a.lambda, "complex eigenvalue");
    cmd->add_option("--eta", a.eta, "complex intelligence parameter");
    cmd->add_option("--mix", a.mix, "even,odd weights");
    cmd->add_option("--beta", a.beta, "b1,b2,b3,b4,b5 for raw-aes");
    cmd->add_option("--n", a.n, "Fock index")->check(CLI::NonNegativeNumber);
    cmd->add_option("--s", a.s, "squeeze magnitude")->check(CLI::NonNegativeNumber);
    cmd->add_option("--theta", a.theta, "squeeze angle");
    cmd->add_option("--tau", a.tau, "superposition weight")->check(CLI::NonNegativeNumber);
    cmd->add_option("--varphi", a.varphi, "superposition phase");
    cmd->add_option("--branch", a.branch, "Kummer branch")->check(CLI::IsMember({"auto", "principal", "flipped"}));
    cmd->add_option("--out", a.out, "output directory");
    cmd->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--truncation", a.truncation, "maximum Fock dimension")->check(CLI::Range(8, 1 << 14));
    cmd->add_option("--config", a.config, "RunConfig JSON (overrides AES_WORKBENCH_CONFIG)");
}

std::vector<cplx> parse_list(const std::string& text, size_t want, const char* what) {
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.size() != want) throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(want) + " entries");
    return out;
}

RunConfig resolve_config(const StateArgs& a) {
    RunConfig c = a.config.empty() ? config_from_env() : load_config(a.config);
    if (!a.out.empty()) c.output_dir = a.out;
    if (!a.format.empty()) c.format = a.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (a.truncation) c.truncation = *a.truncation;
    c.validate();
    return c;
}

Branch parse_branch(const std::string& b) {
    if (b == "principal") return Branch::Principal;
    if (b == "flipped") return Branch::Flipped;
    return Branch::Auto;
}

StateBundle build_state(const StateArgs& a, const FockOptions& o) {
    const std::string& f = a.family;
    const cplx u = parse_complex(a.upsilon), z = parse_complex(a.z), lam = parse_complex(a.lambda), eta = parse_complex(a.eta);
    const SqueezeParam xi{a.s, a.theta};
    const Branch br = parse_branch(a.branch);
    Mix mix;
    if (!a.mix.empty()) {
        auto m = parse_list(a.mix, 2, "--mix");
        mix = {m[0], m[1]};
    }
    if (f == "glauber") return glauber(u, o);
    if (f == "displaced-fock") return displaced_fock(a.n, u, o);
    if (f == "displaced-squeezed") return displaced_squeezed(xi, u, o);
    if (f == "dsfs") return dsfs(a.n, xi, u, o, br);
    if (f == "cat") return cat({u, a.tau, a.varphi}, o);
    if (f == "even-cat") return even_cat(u, o);
    if (f == "odd-cat") return odd_cat(u, o);
    if (f == "yurke-stoler") return yurke_stoler(u, o);
    if (f == "cat-sdz") return cat_sdz({u, a.tau, a.varphi}, xi, z, o);
    if (f == "su11-is") return su11_is(lam, eta, mix, o, br);
    if (f == "su11-is-squeezed") return su11_is_squeezed(lam, eta, xi, mix, o, br);
    if (f == "su11-is-displaced") return su11_is_displaced(lam, eta, z, mix, o, br);
    if (f == "su11-is-displaced-squeezed") return su11_is_displaced_squeezed(lam, eta, xi, z, mix, o, br);
    if (a.beta.empty()) throw Error(ErrorKind::InvalidArgument, "raw-aes needs --beta");
    auto b = parse_list(a.beta, 5, "--beta");
    AlgebraSpec spec{{b[0], b[1], b[2], b[3], b[4]}, lam};
    return raw_aes(spec, mix, o, br);
}

std::string spec_csv(const StateRecord& r) {
    std::string out = "name,re,im\n";
    auto row = [&](const std::string& k, cplx v) { out += k + "," + format_real(v.real()) + "," + format_real(v.imag()) + "\n"; };
    const AlgebraSpec& s = r.bundle.spec;
    for (int i = 0; i < 5; ++i) row("beta" + std::to_string(i + 1), s.beta[i]);
    row("lambda", s.lambda);
    const DerivedParams& p = r.bundle.analytic.params;
    row("delta", p.delta);
    row("delta2", p.delta2);
    row("sigma", p.sigma);
    row("mu", p.mu);
    row("d", p.d);
    row("omega_plus", p.omega_plus);
    row("omega_minus", p.omega_minus);
    row("p", p.p);
    row("mix_even", r.bundle.analytic.mix.even);
    row("mix_odd", r.bundle.analytic.mix.odd);
    row("eigen_residual", r.eigen_residual);
    row("tail_mass", r.bundle.fock.tail_mass);
    return out;
}

void write_record(const StateRecord& r) {
    const fs::path dir = r.config.output_dir;
    const std::string stem = r.bundle.family;
    if (r.config.format == OutputFormat::Json) {
        atomic_write(dir / (stem + ".json"), to_json(r).dump(2) + "\n");
        atomic_write(dir / (stem + ".coeffs.txt"), coefficients_text(r.bundle.fock.coeffs));
    } else {
        atomic_write(dir / (stem + "_coefficients.csv"), coefficients_text(r.bundle.fock.coeffs, ','));
        atomic_write(dir / (stem + "_spec.csv"), spec_csv(r));
        atomic_write(dir / (stem + "_moments.csv"), moments_csv(r));
    }
}

int cmd_state(const StateArgs& a) {
    const RunConfig cfg = resolve_config(a);
    StateRecord r = make_record(build_state(a, cfg.fock_options()), cfg);
    write_record(r);
    std::printf("%s: %s, N=%d, tail=%.3g, eigen residual=%.3g -> %s\n", r.bundle.family.c_str(), to_string(r.bundle.analytic.tag),
                r.bundle.fock.dim, r.bundle.fock.tail_mass, r.eigen_residual, cfg.output_dir.c_str());
    return r.eigen_residual <= cfg.residual_tol ? kOk : kVerifyFailed;
}

// ---- images ----

void write_pgm(const fs::path& path, int w, int h, const std::vector<unsigned char>& px) {
    std::string data = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    data.append(px.begin(), px.end());
    atomic_write(path, data);
}

void write_ppm(const fs::path& path, int w, int h, const std::vector<unsigned char>& rgb) {
    std::string data = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    data.append(rgb.begin(), rgb.end());
    atomic_write(path, data);
}

void plot_pn(const StateRecord& r, const fs::path& dir) {
    const auto& c = r.bundle.fock.coeffs;
    int last = 0;
    for (int n = 0; n < static_cast<int>(c.size()); ++n)
        if (std::norm(c[n]) > 1e-6) last = n;
    std::string csv = "n,p\n";
    double pmax = 0;
    for (int n = 0; n < static_cast<int>(c.size()); ++n) {
        csv += std::to_string(n) + "," + format_real(std::norm(c[n])) + "\n";
        pmax = std::max(pmax, std::norm(c[n]));
    }
    atomic_write(dir / "pn_dist.csv", csv);
    const int bars = last + 1, bw = 8, w = bars * bw, h = 240;
    std::vector<unsigned char> rgb(static_cast<size_t>(w) * h * 3, 255);
    for (int n = 0; n < bars; ++n) {
        const int top = h - static_cast<int>(std::round((h - 4) * std::norm(c[n]) / pmax));
        for (int y = top; y < h; ++y)
            for (int x = n * bw + 1; x < (n + 1) * bw - 1; ++x) {
                unsigned char* p = &rgb[(static_cast<size_t>(y) * w + x) * 3];
                p[0] = 40, p[1] = 90, p[2] = 170;
            }
    }
    write_ppm(dir / "pn_dist.ppm", w, h, rgb);
}

void plot_husimi(const StateRecord& r, const fs::path& dir, double step) {
    const Grid g = husimi_grid(r.bundle.fock, step);
    const Field f = husimi_q(r.bundle.fock, g);
    std::string csv = "x,y,q\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const cplx p = g.point(i, j);
            csv += format_real(p.real()) + "," + format_real(p.imag()) + "," + format_real(f.values[static_cast<size_t>(j) * g.nx + i]) + "\n";
        }
    atomic_write(dir / "husimi_q.csv", csv);
    const double qmax = f.max();
    std::vector<unsigned char> px(static_cast<size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            px[static_cast<size_t>(g.ny - 1 - j) * g.nx + i] =
                static_cast<unsigned char>(255.0 - 255.0 * f.values[static_cast<size_t>(j) * g.nx + i] / qmax);
    write_pgm(dir / "husimi_q.pgm", g.nx, g.ny, px);
    std::printf("husimi-q integral = %.6f on %dx%d grid\n", f.integral(), g.nx, g.ny);
}

void plot_ellipse(const StateRecord& r, const fs::path& dir) {
    const auto pts = squeeze_ellipse(r.bundle.fock, 256);
    std::string csv = "# var_X1=" + format_real(r.quadrature.var_A) + " var_X2=" + format_real(r.quadrature.var_B) +
                      " covar=" + format_real(r.quadrature.covar) + "\nx1,x2\n";
    for (auto [x, y] : pts) csv += format_real(x) + "," + format_real(y) + "\n";
    atomic_write(dir / "squeeze_ellipse.csv", csv);
    double R = 1.0;
    for (auto [x, y] : pts) R = std::max({R, std::abs(x) * 1.2, std::abs(y) * 1.2});
    const int w = 301;
    std::vector<unsigned char> rgb(static_cast<size_t>(w) * w * 3, 255);
    auto put = [&](double x, double y) {
        const int i = static_cast<int>(std::lround((x / R + 1.0) * (w - 1) / 2.0));
        const int j = static_cast<int>(std::lround((1.0 - y / R) * (w - 1) / 2.0));
        if (i < 0 || j < 0 || i >= w || j >= w) return;
        unsigned char* p = &rgb[(static_cast<size_t>(j) * w + i) * 3];
        p[0] = 200, p[1] = 30, p[2] = 30;
    };
    for (int k = -150; k <= 150; ++k) put(k * R / 150.0, 0.0), put(0.0, k * R / 150.0);
    for (int k = 0; k < 4000; ++k) {
        const auto& a = pts[k * pts.size() / 4000];
        put(a.first, a.second);
    }
    write_ppm(dir / "squeeze_ellipse.ppm", w, w, rgb);
    std::printf("var_X1 = %.12g, var_X2 = %.12g, covar = %.3g\n", r.quadrature.var_A, r.quadrature.var_B, r.quadrature.covar);
}

int cmd_plot(const std::string& kind, const StateArgs& a, double step) {
    const RunConfig cfg = resolve_config(a);
    StateRecord r = make_record(build_state(a, cfg.fock_options()), cfg);
    const fs::path dir = cfg.output_dir;
    if (kind == "pn-dist") plot_pn(r, dir);
    else if (kind == "husimi-q") plot_husimi(r, dir, step);
    else plot_ellipse(r, dir);
    return kOk;
}

int cmd_verify(const std::string& suite, const std::string& out) {
    std::vector<SuiteReport> reports;
    if (suite == "all") reports = run_all();
    else reports.push_back(run_suite(suite));
    nlohmann::json j = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& c : r.checks)
            std::printf("[%s] %-18s %-58s measured=%-11.3g tol=%.1g %s\n", c.pass ? "PASS" : "FAIL", r.suite.c_str(), c.name.c_str(),
                        c.measured, c.tolerance, c.detail.c_str());
        ok = ok && r.all_pass();
        j.push_back(to_json(r));
    }
    const fs::path dir = out.empty() ? fs::path(config_from_env().output_dir) : fs::path(out);
    atomic_write(dir / ("verify_" + suite + ".json"), nlohmann::json{{"pass", ok}, {"suites", j}}.dump(2) + "\n");
    return ok ? kOk : kVerifyFailed;
}

int cmd_moments(const std::string& file, const std::string& out) {
    FockVector v;
    v.coeffs = read_coefficients(file);
    v.dim = static_cast<int>(v.coeffs.size());
    const MomentReport q = moment_report(v.coeffs, ObservablePair::X1X2), k = moment_report(v.coeffs, ObservablePair::K1K2);
    const std::string text = nlohmann::json{{"quadrature", to_json(q)}, {"su11", to_json(k)}}.dump(2) + "\n";
    if (out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(out, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-photon algebra eigenstate workbench"};
    app.require_subcommand(1);

    StateArgs sargs;
    auto* st = app.add_subcommand("state", "construct a state and write its records");
    add_state_options(st, sargs);

    std::string suite, vout;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember([] {
        auto v = suite_names();
        v.push_back("all");
        return v;
    }()));
    ver->add_option("--out", vout, "output directory");

    StateArgs pargs;
    std::string kind;
    double step = 0.05;
    auto* plot = app.add_subcommand("plot", "write a figure and its data grid");
    plot->add_option("kind", kind, "pn-dist, husimi-q or squeeze-ellipse")->required()->check(CLI::IsMember({"pn-dist", "husimi-q", "squeeze-ellipse"}));
    add_state_options(plot, pargs);
    plot->add_option("--step", step, "Husimi grid spacing")->check(CLI::PositiveNumber);

    std::string cfile, mout;
    auto* mom = app.add_subcommand("moments", "moment reports from a coefficient file");
    mom->add_option("file", cfile, "coefficient file")->required()->check(CLI::ExistingFile);
    mom->add_option("--out", mout, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (st->parsed()) return cmd_state(sargs);
        if (ver->parsed()) return cmd_verify(suite, vout);
        if (plot->parsed()) return cmd_plot(kind, pargs, step);
        if (mom->parsed()) return cmd_moments(cfile, mout);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.kind() == ErrorKind::InvalidArgument ? kUsage : kNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kNumerical;
    }
    return kUsage;
}
