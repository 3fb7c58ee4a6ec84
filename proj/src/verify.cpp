#include "aes/verify.hpp"

#include <cmath>
#include <functional>

#include "aes/complexfn.hpp"
#include "aes/error.hpp"
#include "aes/fock_oracle.hpp"
#include "aes/moments.hpp"

namespace aes {

namespace {

using Check = std::function<CheckResult()>;

CheckResult upper(std::string name, double measured, double tol, std::string detail = {}) {
    return {std::move(name), measured, tol, std::isfinite(measured) && measured <= tol, std::move(detail)};
}

double infidelity(const FockVector& a, const FockVector& b) {
    const int N = std::max(a.dim, b.dim);
    return std::abs(1.0 - fidelity(pad(a, N).coeffs, pad(b, N).coeffs));
}

// independent checks run concurrently; each one owns its slot
std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
    std::vector<CheckResult> out(checks.size());
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < static_cast<int>(checks.size()); ++k) {
        try {
            out[k] = checks[k]();
        } catch (const std::exception& e) {
            out[k] = {"check " + std::to_string(k), NAN, 0.0, false, e.what()};
        }
    }
    return out;
}

double uni(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

cplx disk(std::mt19937_64& rng, double r) {
    const double rad = r * std::sqrt(uni(rng, 0.0, 1.0)), ang = uni(rng, 0.0, 2.0 * PI);
    return std::polar(rad, ang);
}

SqueezeParam draw_squeeze(std::mt19937_64& rng) { return {uni(rng, 0.0, 0.75), uni(rng, 0.0, 2.0 * PI)}; }

cplx draw_eta(std::mt19937_64& rng) { return {uni(rng, 0.5, 3.0), uni(rng, -1.0, 1.0)}; }

CatParam draw_cat(std::mt19937_64& rng) {
    for (;;) {
        CatParam c{disk(rng, 1.5), uni(rng, 0.0, 2.0), uni(rng, 0.0, 2.0 * PI)};
        if (1.0 + c.tau * c.tau + 2.0 * c.tau * std::exp(-2.0 * std::norm(c.upsilon)) * std::cos(c.varphi) > 1e-3) return c;
    }
}

Mix draw_mix(std::mt19937_64& rng) { return {disk(rng, 1.0) + 0.2, disk(rng, 1.0)}; }

// ---- suites ----

std::vector<Check> commutator_checks() {
    std::vector<Check> out;
    for (int N : {32, 64, 128})
        out.push_back([N] {
            CommutatorReport r = commutator_check(N);
            double worst = 0;
            std::string detail;
            for (const auto& c : r.results) {
                const double rel = c.deviation / c.scale;
                if (rel >= worst) {
                    worst = rel;
                    detail = c.relation;
                }
            }
            CheckResult res = upper("all relations N=" + std::to_string(N), worst, 1e-12, "worst: " + detail);
            res.pass = res.pass && r.all_pass();
            return res;
        });
    return out;
}

std::vector<Check> eigen_checks() {
    std::vector<Check> out;
    for (const std::string& fam : family_names())
        out.push_back([fam] {
            std::mt19937_64 rng(std::hash<std::string>{}(fam) ^ 0x5eedULL);
            double worst = 0;
            for (int k = 0; k < 5; ++k) {
                StateBundle b = random_state(fam, rng);
                worst = std::max(worst, eigen_residual(b.spec, b.fock).value);
            }
            return upper(fam + " (5 draws)", worst, 1e-7);
        });
    out.push_back([] {
        StateBundle b = raw_aes({{0.5, 1.0, 1.0 / 16.0, 0.0, 0.3}, 0.2}, {1.0, 0.5});
        return upper("degenerate Bessel spec", eigen_residual(b.spec, b.fock).value, 1e-7, to_string(b.analytic.tag));
    });
    out.push_back([] {
        StateBundle b = raw_aes({{1.0, 0.0, 0.2, 0.3, 0.1}, 0.988});
        return upper("first-order squeeze-like spec", eigen_residual(b.spec, b.fock).value, 1e-7, to_string(b.analytic.tag));
    });
    return out;
}

std::vector<Check> reduction_checks() {
    std::vector<Check> out;
    const SqueezeParam xi{0.5, 0.3};
    const cplx u{0.7, 0.2};
    out.push_back([=] { return upper("dsfs(0) = displaced squeezed", infidelity(dsfs(0, xi, u).fock, displaced_squeezed(xi, u).fock), 1e-10); });
    out.push_back([=] { return upper("displaced squeezed at xi=0 = glauber", infidelity(displaced_squeezed({}, u).fock, glauber(u).fock), 1e-10); });
    out.push_back([=] { return upper("displaced fock n=0 = glauber", infidelity(displaced_fock(0, u).fock, glauber(u).fock), 1e-10); });
    out.push_back([=] { return upper("cat tau=0 = glauber", infidelity(cat({u, 0.0, 0.3}).fock, glauber(u).fock), 1e-10); });
    out.push_back([=] {
        const CatParam c{u, 0.8, 1.1};
        return upper("cat_sdz at xi=z=0 = cat", infidelity(cat_sdz(c, {}, 0.0).fock, cat(c).fock), 1e-10);
    });
    out.push_back([=] {
        const cplx lam{0.4, 0.3};
        return upper("su11 IS eta=1 = even cat", infidelity(su11_is(lam, 1.0).fock, even_cat(std::sqrt(2.0 * lam)).fock), 1e-10);
    });
    out.push_back([] {
        const cplx eta{1.7, 0.6};
        const cplx lam = -su11_delta(eta) / 2.0, zeta = -su11_omega(eta);
        return upper("CS/IS intersection", infidelity(su11_is(lam, eta).fock, displaced_squeezed(SqueezeParam::from_zeta(zeta), 0.0).fock), 1e-10);
    });
    out.push_back([] {
        const cplx lam{0.2, 0.1}, eta{1.5, 0.3}, z{0.3, -0.4};
        const Mix m{1.0, 0.5};
        return upper("su11 displaced-squeezed at xi=0 = displaced",
                     infidelity(su11_is_displaced_squeezed(lam, eta, {}, z, m).fock, su11_is_displaced(lam, eta, z, m).fock), 1e-10);
    });
    // matrix-exponential route
    out.push_back([=] {
        const int N = 128;
        FockVector ref = apply_displacement(u, apply_squeeze(xi.xi(), fock_basis(2, N)));
        return upper("dsfs vs D S |2> matrices", infidelity(dsfs(2, xi, u).fock, ref), 1e-8);
    });
    out.push_back([] {
        const int N = 128;
        const CatParam c{1.0, 1.0, PI / 2};
        const SqueezeParam x{0.4, 0.7};
        const cplx z{0.5, -0.3};
        FockVector ref = apply_displacement(z, apply_squeeze(x.xi(), wrap_fock(cat_closed_fock(c, N))));
        return upper("cat_sdz vs D S |cat> matrices", infidelity(cat_sdz(c, x, z).fock, ref), 1e-8);
    });
    out.push_back([] {
        const int N = 128;
        const SqueezeParam x{0.3, 1.0};
        const cplx z{0.0, 0.4};
        FockVector is = pad(su11_is(0.2, 2.0).fock, N);
        FockVector ref = apply_displacement(z, apply_squeeze(x.xi(), is));
        return upper("su11 displaced-squeezed vs matrices", infidelity(su11_is_displaced_squeezed(0.2, 2.0, x, z).fock, ref), 1e-8);
    });
    return out;
}

std::vector<Check> uncertainty_checks() {
    std::vector<Check> out;
    out.push_back([] {
        std::mt19937_64 rng(62);
        double worst = 0;
        for (int k = 0; k < 100; ++k) {
            const cplx eta = draw_eta(rng), lam = disk(rng, 1.0);
            const MomentReport r = su11_report(su11_is(lam, eta, draw_mix(rng)).fock);
            const double base = r.mean_C / (2.0 * eta.real());
            worst = std::max({worst, std::abs(r.var_A / base - 1.0), std::abs(r.var_B / (std::norm(eta) * base) - 1.0),
                              std::abs(r.covar - eta.imag() * base) / (std::abs(eta.imag() * base) + base)});
        }
        return upper("su11 IS variance and covariance formulas (100 draws)", worst, 1e-8);
    });
    out.push_back([] {
        std::mt19937_64 rng(513);
        double worst = 0;
        for (int k = 0; k < 50; ++k) {
            const CatParam c{disk(rng, 2.0), uni(rng, 0.0, 2.0), uni(rng, 0.0, 2.0 * PI)};
            const double e = std::exp(-2.0 * std::norm(c.upsilon)) * std::cos(c.varphi);
            const double den = 1.0 + c.tau * c.tau + 2.0 * c.tau * e;
            if (den < 1e-3) continue;
            const double want = std::norm(c.upsilon) / 4.0 * (1.0 + c.tau * c.tau - 2.0 * c.tau * e) / den + 0.125;
            const MomentReport r = su11_report(cat(c).fock);
            worst = std::max({worst, std::abs(r.var_A - want), std::abs(r.var_B - want), std::abs(r.mean_C / 2.0 - want)});
        }
        return upper("cat K1/K2 variances (50 draws)", worst, 1e-10);
    });
    out.push_back([] {
        std::mt19937_64 rng(7);
        double worst = 0;
        for (const auto& fam : family_names())
            for (int k = 0; k < 4; ++k) {
                const StateBundle b = random_state(fam, rng);
                for (auto p : {ObservablePair::X1X2, ObservablePair::K1K2})
                    worst = std::max(worst, -moment_report(b.fock.coeffs, p).robertson_residual);
            }
        return upper("Robertson floor over the zoo", worst, 1e-10);
    });
    out.push_back([] {
        double worst = 0;
        for (double th : {0.0, PI})
            for (double s : {0.2, 0.5, 0.75}) {
                const MomentReport r = quadrature_report(displaced_squeezed({s, th}, {0.6, -0.4}).fock);
                worst = std::max(worst, intelligence_check(r, Intelligence::Ordinary).residual);
            }
        return upper("real-zeta displaced squeezed states are ordinary IS", worst, 1e-10);
    });
    out.push_back([] {
        std::mt19937_64 rng(99);
        double worst = 0;
        for (int k = 0; k < 20; ++k) {
            const MomentReport r = su11_report(cat(draw_cat(rng)).fock);
            worst = std::max(worst, intelligence_check(r, Intelligence::Ordinary).residual);
        }
        return upper("cats are ordinary K1-K2 IS", worst, 1e-10);
    });
    return out;
}

std::vector<Check> duality_checks() {
    std::vector<Check> out;
    for (int n = 0; n < 4; ++n)
        out.push_back([n] {
            const SqueezeParam xi{0.5, 0.3};
            const cplx u{0.7, 0.2};
            return upper("dsfs n=" + std::to_string(n) + " principal vs flipped",
                         infidelity(dsfs(n, xi, u, {}, Branch::Principal).fock, dsfs(n, xi, u, {}, Branch::Flipped).fock), 1e-9);
        });
    out.push_back([] {
        std::mt19937_64 rng(4);
        double worst = 0;
        for (int k = 0; k < 10; ++k) {
            const cplx eta = draw_eta(rng), lam = disk(rng, 1.0);
            const Mix m = draw_mix(rng);
            worst = std::max(worst, infidelity(su11_is(lam, eta, m, {}, Branch::Principal).fock,
                                               su11_is(lam, eta, m, {}, Branch::Flipped).fock));
        }
        return upper("su11 IS principal vs flipped (10 draws)", worst, 1e-9);
    });
    out.push_back([] {
        std::mt19937_64 rng(5);
        double worst = 0;
        for (int k = 0; k < 5; ++k) {
            const cplx eta = draw_eta(rng), lam = disk(rng, 1.0), z = disk(rng, 1.0);
            const SqueezeParam xi = draw_squeeze(rng);
            const Mix m = draw_mix(rng);
            worst = std::max(worst, infidelity(su11_is_displaced_squeezed(lam, eta, xi, z, m, {}, Branch::Principal).fock,
                                               su11_is_displaced_squeezed(lam, eta, xi, z, m, {}, Branch::Flipped).fock));
        }
        return upper("su11 displaced-squeezed principal vs flipped (5 draws)", worst, 1e-9);
    });
    out.push_back([] {
        std::mt19937_64 rng(6);
        double worst = 0;
        for (int k = 0; k < 200; ++k) {
            const cplx d = disk(rng, 3.0), x = disk(rng, 20.0);
            const double c = uni(rng, 0.0, 1.0) < 0.5 ? 0.5 : 1.5;
            auto [l, r] = kummer_transform_pair(d, c, x);
            worst = std::max(worst, std::abs(l - r) / std::max(std::abs(l), 1e-300));
        }
        return upper("Kummer transformation identity (200 samples)", worst, 1e-10);
    });
    return out;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"commutators", "eigen-residuals", "reductions", "uncertainty", "kummer-duality"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    std::vector<Check> checks;
    if (name == "commutators") checks = commutator_checks();
    else if (name == "eigen-residuals") checks = eigen_checks();
    else if (name == "reductions") checks = reduction_checks();
    else if (name == "uncertainty") checks = uncertainty_checks();
    else if (name == "kummer-duality") checks = duality_checks();
    else throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
    return {name, run_checks(checks)};
}

std::vector<SuiteReport> run_all() {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n));
    return out;
}

nlohmann::json to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr)},
            {"tolerance", c.tolerance},
            {"pass", c.pass},
            {"detail", c.detail}};
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", checks}};
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{
        "glauber", "displaced-fock", "displaced-squeezed", "dsfs", "cat", "even-cat", "odd-cat", "yurke-stoler", "cat-sdz",
        "su11-is", "su11-is-squeezed", "su11-is-displaced", "su11-is-displaced-squeezed"};
    return names;
}

StateBundle random_state(const std::string& f, std::mt19937_64& rng, const FockOptions& opts) {
    if (f == "glauber") return glauber(disk(rng, 1.5), opts);
    if (f == "displaced-fock") {
        const int n = static_cast<int>(uni(rng, 0.0, 5.0));
        return displaced_fock(n, disk(rng, 1.5), opts);
    }
    if (f == "displaced-squeezed") {
        const SqueezeParam xi = draw_squeeze(rng);
        return displaced_squeezed(xi, disk(rng, 1.5), opts);
    }
    if (f == "dsfs") {
        const int n = static_cast<int>(uni(rng, 0.0, 5.0));
        const SqueezeParam xi = draw_squeeze(rng);
        return dsfs(n, xi, disk(rng, 1.5), opts);
    }
    if (f == "cat") return cat(draw_cat(rng), opts);
    if (f == "even-cat") return even_cat(disk(rng, 1.5), opts);
    if (f == "odd-cat") {
        cplx u = disk(rng, 1.5);
        if (std::abs(u) < 0.05) u = 0.5;
        return odd_cat(u, opts);
    }
    if (f == "yurke-stoler") return yurke_stoler(disk(rng, 1.5), opts);
    if (f == "cat-sdz") {
        const CatParam c = draw_cat(rng);
        const SqueezeParam xi = draw_squeeze(rng);
        return cat_sdz(c, xi, disk(rng, 1.5), opts);
    }
    const cplx eta = draw_eta(rng), lam = disk(rng, 1.0);
    const Mix m = draw_mix(rng);
    if (f == "su11-is") return su11_is(lam, eta, m, opts);
    const SqueezeParam xi = draw_squeeze(rng);
    if (f == "su11-is-squeezed") return su11_is_squeezed(lam, eta, xi, m, opts);
    const cplx z = disk(rng, 1.5);
    if (f == "su11-is-displaced") return su11_is_displaced(lam, eta, z, m, opts);
    if (f == "su11-is-displaced-squeezed") return su11_is_displaced_squeezed(lam, eta, xi, z, m, opts);
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + f + "'");
}

}  // namespace aes
