#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "aes/error.hpp"
#include "aes/fock_oracle.hpp"
#include "aes/io.hpp"
#include "aes/moments.hpp"
#include "aes/verify.hpp"
#include "aes/zoo.hpp"

using namespace aes;

namespace {

struct Outcome {
    bool pass = true;
    double worst = 0;
    std::string note;
};

void track(Outcome& o, double value, double tol, const std::string& what) {
    if (!(value <= tol)) {
        if (o.pass) o.note = what;
        o.pass = false;
    }
    if (std::isfinite(value)) o.worst = std::max(o.worst, value / tol);
    else o.worst = INFINITY;
}

double infid(const std::vector<cplx>& a, const std::vector<cplx>& b) { return 1.0 - fidelity(a, b); }

double uni(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
cplx disk(std::mt19937_64& rng, double r) {
    const double rr = r * std::sqrt(uni(rng, 0, 1)), t = uni(rng, 0, 2 * PI);
    return std::polar(rr, t);
}

const FockOptions k128{.n_start = 128, .n_max = 128, .require_converged = false};

Outcome c1_commutators() {
    Outcome o;
    for (int N : {32, 64, 128}) {
        CommutatorReport r = commutator_check(N);
        for (const auto& x : r.results) track(o, x.deviation, 1e-12 * x.scale, x.relation + " N=" + std::to_string(N));
    }
    return o;
}

Outcome c2_eigen() {
    Outcome o;
    std::mt19937_64 rng(101);
    for (const auto& f : family_names())
        for (int k = 0; k < 20; ++k) {
            StateBundle b = random_state(f, rng);
            track(o, eigen_residual(b.spec, b.fock).value, 1e-7, f);
        }
    return o;
}

Outcome c3_matrix_route() {
    Outcome o;
    std::mt19937_64 rng(202);
    for (int k = 0; k < 10; ++k) {
        const SqueezeParam xi{uni(rng, 0, 0.75), uni(rng, 0, 2 * PI)};
        const cplx u = disk(rng, 1.5), z = disk(rng, 1.5);
        const int n = k % 4;
        StateBundle d = dsfs(n, xi, u, k128);
        track(o, d.fock.tail_mass, 1e-10, "dsfs tail");
        track(o, infid(d.fock.coeffs, apply_displacement(u, apply_squeeze(xi.xi(), fock_basis(n, 128))).coeffs), 1e-8, "dsfs");

        const CatParam c{disk(rng, 1.5), uni(rng, 0, 2), uni(rng, 0, 2 * PI)};
        StateBundle cs = cat_sdz(c, xi, z, k128);
        track(o, cs.fock.tail_mass, 1e-10, "cat_sdz tail");
        track(o, infid(cs.fock.coeffs, apply_displacement(z, apply_squeeze(xi.xi(), wrap_fock(cat_closed_fock(c, 128)))).coeffs),
              1e-8, "cat_sdz");

        const cplx lam = disk(rng, 1.0), eta{uni(rng, 0.5, 3.0), uni(rng, -1, 1)};
        const Mix mix{disk(rng, 1.0) + 0.2, disk(rng, 1.0)};
        const SqueezeParam xs{uni(rng, 0, 0.5), uni(rng, 0, 2 * PI)};
        const cplx zs = disk(rng, 1.0);
        StateBundle base = su11_is(lam, eta, mix, {}, Branch::Principal);
        StateBundle ds = su11_is_displaced_squeezed(lam, eta, xs, zs, mix, k128);
        FockVector m = apply_displacement(zs, apply_squeeze(xs.xi(), pad(base.fock, 128)));
        track(o, ds.fock.tail_mass, 1e-10, "su11_is_displaced_squeezed tail");
        track(o, infid(ds.fock.coeffs, m.coeffs), 1e-8, "su11_is_displaced_squeezed");
    }
    return o;
}

Outcome c4_closed_forms() {
    Outcome o;
    std::mt19937_64 rng(303);
    for (int k = 0; k < 20; ++k) {
        const SqueezeParam xi{uni(rng, 0, 0.75), uni(rng, 0, 2 * PI)};
        const cplx u = disk(rng, 1.5), z = disk(rng, 1.5);
        double nn = 0;
        for (auto c : dsfs_closed_fock(k % 5, xi, u, 160)) nn += std::norm(c);
        track(o, std::abs(nn - 1.0), 1e-9, "dsfs norm");
        const CatParam c{disk(rng, 1.5), uni(rng, 0, 2), uni(rng, 0, 2 * PI)};
        nn = 0;
        for (auto v : cat_sdz_hermite_fock(c, xi, z, 160)) nn += std::norm(v);
        track(o, std::abs(nn - 1.0), 1e-9, "cat_sdz norm");
        auto [cp, cm] = cat_sdz_amplitudes(c, xi, z);
        (void)cm;
        track(o, std::abs(cat_sdz_norm_inverse_square(c, xi, z) * std::norm(cp) - 1.0), 1e-9, "cat_sdz |C+|");
    }
    for (int k = 0; k < 50; ++k) {
        const CatParam c{disk(rng, 2.0), uni(rng, 0, 2), uni(rng, 0, 2 * PI)};
        MomentReport m = su11_report(cat(c).fock);
        const double u2 = std::norm(c.upsilon), e = std::exp(-2 * u2), t = c.tau, cs = std::cos(c.varphi);
        const double k0 = 0.5 * u2 * (1 + t * t - 2 * t * e * cs) / (1 + t * t + 2 * t * e * cs) + 0.25;
        track(o, std::abs(m.var_A - k0 / 2), 1e-10, "cat var K1");
        track(o, std::abs(m.var_B - k0 / 2), 1e-10, "cat var K2");
    }
    MomentReport ev = su11_report(even_cat(1.0).fock);
    track(o, std::abs(ev.var_A - (0.25 * std::tanh(1.0) + 0.125)), 1e-10, "even cat 0.315399");
    for (int k = 0; k < 100; ++k) {
        const cplx lam = disk(rng, 1.0), eta{uni(rng, 0.5, 3.0), uni(rng, -1, 1)};
        MomentReport m = su11_report(su11_is(lam, eta, {disk(rng, 1.0) + 0.2, disk(rng, 1.0)}).fock);
        const double k0 = m.mean_C, re = eta.real();
        track(o, std::abs(m.var_A / (k0 / (2 * re)) - 1), 1e-8, "IS var K1");
        track(o, std::abs(m.var_B / (std::norm(eta) * k0 / (2 * re)) - 1), 1e-8, "IS var K2");
        track(o, std::abs(m.covar - eta.imag() * k0 / (2 * re)) / (k0 / (2 * re)), 1e-8, "IS covar");
    }
    return o;
}

Outcome c5_reductions() {
    Outcome o;
    std::mt19937_64 rng(404);
    for (int k = 0; k < 10; ++k) {
        const SqueezeParam xi{uni(rng, 0, 0.75), uni(rng, 0, 2 * PI)};
        const cplx u = disk(rng, 1.5);
        track(o, infid(dsfs(0, xi, u).fock.coeffs, displaced_squeezed(xi, u).fock.coeffs), 1e-10, "dsfs(0)");
        const CatParam c{disk(rng, 1.5), uni(rng, 0.1, 2), uni(rng, 0, 2 * PI)};
        track(o, infid(cat_sdz(c, {0, 0}, 0.0).fock.coeffs, cat(c).fock.coeffs), 1e-10, "cat_sdz(0,0)");
        const cplx lam = disk(rng, 1.0);
        track(o, infid(su11_is(lam, 1.0).fock.coeffs, cat_closed_fock({std::sqrt(2.0 * lam), 1.0, 0.0}, 128)), 1e-10,
              "eta=1 cat");
        const cplx eta{uni(rng, 0.5, 3.0), uni(rng, -1, 1)};
        StateBundle cs = su11_is(-su11_delta(eta) / 2.0, eta);
        const SqueezeParam sq = SqueezeParam::from_zeta(-su11_omega(eta));
        track(o, infid(cs.fock.coeffs, displaced_squeezed(sq, 0.0).fock.coeffs), 1e-10, "CS/IS intersection");
    }
    return o;
}

Outcome c6_duality() {
    Outcome o;
    std::mt19937_64 rng(505);
    for (int k = 0; k < 20; ++k) {
        const SqueezeParam xi{uni(rng, 0.05, 0.75), uni(rng, 0, 2 * PI)};
        const cplx u = disk(rng, 1.5);
        const int n = k % 4;
        track(o, infid(dsfs(n, xi, u, {}, Branch::Principal).fock.coeffs, dsfs(n, xi, u, {}, Branch::Flipped).fock.coeffs),
              1e-9, "dsfs");
        const cplx lam = disk(rng, 1.0), eta{uni(rng, 0.5, 3.0), uni(rng, -1, 1)};
        const Mix mix{disk(rng, 1.0) + 0.2, disk(rng, 1.0)};
        track(o, infid(su11_is(lam, eta, mix, {}, Branch::Principal).fock.coeffs,
                       su11_is(lam, eta, mix, {}, Branch::Flipped).fock.coeffs),
              1e-9, "su11_is");
    }
    return o;
}

Outcome c7_uncertainty() {
    Outcome o;
    std::mt19937_64 rng(606);
    const auto& fams = family_names();
    for (int k = 0; k < 1000; ++k) {
        StateBundle b = random_state(fams[k % fams.size()], rng);
        track(o, -quadrature_report(b.fock).robertson_residual, 1e-10, b.family + " X");
        track(o, -su11_report(b.fock).robertson_residual, 1e-10, b.family + " K");
    }
    for (int k = 0; k < 20; ++k) {
        StateBundle d = displaced_squeezed({uni(rng, 0, 0.75), k % 2 ? PI : 0.0}, disk(rng, 1.5));
        IntelligenceResult r = intelligence_check(quadrature_report(d.fock), Intelligence::Ordinary);
        track(o, r.residual, std::min(r.tol, 1e-10), "ordinary IS displaced squeezed");
        StateBundle c = cat({disk(rng, 2.0), uni(rng, 0, 2), uni(rng, 0, 2 * PI)});
        IntelligenceResult rc = intelligence_check(su11_report(c.fock), Intelligence::Ordinary);
        track(o, rc.residual, rc.tol, "ordinary IS cat");
    }
    return o;
}

Outcome c8_ode() {
    Outcome o;
    std::mt19937_64 rng(707);
    std::vector<AnalyticState> states = {
        solve(dsfs_spec(2, {0.5, 0.3}, {0.7, 0.2}), {1, 0}, Branch::Principal),
        solve({{0.5, 1.0, 1.0 / 16.0, 0.0, 0.3}, 0.2}, {1, 0.5}),
        solve(cat_sdz_spec({1.0, 0.2}, {0.4, 0.2}, {0.3, 0.1}), {1, 0.3}),
        solve({{1.0, 0.0, 0.2, 0.3, 0.1}, 0.988}),
        solve(displaced_fock_spec(2, {0.3, 0.4})),
        solve(glauber_spec({0.5, 0.5})),
    };
    std::vector<bool> seen(6, false);
    for (const auto& st : states) {
        seen[static_cast<int>(st.tag)] = true;
        for (int k = 0; k < 50; ++k) track(o, ode_residual_fd(st, disk(rng, 2.0)), 1e-7, to_string(st.tag));
    }
    for (bool s : seen) track(o, s ? 0.0 : 1.0, 0.5, "case tag coverage");
    return o;
}

Outcome c9_cli() {
    Outcome o;
    for (const auto& r : run_all())
        for (const auto& c : r.checks) track(o, c.pass ? 0.0 : 1.0, 0.5, "verify " + r.suite + ": " + c.name);

    StateBundle b = cat_sdz({{0.9, -0.3}, 0.8, 0.7}, {0.5, 0.4}, {0.3, 0.6});
    const auto p = std::filesystem::temp_directory_path() / "aes_acceptance_roundtrip.txt";
    atomic_write(p, coefficients_text(b.fock.coeffs));
    const std::vector<cplx> back = read_coefficients(p);
    std::filesystem::remove(p);
    bool same = back.size() == b.fock.coeffs.size() &&
                std::memcmp(back.data(), b.fock.coeffs.data(), back.size() * sizeof(cplx)) == 0;
    const MomentReport m1 = moment_report(b.fock.coeffs, ObservablePair::X1X2), m2 = moment_report(back, ObservablePair::X1X2);
    same = same && std::memcmp(&m1, &m2, sizeof m1) == 0;
    track(o, same ? 0.0 : 1.0, 0.5, "coefficient round trip");

    for (const StateBundle& s : {glauber(0.0), glauber({1.2, -0.7}), even_cat(1.5)}) {
        const Field q = husimi_q(s.fock, husimi_grid(s.fock));
        track(o, std::abs(q.integral() - 1.0), 1e-3, "husimi " + s.family);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 operator algebra", c1_commutators},   {"2 eigen residuals", c2_eigen},
        {"3 matrix route", c3_matrix_route},      {"4 closed forms", c4_closed_forms},
        {"5 reductions", c5_reductions},          {"6 Kummer duality", c6_duality},
        {"7 uncertainty floor", c7_uncertainty},  {"8 ODE residual", c8_ode},
        {"9 CLI contract", c9_cli},
    };
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = e.what();
        }
        all = all && o.pass;
        std::printf("%s  criterion %-22s worst/tol=%.3g%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.worst,
                    o.pass ? "" : "  first failure: ", o.note.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
