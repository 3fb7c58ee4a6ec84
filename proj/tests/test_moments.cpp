#include <cmath>
#include <random>

#include "aes/error.hpp"
#include "aes/fock_oracle.hpp"
#include "aes/moments.hpp"
#include "aes/zoo.hpp"
#include "doctest.h"

using namespace aes;

namespace {

// var K1 = var K2 = <K0>/2 with <K0> = (<N> + 1/2)/2
double cat_k0(const CatParam& c) {
    const double u2 = std::norm(c.upsilon), e = std::exp(-2.0 * u2), t = c.tau;
    const double den = 1.0 + t * t + 2.0 * t * e * std::cos(c.varphi);
    const double n = u2 * (1.0 + t * t - 2.0 * t * e * std::cos(c.varphi)) / den;
    return 0.5 * n + 0.25;
}

}  // namespace

TEST_CASE("vacuum moments") {
    FockVector v = fock_basis(0, 32);
    MomentReport x = quadrature_report(v);
    CHECK(x.var_A == doctest::Approx(0.25));
    CHECK(x.var_B == doctest::Approx(0.25));
    MomentReport k = su11_report(v);
    CHECK(k.mean_C == doctest::Approx(0.25));
    CHECK(k.var_A == doctest::Approx(0.125));
    CHECK(k.var_B == doctest::Approx(0.125));
}

TEST_CASE("Glauber quadratures are minimal and equal") {
    StateBundle g = glauber({1.3, -0.7});
    MomentReport r = quadrature_report(g.fock);
    CHECK(std::abs(r.var_A - 0.25) < 1e-13);
    CHECK(std::abs(r.var_B - 0.25) < 1e-13);
    CHECK(std::abs(r.mean_A - 1.3) < 1e-13);
    CHECK(std::abs(r.mean_B + 0.7) < 1e-13);
    CHECK(intelligence_check(r, Intelligence::Ordinary).pass);
}

TEST_CASE("squeezed vacuum with real zeta is an ordinary IS") {
    StateBundle s = displaced_squeezed({0.7, 0.0}, 0.0);
    MomentReport r = quadrature_report(s.fock);
    CHECK(std::abs(r.heisenberg_residual) < 1e-10);
    CHECK(std::abs(r.var_A - 0.25 * std::exp(1.4)) < 1e-12);
}

TEST_CASE("Fock state |1> fails the ordinary check") {
    MomentReport r = quadrature_report(fock_basis(1, 32));
    CHECK(std::abs(std::sqrt(r.var_A * r.var_B) - 0.75) < 1e-14);
    CHECK_FALSE(intelligence_check(r, Intelligence::Ordinary).pass);
    CHECK(intelligence_check(r, Intelligence::Generalized).residual > 0.1);
}

TEST_CASE("even cat variances") {
    StateBundle e = even_cat(1.0);
    MomentReport r = su11_report(e.fock);
    const double want = 0.25 * std::tanh(1.0) + 0.125;
    CHECK(std::abs(r.var_A - want) < 1e-12);
    CHECK(std::abs(r.var_B - want) < 1e-12);
    CHECK(std::abs(want - 0.315398538989) < 1e-11);
}

TEST_CASE("cat variances over random parameters") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(-1.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        CatParam c{{1.4 * r(rng), 1.4 * r(rng)}, 1.0 + r(rng), PI * r(rng)};
        if (c.tau == 0.0) continue;
        StateBundle b = cat(c);
        MomentReport m = su11_report(b.fock);
        const double k0 = cat_k0(c);
        CHECK(std::abs(m.mean_C - k0) < 1e-10);
        CHECK(std::abs(m.var_A - k0 / 2.0) < 1e-10);
        CHECK(std::abs(m.var_B - k0 / 2.0) < 1e-10);
        CHECK(intelligence_check(m, Intelligence::Ordinary).pass);
    }
}

TEST_CASE("SU(1,1) IS moments follow the eta relations") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> r(-1.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        const cplx eta{1.75 + 1.25 * r(rng), r(rng)}, lam{r(rng), r(rng)};
        StateBundle b = su11_is(lam, eta, {1.2 + 0.2 * r(rng), {0.3 * r(rng), 0.3 * r(rng)}});
        MomentReport m = su11_report(b.fock);
        const double k0 = m.mean_C, re = eta.real();
        CHECK(std::abs(m.var_A - k0 / (2.0 * re)) < 1e-8 * k0);
        CHECK(std::abs(m.var_B - std::norm(eta) * k0 / (2.0 * re)) < 1e-8 * k0);
        CHECK(std::abs(m.covar - eta.imag() * k0 / (2.0 * re)) < 1e-8 * k0);
        CHECK(intelligence_check(m, Intelligence::Generalized).pass);
        if (std::abs(eta.imag()) > 0.1) CHECK_FALSE(intelligence_check(m, Intelligence::Ordinary).pass);
    }
}

TEST_CASE("real eta above one squeezes K2 relative to K1") {
    StateBundle b = su11_is({0.3, 0.0}, 1.6);
    MomentReport m = su11_report(b.fock);
    CHECK(std::abs(m.var_A / m.var_B - 1.0 / 2.56) < 1e-8);
}

TEST_CASE("photon statistics") {
    StateBundle g = glauber({0.8, 0.9});
    CHECK(std::abs(photon_stats(g.fock).mandel_q) < 1e-12);
    CHECK(photon_stats(fock_basis(3, 40)).mandel_q == doctest::Approx(-1.0));
    CHECK(photon_stats(odd_cat(1.0).fock).mandel_q < 0.0);
    CHECK_THROWS_AS(photon_stats(fock_basis(0, 40)), Error);
}

TEST_CASE("reports refuse unconverged vectors") {
    FockVector v = glauber(1.0).fock;
    v.tail_mass = 1e-6;
    CHECK_THROWS_AS(quadrature_report(v), Error);
    CHECK_THROWS_AS(su11_report(v), Error);
}

TEST_CASE("Robertson floor over random zoo states") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r(-1.0, 1.0);
    for (int k = 0; k < 40; ++k) {
        StateBundle b = cat_sdz({{r(rng), r(rng)}, 1.0 + r(rng), PI * r(rng)}, {0.75 * std::abs(r(rng)), PI * r(rng)},
                                {r(rng), r(rng)});
        CHECK(quadrature_report(b.fock).robertson_residual >= -1e-10);
        CHECK(su11_report(b.fock).robertson_residual >= -1e-10);
    }
}

TEST_CASE("Husimi Q") {
    FockVector v = fock_basis(0, 40);
    Grid g = husimi_grid(v);
    Field f = husimi_q(v, g);
    CHECK(std::abs(f.integral() - 1.0) < 1e-3);
    const int i = g.nx / 2 + 7, j = g.ny / 2 - 3;
    CHECK(std::abs(f.values[static_cast<size_t>(j) * g.nx + i] - std::exp(-std::norm(g.point(i, j))) / PI) < 1e-15);

    const cplx u{1.2, -0.5};
    StateBundle gl = glauber(u);
    Field q = husimi_q(gl.fock, husimi_grid(gl.fock));
    CHECK(std::abs(q.integral() - 1.0) < 1e-3);
    const cplx p = q.grid.point(40, 70);
    CHECK(std::abs(q.values[70 * static_cast<size_t>(q.grid.nx) + 40] - std::exp(-std::norm(p - u)) / PI) < 1e-13);

    StateBundle e = even_cat(1.5);
    Grid ge = husimi_grid(e.fock, 0.1);
    Field qe = husimi_q(e.fock, ge);
    Field qs = husimi_q_serial(e.fock, ge);
    CHECK(qe.values == qs.values);
    CHECK(std::abs(qe.integral() - 1.0) < 1e-3);
    double asym = 0;
    for (int jj = 0; jj < ge.ny; ++jj)
        for (int ii = 0; ii < ge.nx; ++ii)
            asym = std::max(asym, std::abs(qe.values[static_cast<size_t>(jj) * ge.nx + ii] -
                                           qe.values[static_cast<size_t>(ge.ny - 1 - jj) * ge.nx + (ge.nx - 1 - ii)]));
    CHECK(asym < 1e-14);
}

TEST_CASE("squeeze ellipse") {
    StateBundle s = displaced_squeezed({0.5, 0.0}, {0.4, 0.0});
    auto pts = squeeze_ellipse(s.fock, 4);
    CHECK(std::abs(pts[0].first - (0.4 + 0.5 * std::exp(0.5))) < 1e-12);
    CHECK(std::abs(pts[1].second - 0.5 * std::exp(-0.5)) < 1e-12);
}
