#include <algorithm>
#include <cmath>
#include <random>

#include "aes/error.hpp"
#include "aes/fock_oracle.hpp"
#include "aes/zoo.hpp"
#include "doctest.h"

using namespace aes;

namespace {

ComplexMatrix ent(const OperatorMatrix& m) { return m.entries; }

double interior_max(const ComplexMatrix& m, int N) {
    double d = 0;
    for (int i = 0; i < N - kEdgeBand; ++i)
        for (int j = 0; j < N - kEdgeBand; ++j) d = std::max(d, std::abs(m(i, j)));
    return d;
}

}  // namespace

TEST_CASE("ladder matrices") {
    const int N = 16;
    ComplexMatrix a = ent(annihilation(N)), ad = ent(creation(N));
    ComplexMatrix c = a * ad - ad * a - ent(identity_op(N));
    CHECK(interior_max(c, N) < 1e-14);
    ComplexMatrix nn = ad * a - ent(number_op(N));
    CHECK(nn.max_abs() < 1e-14);
}

TEST_CASE("commutator report") {
    for (int N : {32, 64, 128}) {
        CommutatorReport r = commutator_check(N);
        CHECK(r.dim == N);
        CHECK(r.results.size() >= 11);
        for (const auto& x : r.results) {
            INFO(x.relation << " N=" << N);
            CHECK(x.pass);
        }
    }
}

TEST_CASE("build_element") {
    const int N = 12;
    AlgebraSpec s{{0.5, {0.1, 0.2}, 0.3, {0, 1}, 2.0}, 0};
    ComplexMatrix m = ent(build_element(s, N));
    ComplexMatrix a = ent(annihilation(N)), ad = ent(creation(N)), n = ent(number_op(N));
    ComplexMatrix want = cplx(0.5) * n + cplx(0.1, 0.2) * (a * a) + cplx(0.3) * (ad * ad) + cplx(0, 1) * a + cplx(2.0) * ad;
    CHECK((m - want).max_abs() < 1e-14);
}

TEST_CASE("eigen residual") {
    CHECK(eigen_residual({{0, 0, 0, 1, 0}, 0.0}, fock_basis(0, 32)).value == 0.0);
    StateBundle g = glauber(1.0, {.n_start = 64, .n_max = 64});
    CHECK(eigen_residual(g.spec, g.fock).value <= 1e-10);
    StateBundle d = dsfs(2, {0.5, 0.3}, {0.7, 0.2}, {.n_start = 128, .n_max = 128});
    CHECK(eigen_residual(d.spec, d.fock).value <= 1e-8);
    FockVector bad = g.fock;
    bad.tail_mass = 1e-3;
    CHECK_THROWS_AS(eigen_residual(g.spec, bad), Error);
}

TEST_CASE("matrix exponentials") {
    const int N = 64;
    ComplexMatrix d = displacement_matrix({0.4, -0.3}, N);
    ComplexMatrix dd = displacement_matrix({-0.4, 0.3}, N);
    CHECK(interior_max(d * dd - ComplexMatrix::identity(N), N - 20) < 1e-12);
    ComplexMatrix s0 = squeeze_matrix(0.0, N);
    CHECK((s0 - ComplexMatrix::identity(N)).max_abs() < 1e-15);
}

TEST_CASE("displacing the vacuum gives a Glauber state") {
    const cplx u{0.9, 0.4};
    FockVector v = apply_displacement(u, fock_basis(0, 96));
    std::vector<cplx> want = glauber_closed_fock(u, 96);
    for (int n = 0; n < 40; ++n) CHECK(std::abs(v.coeffs[n] - want[n]) < 1e-13);
}

TEST_CASE("zero squeeze is the identity") {
    FockVector p = wrap_fock(cat_closed_fock({{0.8, 0.1}, 0.7, 0.4}, 64));
    FockVector q = apply_squeeze(0.0, p);
    for (int n = 0; n < 64; ++n) CHECK(std::abs(p.coeffs[n] - q.coeffs[n]) < 1e-15);
}

TEST_CASE("squeezed vacuum from the matrix route") {
    const SqueezeParam xi{0.6, 0.8};
    FockVector v = apply_squeeze(xi.xi(), fock_basis(0, 128));
    std::vector<cplx> want = displaced_squeezed_closed_fock(xi, 0.0, 128);
    CHECK(1.0 - fidelity(v.coeffs, want) < 1e-12);
    CHECK(std::abs(v.norm - 1.0) < 1e-10);
}

TEST_CASE("matrix route matches the analytic cat_sdz") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(-1.0, 1.0);
    for (int k = 0; k < 5; ++k) {
        CatParam c{{r(rng), r(rng)}, 1.0 + 0.5 * r(rng), 3.0 * r(rng)};
        SqueezeParam xi{0.75 * std::abs(r(rng)), 3.0 * r(rng)};
        cplx z{r(rng), r(rng)};
        FockVector start = wrap_fock(cat_closed_fock(c, 128));
        FockVector m = apply_displacement(z, apply_squeeze(xi.xi(), start));
        StateBundle b = cat_sdz(c, xi, z, {.n_start = 128, .n_max = 128});
        CHECK(1.0 - fidelity(m.coeffs, b.fock.coeffs) < 1e-8);
    }
}

TEST_CASE("make_fock and pad") {
    FockVector v = make_fock({cplx(0, 2), 0, 0});
    CHECK(std::abs(v.coeffs[0] - 1.0) < 1e-15);
    FockVector w = pad(v, 8);
    CHECK(w.dim == 8);
    CHECK(w.coeffs.size() == 8);
}

TEST_CASE("parallel kernels match the serial references bitwise") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    ComplexMatrix a(70, 90), b(90, 50);
    for (int i = 0; i < 70; ++i)
        for (int j = 0; j < 90; ++j) a(i, j) = {g(rng), g(rng)};
    for (int i = 0; i < 90; ++i)
        for (int j = 0; j < 50; ++j) b(i, j) = {g(rng), g(rng)};
    ComplexMatrix p, s;
    kernels::matmul(a, b, p);
    kernels::matmul_serial(a, b, s);
    CHECK(std::equal(p.data(), p.data() + 70 * 50, s.data()));
    std::vector<cplx> x(90, cplx(0.3, -1.1)), yp, ys;
    kernels::matvec(a, x, yp);
    kernels::matvec_serial(a, x, ys);
    CHECK(yp == ys);
}
