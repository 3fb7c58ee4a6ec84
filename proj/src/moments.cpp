#include "aes/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aes/error.hpp"

namespace aes {

namespace {

void require_converged(const FockVector& psi, double tail_threshold) {
    if (psi.tail_mass > tail_threshold)
        throw Error(ErrorKind::NotConverged, "tail mass " + std::to_string(psi.tail_mass) + " above threshold");
}

double q_at(const std::vector<cplx>& c, cplx alpha) {
    return std::exp(-std::norm(alpha)) * std::norm(fock_evaluate(c, std::conj(alpha))) / PI;
}

void fill_row(const std::vector<cplx>& c, const Grid& g, int j, std::vector<double>& out) {
    for (int i = 0; i < g.nx; ++i) out[static_cast<size_t>(j) * g.nx + i] = q_at(c, g.point(i, j));
}

}  // namespace

const char* to_string(ObservablePair p) { return p == ObservablePair::X1X2 ? "X1X2" : "K1K2"; }

LadderMoments ladder_moments(const std::vector<cplx>& c) {
    LadderMoments m;
    const size_t N = c.size();
    for (size_t n = 0; n < N; ++n) {
        const double dn = static_cast<double>(n), p = std::norm(c[n]);
        m.n += dn * p;
        m.n2 += dn * dn * p;
        const cplx cn = std::conj(c[n]);
        if (n + 1 < N) m.a += cn * std::sqrt(dn + 1.0) * c[n + 1];
        if (n + 2 < N) m.a2 += cn * std::sqrt((dn + 1.0) * (dn + 2.0)) * c[n + 2];
        if (n + 4 < N) m.a4 += cn * std::sqrt((dn + 1.0) * (dn + 2.0) * (dn + 3.0) * (dn + 4.0)) * c[n + 4];
    }
    return m;
}

MomentReport moment_report(const std::vector<cplx>& c, ObservablePair pair) {
    const LadderMoments m = ladder_moments(c);
    MomentReport r;
    r.pair = pair;
    if (pair == ObservablePair::X1X2) {
        r.mean_A = m.a.real();
        r.mean_B = m.a.imag();
        r.var_A = (2.0 * m.a2.real() + 2.0 * m.n + 1.0) / 4.0 - r.mean_A * r.mean_A;
        r.var_B = (2.0 * m.n + 1.0 - 2.0 * m.a2.real()) / 4.0 - r.mean_B * r.mean_B;
        r.covar = m.a2.imag() / 2.0 - r.mean_A * r.mean_B;
        r.mean_C = 0.5;
    } else {
        const double ff = m.n2 - m.n;  // <a+^2 a^2>
        r.mean_A = m.a2.real() / 2.0;
        r.mean_B = -m.a2.imag() / 2.0;
        r.var_A = (2.0 * m.a4.real() + 2.0 * ff + 4.0 * m.n + 2.0) / 16.0 - r.mean_A * r.mean_A;
        r.var_B = (-2.0 * m.a4.real() + 2.0 * ff + 4.0 * m.n + 2.0) / 16.0 - r.mean_B * r.mean_B;
        r.covar = -m.a4.imag() / 8.0 - r.mean_A * r.mean_B;
        r.mean_C = m.n / 2.0 + 0.25;
    }
    const double prod = r.var_A * r.var_B, c2 = r.mean_C * r.mean_C / 4.0;
    r.heisenberg_residual = prod - c2;
    r.robertson_residual = prod - c2 - r.covar * r.covar;
    return r;
}

MomentReport quadrature_report(const FockVector& psi, double tail_threshold) {
    require_converged(psi, tail_threshold);
    return moment_report(psi.coeffs, ObservablePair::X1X2);
}

MomentReport su11_report(const FockVector& psi, double tail_threshold) {
    require_converged(psi, tail_threshold);
    return moment_report(psi.coeffs, ObservablePair::K1K2);
}

IntelligenceResult intelligence_check(const MomentReport& r, Intelligence kind, double tol) {
    IntelligenceResult out;
    out.tol = tol > 0 ? tol : 1e-8 * (1.0 + std::abs(r.var_A * r.var_B));
    if (kind == Intelligence::Ordinary) {
        out.residual = std::max(std::abs(r.heisenberg_residual), std::abs(r.covar));
    } else {
        out.residual = std::abs(r.robertson_residual);
    }
    out.pass = out.residual <= out.tol;
    return out;
}

PhotonStats photon_stats(const FockVector& psi, double tail_threshold) {
    require_converged(psi, tail_threshold);
    const LadderMoments m = ladder_moments(psi.coeffs);
    PhotonStats s;
    s.mean_n = m.n;
    s.var_n = m.n2 - m.n * m.n;
    if (!(m.n > 1e-15)) throw Error(ErrorKind::ZeroMean, "mean photon number vanishes, Mandel Q undefined");
    s.mandel_q = (s.var_n - m.n) / m.n;
    return s;
}

double Field::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * grid.dx() * grid.dy();
}

double Field::max() const { return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end()); }

Grid husimi_grid(const FockVector& psi, double step) {
    const LadderMoments m = ladder_moments(psi.coeffs);
    const MomentReport r = moment_report(psi.coeffs, ObservablePair::X1X2);
    const double spread = std::sqrt(std::max(r.var_A, r.var_B) + 0.25);
    const double R = std::max(4.0, std::sqrt(std::max(m.n, 0.0)) + 3.0 + 7.0 * spread);
    Grid g;
    g.x_min = g.y_min = -R;
    g.x_max = g.y_max = R;
    g.nx = g.ny = static_cast<int>(std::ceil(2.0 * R / step)) + 1;
    return g;
}

Field husimi_q(const FockVector& psi, const Grid& grid) {
    Field f{grid, std::vector<double>(static_cast<size_t>(grid.nx) * grid.ny, 0.0)};
#pragma omp parallel for schedule(static)
    for (int j = 0; j < grid.ny; ++j) fill_row(psi.coeffs, grid, j, f.values);
    return f;
}

Field husimi_q_serial(const FockVector& psi, const Grid& grid) {
    Field f{grid, std::vector<double>(static_cast<size_t>(grid.nx) * grid.ny, 0.0)};
    for (int j = 0; j < grid.ny; ++j) fill_row(psi.coeffs, grid, j, f.values);
    return f;
}

std::vector<std::pair<double, double>> squeeze_ellipse(const FockVector& psi, int points) {
    const MomentReport r = moment_report(psi.coeffs, ObservablePair::X1X2);
    const double tr = r.var_A + r.var_B, det = r.var_A * r.var_B - r.covar * r.covar;
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    const double l1 = tr / 2.0 + disc, l2 = std::max(tr / 2.0 - disc, 0.0);
    const double ang = 0.5 * std::atan2(2.0 * r.covar, r.var_A - r.var_B);
    const double ca = std::cos(ang), sa = std::sin(ang);
    std::vector<std::pair<double, double>> out;
    out.reserve(points);
    for (int k = 0; k < points; ++k) {
        const double t = 2.0 * PI * k / points;
        const double u = std::sqrt(l1) * std::cos(t), v = std::sqrt(l2) * std::sin(t);
        out.emplace_back(r.mean_A + ca * u - sa * v, r.mean_B + sa * u + ca * v);
    }
    return out;
}

}  // namespace aes
