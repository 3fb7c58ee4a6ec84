#pragma once

#include <utility>
#include <vector>

#include "aes/solver.hpp"

namespace aes {

enum class ObservablePair { X1X2, K1K2 };

const char* to_string(ObservablePair p);

struct MomentReport {
    ObservablePair pair = ObservablePair::X1X2;
    double mean_A = 0, mean_B = 0;
    double var_A = 0, var_B = 0;
    double covar = 0;
    double mean_C = 0;
    double robertson_residual = 0;
    double heisenberg_residual = 0;
};

// raw ladder expectations from a (normalized) coefficient vector
struct LadderMoments {
    cplx a{}, a2{}, a4{};
    double n = 0, n2 = 0;
};

LadderMoments ladder_moments(const std::vector<cplx>& c);
MomentReport moment_report(const std::vector<cplx>& c, ObservablePair pair);

// both throw NotConverged when the tail exceeds the threshold
MomentReport quadrature_report(const FockVector& psi, double tail_threshold = 1e-14);
MomentReport su11_report(const FockVector& psi, double tail_threshold = 1e-14);

enum class Intelligence { Ordinary, Generalized };

struct IntelligenceResult {
    bool pass = false;
    double residual = 0;
    double tol = 0;
};

// tol <= 0 selects 1e-8 (1 + var_A var_B)
IntelligenceResult intelligence_check(const MomentReport& r, Intelligence kind, double tol = 0);

struct PhotonStats {
    double mean_n = 0, var_n = 0, mandel_q = 0;
};

PhotonStats photon_stats(const FockVector& psi, double tail_threshold = 1e-14);

struct Grid {
    double x_min = -5, x_max = 5, y_min = -5, y_max = 5;
    int nx = 201, ny = 201;
    double dx() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
    double dy() const { return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0; }
    cplx point(int i, int j) const { return {x_min + i * dx(), y_min + j * dy()}; }
};

// row-major, index j * nx + i
struct Field {
    Grid grid;
    std::vector<double> values;
    double integral() const;
    double max() const;
};

// square grid around the origin wide enough to hold the state's Q function
Grid husimi_grid(const FockVector& psi, double step = 0.05);

Field husimi_q(const FockVector& psi, const Grid& grid);
Field husimi_q_serial(const FockVector& psi, const Grid& grid);

// one-sigma ellipse of the (X1, X2) covariance around the mean
std::vector<std::pair<double, double>> squeeze_ellipse(const FockVector& psi, int points = 128);

}  // namespace aes
