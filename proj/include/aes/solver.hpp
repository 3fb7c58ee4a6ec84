#pragma once

#include <array>
#include <string>
#include <vector>

#include "aes/complex.hpp"

namespace aes {

// beta1 N + beta2 a^2 + beta3 a+^2 + beta4 a + beta5 a+ with eigenvalue lambda
struct AlgebraSpec {
    std::array<cplx, 5> beta{};
    cplx lambda{};

    cplx b1() const { return beta[0]; }
    cplx b2() const { return beta[1]; }
    cplx b3() const { return beta[2]; }
    cplx b4() const { return beta[3]; }
    cplx b5() const { return beta[4]; }
    double scale() const;
    void validate() const;
};

enum class CaseTag { GeneralKummer, DegenerateBessel, ConstantCoeff, FirstOrderSqueezeLike, Oscillator, Heisenberg };

const char* to_string(CaseTag t);

// Principal: delta = sqrt(delta^2) on the principal branch; Flipped: its negative
enum class Branch { Auto, Principal, Flipped };

struct DerivedParams {
    cplx delta{};
    cplx delta2{};
    cplx sigma{};
    cplx mu{};
    cplx d{};
    cplx omega_plus{};
    cplx omega_minus{};
    cplx p{};
    cplx scale{};  // Kummer argument factor -delta/(2 beta2), or sqrt(sigma/beta2) in the Bessel case
    cplx gauss{};  // coefficient of alpha^2 in the exponential prefactor
};

struct Mix {
    cplx even{1.0};
    cplx odd{0.0};
};

struct AnalyticState {
    AlgebraSpec spec;
    CaseTag tag{};
    DerivedParams params;
    Mix mix;
    cplx norm{1.0};
    bool normalizable = true;
};

struct FockVector {
    std::vector<cplx> coeffs;
    int dim = 0;
    double tail_mass = 0;
    double norm = 0;
    double raw_norm = 0;
    double recurrence_residual = 0;
    bool converged = false;
};

enum class RecurrenceMethod { LeastSquares, Forward };

struct FockOptions {
    int n_start = 64;
    int n_max = 2048;
    double tail_threshold = 1e-14;
    double residual_tol = 1e-8;
    Branch branch = Branch::Auto;
    RecurrenceMethod method = RecurrenceMethod::LeastSquares;
    bool require_converged = true;
};

inline constexpr int kTailWindow = 16;

CaseTag classify(const AlgebraSpec& spec);
DerivedParams derive_params(const AlgebraSpec& spec, Branch branch = Branch::Auto);

// norm is fixed from the Fock expansion so evaluate() matches the normalized FockVector
AnalyticState solve(const AlgebraSpec& spec, Mix mix = {}, Branch branch = Branch::Auto,
                    const FockOptions& opts = {});
// same solution with norm = 1 (raw closed form)
AnalyticState solve_raw(const AlgebraSpec& spec, Mix mix = {}, Branch branch = Branch::Auto);

cplx evaluate(const AnalyticState& state, cplx alpha);
cplx evaluate_derivative(const AnalyticState& state, cplx alpha);

// weights (even, odd) whose combination has value a0 and slope a1 at the origin
Mix mix_from_seeds(const AlgebraSpec& spec, cplx a0, cplx a1, Branch branch = Branch::Auto);

FockVector fock_coefficients(const AlgebraSpec& spec, Mix mix, int N, const FockOptions& opts = {});
FockVector fock_coefficients(const AlgebraSpec& spec, Mix mix = {}, const FockOptions& opts = {});
FockVector fock_from_state(const AnalyticState& state, int N, const FockOptions& opts = {});
// Taylor coefficients c_n = sqrt(n!) a_n of norm * Lambda itself (no rescaling), dimension auto-grown
std::vector<cplx> fock_raw_coefficients(const AnalyticState& state, const FockOptions& opts = {});

// plain forward recurrence from (a0, a1); unnormalized, for diagnostics
std::vector<cplx> forward_recurrence(const AlgebraSpec& spec, cplx a0, cplx a1, int N);

// residual of the eigen equation as an ODE in the Bargmann variable
cplx ode_residual(const AlgebraSpec& spec, cplx f, cplx df, cplx d2f, cplx alpha);

// relative residual of the ODE with Richardson-extrapolated central differences of evaluate()
double ode_residual_fd(const AnalyticState& state, cplx alpha, double h = 1e-3);

// sum_n c_n alpha^n / sqrt(n!)
cplx fock_evaluate(const std::vector<cplx>& c, cplx alpha);

// normalize, fix the phase of the first significant coefficient, record tail mass
void finalize_fock(FockVector& v);

double fidelity(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace aes
