#pragma once

#include <string>
#include <vector>

#include "aes/kernels.hpp"
#include "aes/solver.hpp"

namespace aes {

inline constexpr int kEdgeBand = 4;

struct OperatorMatrix {
    ComplexMatrix entries;
    int dim = 0;
    std::string label;
};

struct Residual {
    double value = 0;
    int interior_dim = 0;
};

struct CommutatorResult {
    std::string relation;
    double deviation = 0;
    double scale = 0;
    bool pass = false;
};

struct CommutatorReport {
    int dim = 0;
    std::vector<CommutatorResult> results;
    bool all_pass() const;
};

OperatorMatrix annihilation(int N);
OperatorMatrix creation(int N);
OperatorMatrix number_op(int N);
OperatorMatrix identity_op(int N);

OperatorMatrix build_element(const AlgebraSpec& spec, int N);

// K+, K-, K0, K1, K2 of the two-photon realization
OperatorMatrix su11_generator(const std::string& name, int N);

CommutatorReport commutator_check(int N, double tol = 1e-12);

Residual eigen_residual(const AlgebraSpec& spec, const FockVector& psi, double tail_threshold = 1e-14);
Residual eigen_residual(const AlgebraSpec& spec, const std::vector<cplx>& psi);

ComplexMatrix displacement_matrix(cplx z, int N);
ComplexMatrix squeeze_matrix(cplx xi, int N);

// works in the dimension of psi; pad first to enlarge the working space
FockVector apply_displacement(cplx z, const FockVector& psi, double tail_threshold = 1e-12);
FockVector apply_squeeze(cplx xi, const FockVector& psi, double tail_threshold = 1e-12);

FockVector make_fock(std::vector<cplx> coeffs);
// keeps scale and phase as given
FockVector wrap_fock(std::vector<cplx> coeffs);
FockVector pad(const FockVector& psi, int N);
FockVector fock_basis(int n, int N);

}  // namespace aes
