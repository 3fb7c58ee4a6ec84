#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aes/solver.hpp"

namespace aes {

struct SqueezeParam {
    double s = 0.0;
    double theta = 0.0;
    cplx xi() const { return std::polar(s, theta); }
    cplx zeta() const { return std::tanh(s) * std::polar(1.0, theta); }
    static SqueezeParam from_zeta(cplx zeta);
};

struct CatParam {
    cplx upsilon{};
    double tau = 1.0;
    double varphi = 0.0;
    double norm_factor() const;  // N of the superposition, 1/sqrt(1 + tau^2 + 2 tau e^{-2|u|^2} cos phi)
};

struct ISParam {
    cplx lambda{};
    cplx eta{1.0};
};

struct DisplacedSqueezedFrame {
    SqueezeParam xi;
    cplx z{};
    cplx zeta() const { return xi.zeta(); }
    cplx rho() const;                  // z - zeta z*
    cplx u() const;                    // rho cosh s
    cplx kappa() const;                // i sqrt(sinh 2s e^{i theta})
    cplx y(cplx upsilon) const;        // upsilon z* / cosh s
    static cplx u_ss(const SqueezeParam& xi, cplx upsilon);  // cosh s upsilon - sinh s e^{i theta} upsilon*
};

struct StateBundle {
    std::string family;
    std::vector<std::pair<std::string, cplx>> params;
    AlgebraSpec spec;
    AnalyticState analytic;
    FockVector fock;
};

StateBundle glauber(cplx upsilon, const FockOptions& opts = {});
StateBundle displaced_fock(int n, cplx upsilon, const FockOptions& opts = {});
StateBundle displaced_squeezed(const SqueezeParam& xi, cplx upsilon, const FockOptions& opts = {});
StateBundle dsfs(int n, const SqueezeParam& xi, cplx upsilon, const FockOptions& opts = {},
                 Branch branch = Branch::Auto);
StateBundle cat(const CatParam& cat, const FockOptions& opts = {});
StateBundle even_cat(cplx upsilon, const FockOptions& opts = {});
StateBundle odd_cat(cplx upsilon, const FockOptions& opts = {});
StateBundle yurke_stoler(cplx upsilon, const FockOptions& opts = {});
StateBundle cat_sdz(const CatParam& cat, const SqueezeParam& xi, cplx z, const FockOptions& opts = {});
StateBundle su11_is(cplx lambda, cplx eta, Mix mix = {}, const FockOptions& opts = {}, Branch branch = Branch::Auto);
StateBundle su11_is_squeezed(cplx lambda, cplx eta, const SqueezeParam& xi, Mix mix = {},
                             const FockOptions& opts = {}, Branch branch = Branch::Auto);
StateBundle su11_is_displaced_squeezed(cplx lambda, cplx eta, const SqueezeParam& xi, cplx z, Mix mix = {},
                                       const FockOptions& opts = {}, Branch branch = Branch::Auto);
StateBundle su11_is_displaced(cplx lambda, cplx eta, cplx z, Mix mix = {}, const FockOptions& opts = {},
                              Branch branch = Branch::Auto);
StateBundle raw_aes(const AlgebraSpec& spec, Mix mix = {}, const FockOptions& opts = {}, Branch branch = Branch::Auto);

// parameter maps
AlgebraSpec glauber_spec(cplx upsilon);
AlgebraSpec displaced_fock_spec(int n, cplx upsilon);
AlgebraSpec displaced_squeezed_spec(const SqueezeParam& xi, cplx upsilon);
AlgebraSpec dsfs_spec(int n, const SqueezeParam& xi, cplx upsilon);
AlgebraSpec cat_spec(cplx upsilon);
AlgebraSpec cat_sdz_spec(cplx upsilon, const SqueezeParam& xi, cplx z);
AlgebraSpec su11_is_spec(cplx lambda, cplx eta);
AlgebraSpec su11_is_squeezed_spec(cplx lambda, cplx eta, const SqueezeParam& xi);
AlgebraSpec su11_is_displaced_squeezed_spec(cplx lambda, cplx eta, const SqueezeParam& xi, cplx z);
AlgebraSpec su11_is_displaced_spec(cplx lambda, cplx eta, cplx z);

// Omega_eta = Delta/(2 beta2) for the chosen branch of Delta
cplx su11_omega(cplx eta, Branch branch = Branch::Principal);
cplx su11_delta(cplx eta, Branch branch = Branch::Principal);

// closed forms
// vacuum amplitude of D(upsilon)S(xi)|0>
cplx displaced_squeezed_lambda0(const SqueezeParam& xi, cplx upsilon);
// the same expressed through u, as exp(-|u|^2/2 - zeta* u^2 / 2)/sqrt(cosh s)
cplx displaced_squeezed_lambda0_u(const SqueezeParam& xi, cplx upsilon);
cplx dsfs_closed_value(int n, const SqueezeParam& xi, cplx upsilon, cplx alpha);
std::vector<cplx> glauber_closed_fock(cplx upsilon, int N);
std::vector<cplx> displaced_squeezed_closed_fock(const SqueezeParam& xi, cplx upsilon, int N);
std::vector<cplx> dsfs_closed_fock(int n, const SqueezeParam& xi, cplx upsilon, int N);
std::vector<cplx> cat_closed_fock(const CatParam& cat, int N);

// amplitudes C+ and C- multiplying exp(+-upsilon alpha / cosh s)
std::pair<cplx, cplx> cat_sdz_amplitudes(const CatParam& cat, const SqueezeParam& xi, cplx z);
// |C+|^-2 in closed form
double cat_sdz_norm_inverse_square(const CatParam& cat, const SqueezeParam& xi, cplx z);
cplx cat_sdz_closed_value(const CatParam& cat, const SqueezeParam& xi, cplx z, cplx alpha);
// Hermite-polynomial expansion; falls back to the Taylor route at zero squeezing
std::vector<cplx> cat_sdz_hermite_fock(const CatParam& cat, const SqueezeParam& xi, cplx z, int N);
// Taylor expansion of the two-exponential form
std::vector<cplx> cat_sdz_closed_fock(const CatParam& cat, const SqueezeParam& xi, cplx z, int N);

// Taylor coefficients of exp(A alpha^2 + B alpha), times sqrt(n!)
std::vector<cplx> gaussian_fock(cplx A, cplx B, int N);

}  // namespace aes
