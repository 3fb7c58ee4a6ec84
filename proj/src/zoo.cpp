#include "aes/zoo.hpp"

#include <cmath>

#include "aes/error.hpp"

namespace aes {

namespace {

constexpr double kDegenerateNorm = 1e-12;

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void check_squeeze(const SqueezeParam& xi) {
    require(std::isfinite(xi.s) && std::isfinite(xi.theta) && xi.s >= 0.0, "squeeze magnitude s must be finite and >= 0");
}

void check_eta(cplx eta) {
    if (!(eta.real() > 0.0)) throw Error(ErrorKind::NonNormalizable, "intelligent states need Re eta > 0");
}

double cat_denominator(const CatParam& c) {
    return 1.0 + c.tau * c.tau + 2.0 * c.tau * std::exp(-2.0 * std::norm(c.upsilon)) * std::cos(c.varphi);
}

void check_cat(const CatParam& c) {
    require(std::isfinite(c.tau) && c.tau >= 0.0 && finite(c.upsilon), "cat needs tau >= 0 and finite upsilon");
    if (cat_denominator(c) < kDegenerateNorm) throw Error(ErrorKind::DegenerateNorm, "superposition has zero norm");
}

Branch concrete(Branch b) { return b == Branch::Auto ? Branch::Principal : b; }

StateBundle bundle(std::string family, std::vector<std::pair<std::string, cplx>> params, const AlgebraSpec& spec,
                   Mix mix, const FockOptions& opts, Branch branch) {
    StateBundle b;
    b.family = std::move(family);
    b.params = std::move(params);
    b.spec = spec;
    FockOptions o = opts;
    o.branch = branch;
    b.analytic = solve(spec, mix, branch, o);
    b.fock = fock_coefficients(spec, mix, o);
    return b;
}

// e^{w alpha} weights on the solver's two exponentials, the first matched to target
Mix exponential_mix(const AlgebraSpec& spec, cplx target, cplx c_target, cplx c_other) {
    DerivedParams p = derive_params(spec);
    cplx cp = c_target, cm = c_other;
    if (std::abs(p.omega_minus - target) < std::abs(p.omega_plus - target)) std::swap(cp, cm);
    const cplx h = (p.omega_plus - p.omega_minus) / 2.0;
    return {cp + cm, h * (cp - cm)};
}

// sqrt(n!) times the Taylor coefficients of sum_k poly[k] alpha^k * exp(A alpha^2 + B alpha)
std::vector<cplx> poly_gaussian_fock(const std::vector<cplx>& poly, cplx A, cplx B, int N) {
    std::vector<cplx> g = gaussian_fock(A, B, N), out(N, 0.0);
    for (int m = 0; m < N; ++m) {
        cplx acc = 0;
        double ratio = 1.0;  // sqrt(m!/(m-k)!)
        for (int k = 0; k < static_cast<int>(poly.size()) && k <= m; ++k) {
            if (k > 0) ratio *= std::sqrt(static_cast<double>(m - k + 1));
            acc += poly[k] * ratio * g[m - k];
        }
        out[m] = acc;
    }
    return out;
}

// w^n H_n(x/w) as a polynomial in x, needing only w^2
std::vector<cplx> scaled_hermite_poly(int n, cplx w2, cplx shift) {
    // coefficients in y = x, then substitute x = alpha - shift
    std::vector<cplx> prev{1.0}, cur;
    if (n == 0) cur = prev;
    else cur = {0.0, 2.0};
    for (int k = 1; k < n; ++k) {
        std::vector<cplx> next(k + 2, 0.0);
        for (int j = 0; j <= k; ++j) next[j + 1] += 2.0 * cur[j];
        for (int j = 0; j < static_cast<int>(prev.size()); ++j) next[j] -= 2.0 * k * w2 * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    // expand sum_j cur[j] (alpha - shift)^j
    std::vector<cplx> out(cur.size(), 0.0);
    for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
        cplx binom = 1.0, sp = 1.0;
        for (int i = 0; i <= j; ++i) {
            // term C(j,i) alpha^{j-i} (-shift)^i
            out[j - i] += cur[j] * binom * sp;
            binom *= static_cast<double>(j - i) / (i + 1);
            sp *= -shift;
        }
    }
    return out;
}

// S(-xi) overlaps used to push vacuum/one-photon seeds through a squeeze
std::pair<cplx, cplx> squeezed_seeds(const std::vector<cplx>& c, const SqueezeParam& xi) {
    const double ch = std::cosh(xi.s);
    const cplx zh = std::conj(-xi.zeta()) / 2.0;
    cplx a0 = 0, a1 = 0, w0 = 1.0 / std::sqrt(ch), w1 = 1.0 / (ch * std::sqrt(ch));
    for (int k = 0; 2 * k < static_cast<int>(c.size()); ++k) {
        a0 += w0 * c[2 * k];
        if (2 * k + 1 < static_cast<int>(c.size())) a1 += w1 * c[2 * k + 1];
        // ratio of sqrt((2k+2)!)/(k+1)! to sqrt((2k)!)/k!, and the odd analogue
        w0 *= zh * std::sqrt((2.0 * k + 1) * (2.0 * k + 2)) / (k + 1.0);
        w1 *= zh * std::sqrt((2.0 * k + 2) * (2.0 * k + 3)) / (k + 1.0);
    }
    return {a0, a1};
}

// seeds of D(z) g at the origin from g and g' at -z*
std::pair<cplx, cplx> displaced_seeds(const AnalyticState& g, cplx z) {
    const cplx at = -std::conj(z);
    const double pref = std::exp(-0.5 * std::norm(z));
    const cplx v = evaluate(g, at), dv = evaluate_derivative(g, at);
    return {pref * v, pref * (z * v + dv)};
}

struct SqueezedIS {
    AlgebraSpec spec;
    Mix mix;
};

SqueezedIS squeeze_is(cplx lambda, cplx eta, const SqueezeParam& xi, Mix mix, const FockOptions& opts, Branch br) {
    const AlgebraSpec is = su11_is_spec(lambda, eta);
    AnalyticState st = solve_raw(is, mix, br);
    FockOptions o = opts;
    o.branch = br;
    std::vector<cplx> c = fock_raw_coefficients(st, o);
    auto [a0, a1] = squeezed_seeds(c, xi);
    SqueezedIS out;
    out.spec = su11_is_squeezed_spec(lambda, eta, xi);
    out.mix = mix_from_seeds(out.spec, a0, a1, br);
    return out;
}

}  // namespace

SqueezeParam SqueezeParam::from_zeta(cplx zeta) {
    require(std::abs(zeta) < 1.0, "|zeta| must be < 1");
    return {std::atanh(std::abs(zeta)), zeta == 0.0 ? 0.0 : std::arg(zeta)};
}

double CatParam::norm_factor() const {
    const double den = cat_denominator(*this);
    if (den < kDegenerateNorm) throw Error(ErrorKind::DegenerateNorm, "superposition has zero norm");
    return 1.0 / std::sqrt(den);
}

cplx DisplacedSqueezedFrame::rho() const { return z - zeta() * std::conj(z); }
cplx DisplacedSqueezedFrame::u() const { return rho() * std::cosh(xi.s); }
cplx DisplacedSqueezedFrame::kappa() const { return I * std::sqrt(std::sinh(2.0 * xi.s) * std::polar(1.0, xi.theta)); }
cplx DisplacedSqueezedFrame::y(cplx upsilon) const { return upsilon * std::conj(z) / std::cosh(xi.s); }
cplx DisplacedSqueezedFrame::u_ss(const SqueezeParam& xi, cplx upsilon) {
    return std::cosh(xi.s) * upsilon - std::sinh(xi.s) * std::polar(1.0, xi.theta) * std::conj(upsilon);
}

// ---- parameter maps ----

AlgebraSpec glauber_spec(cplx upsilon) { return {{0.0, 0.0, 0.0, 1.0, 0.0}, upsilon}; }

AlgebraSpec displaced_fock_spec(int n, cplx upsilon) {
    return {{1.0, 0.0, 0.0, -std::conj(upsilon), -upsilon}, static_cast<double>(n) - std::norm(upsilon)};
}

AlgebraSpec displaced_squeezed_spec(const SqueezeParam& xi, cplx upsilon) {
    const cplx zeta = xi.zeta();
    return {{0.0, 0.0, 0.0, 1.0, -zeta}, upsilon - zeta * std::conj(upsilon)};
}

AlgebraSpec dsfs_spec(int n, const SqueezeParam& xi, cplx upsilon) {
    const double c2 = std::cosh(2.0 * xi.s), s2 = std::sinh(2.0 * xi.s), sh = std::sinh(xi.s);
    const cplx b2 = -0.5 * s2 * std::polar(1.0, -xi.theta);
    const double r = std::abs(upsilon), phi = std::arg(upsilon);
    const cplx b4 = std::conj(upsilon) * (s2 * std::polar(1.0, -(xi.theta - 2.0 * phi)) - c2);
    const double lambda = n - sh * sh + r * r * (s2 * std::cos(xi.theta - 2.0 * phi) - c2);
    return {{c2, b2, std::conj(b2), b4, std::conj(b4)}, lambda};
}

AlgebraSpec cat_spec(cplx upsilon) { return {{0.0, 1.0, 0.0, 0.0, 0.0}, upsilon * upsilon}; }

AlgebraSpec cat_sdz_spec(cplx upsilon, const SqueezeParam& xi, cplx z) {
    const cplx zeta = xi.zeta(), rho = z - zeta * std::conj(z);
    return {{-2.0 * zeta, 1.0, zeta * zeta, -2.0 * rho, 2.0 * zeta * rho},
            upsilon * upsilon * (1.0 - std::norm(zeta)) + zeta - rho * rho};
}

AlgebraSpec su11_is_spec(cplx lambda, cplx eta) { return {{0.0, (eta + 1.0) / 4.0, (eta - 1.0) / 4.0, 0.0, 0.0}, lambda}; }

AlgebraSpec su11_is_squeezed_spec(cplx lambda, cplx eta, const SqueezeParam& xi) {
    return su11_is_displaced_squeezed_spec(lambda, eta, xi, 0.0);
}

AlgebraSpec su11_is_displaced_squeezed_spec(cplx lambda, cplx eta, const SqueezeParam& xi, cplx z) {
    const cplx zeta = xi.zeta(), zc = std::conj(zeta), rho = z - zeta * std::conj(z), rc = std::conj(rho);
    const cplx ep = eta + 1.0, em = eta - 1.0;
    AlgebraSpec s;
    s.beta = {-2.0 * zeta * ep - 2.0 * zc * em, ep + zc * zc * em, zeta * zeta * ep + em, -2.0 * rho * ep + 2.0 * zc * rc * em,
              2.0 * zeta * rho * ep - 2.0 * rc * em};
    s.lambda = 4.0 * (1.0 - std::norm(zeta)) * lambda + (zeta - rho * rho) * ep + (zc - rc * rc) * em;
    return s;
}

AlgebraSpec su11_is_displaced_spec(cplx lambda, cplx eta, cplx z) {
    return su11_is_displaced_squeezed_spec(lambda, eta, SqueezeParam{}, z);
}

cplx su11_delta(cplx eta, Branch branch) {
    const cplx d = std::sqrt((1.0 - eta * eta) / 4.0);
    return branch == Branch::Flipped ? -d : d;
}

cplx su11_omega(cplx eta, Branch branch) { return su11_delta(eta, branch) / (2.0 * (eta + 1.0) / 4.0); }

// ---- closed forms ----

std::vector<cplx> gaussian_fock(cplx A, cplx B, int N) {
    std::vector<cplx> c(N, 0.0);
    if (N == 0) return c;
    c[0] = 1.0;
    for (int k = 0; k + 1 < N; ++k) {
        cplx next = B * c[k];
        if (k >= 1) next += 2.0 * A * std::sqrt(static_cast<double>(k)) * c[k - 1];
        c[k + 1] = next / std::sqrt(static_cast<double>(k + 1));
    }
    return c;
}

std::vector<cplx> glauber_closed_fock(cplx upsilon, int N) {
    std::vector<cplx> c = gaussian_fock(0.0, upsilon, N);
    for (auto& x : c) x *= std::exp(-0.5 * std::norm(upsilon));
    return c;
}

cplx displaced_squeezed_lambda0(const SqueezeParam& xi, cplx upsilon) {
    const cplx uc = std::conj(upsilon);
    return std::exp(-0.5 * std::norm(upsilon) + 0.5 * xi.zeta() * uc * uc) / std::sqrt(std::cosh(xi.s));
}

cplx displaced_squeezed_lambda0_u(const SqueezeParam& xi, cplx upsilon) {
    const cplx u = DisplacedSqueezedFrame::u_ss(xi, upsilon);
    return std::exp(-0.5 * std::norm(u) - 0.5 * std::conj(xi.zeta()) * u * u) / std::sqrt(std::cosh(xi.s));
}

std::vector<cplx> displaced_squeezed_closed_fock(const SqueezeParam& xi, cplx upsilon, int N) {
    const cplx zeta = xi.zeta();
    std::vector<cplx> c = gaussian_fock(zeta / 2.0, upsilon - zeta * std::conj(upsilon), N);
    const cplx l0 = displaced_squeezed_lambda0(xi, upsilon);
    for (auto& x : c) x *= l0;
    return c;
}

cplx dsfs_closed_value(int n, const SqueezeParam& xi, cplx upsilon, cplx alpha) {
    const cplx zeta = xi.zeta(), w2 = std::sinh(2.0 * xi.s) * std::polar(1.0, -xi.theta);
    const cplx x = alpha - std::conj(upsilon);
    cplx prev = 1.0, cur = n == 0 ? cplx(1.0) : 2.0 * x;
    for (int k = 1; k < n; ++k) {
        cplx next = 2.0 * x * cur - 2.0 * k * w2 * prev;
        prev = cur;
        cur = next;
    }
    const double scale = std::pow(2.0 * std::cosh(xi.s), -n) / std::sqrt(std::tgamma(n + 1.0));
    return displaced_squeezed_lambda0(xi, upsilon) * scale * cur *
           std::exp(0.5 * zeta * alpha * alpha + (upsilon - zeta * std::conj(upsilon)) * alpha);
}

std::vector<cplx> dsfs_closed_fock(int n, const SqueezeParam& xi, cplx upsilon, int N) {
    const cplx zeta = xi.zeta(), w2 = std::sinh(2.0 * xi.s) * std::polar(1.0, -xi.theta);
    std::vector<cplx> poly = scaled_hermite_poly(n, w2, std::conj(upsilon));
    const cplx pref = displaced_squeezed_lambda0(xi, upsilon) * std::pow(2.0 * std::cosh(xi.s), -n) /
                      std::sqrt(std::tgamma(n + 1.0));
    for (auto& p : poly) p *= pref;
    return poly_gaussian_fock(poly, zeta / 2.0, upsilon - zeta * std::conj(upsilon), N);
}

std::vector<cplx> cat_closed_fock(const CatParam& cat, int N) {
    check_cat(cat);
    const double nf = cat.norm_factor() * std::exp(-0.5 * std::norm(cat.upsilon));
    const cplx w = cat.tau * std::polar(1.0, cat.varphi);
    std::vector<cplx> p = gaussian_fock(0.0, cat.upsilon, N), m = gaussian_fock(0.0, -cat.upsilon, N);
    for (int k = 0; k < N; ++k) p[k] = nf * (p[k] + w * m[k]);
    return p;
}

std::pair<cplx, cplx> cat_sdz_amplitudes(const CatParam& cat, const SqueezeParam& xi, cplx z) {
    check_cat(cat);
    const cplx zeta = xi.zeta();
    const cplx up = std::cosh(xi.s) * cat.upsilon + std::sinh(xi.s) * std::polar(1.0, xi.theta) * std::conj(cat.upsilon);
    auto c0 = [&](cplx w) {
        const cplx wc = std::conj(w);
        return std::exp(-0.5 * std::norm(w) + 0.5 * zeta * wc * wc) / std::sqrt(std::cosh(xi.s));
    };
    const double ph = (z * std::conj(up)).imag();
    const double nf = cat.norm_factor();
    const cplx cp = nf * std::polar(1.0, ph) * c0(z + up);
    const cplx cm = cat.tau * std::polar(1.0, cat.varphi) * nf * std::polar(1.0, -ph) * c0(z - up);
    return {cp, cm};
}

double cat_sdz_norm_inverse_square(const CatParam& cat, const SqueezeParam& xi, cplx z) {
    check_cat(cat);
    const DisplacedSqueezedFrame f{xi, z};
    const cplx zeta = xi.zeta(), u = f.u(), v = cat.upsilon, y = f.y(v);
    const double ex = std::norm(u) + std::norm(v) + (std::conj(zeta) * (u * u + v * v)).real() + 2.0 * y.real();
    return std::exp(ex) * cat_denominator(cat) / std::sqrt(1.0 - std::norm(zeta));
}

cplx cat_sdz_closed_value(const CatParam& cat, const SqueezeParam& xi, cplx z, cplx alpha) {
    auto [cp, cm] = cat_sdz_amplitudes(cat, xi, z);
    const cplx zeta = xi.zeta(), rho = z - zeta * std::conj(z), k = cat.upsilon / std::cosh(xi.s);
    return std::exp(0.5 * zeta * alpha * alpha + rho * alpha) * (cp * std::exp(k * alpha) + cm * std::exp(-k * alpha));
}

std::vector<cplx> cat_sdz_closed_fock(const CatParam& cat, const SqueezeParam& xi, cplx z, int N) {
    auto [cp, cm] = cat_sdz_amplitudes(cat, xi, z);
    const cplx zeta = xi.zeta(), rho = z - zeta * std::conj(z), k = cat.upsilon / std::cosh(xi.s);
    std::vector<cplx> p = gaussian_fock(zeta / 2.0, rho + k, N), m = gaussian_fock(zeta / 2.0, rho - k, N);
    for (int n = 0; n < N; ++n) p[n] = cp * p[n] + cm * m[n];
    return p;
}

std::vector<cplx> cat_sdz_hermite_fock(const CatParam& cat, const SqueezeParam& xi, cplx z, int N) {
    const cplx zeta = xi.zeta();
    if (std::abs(zeta) == 0.0) return cat_sdz_closed_fock(cat, xi, z, N);
    auto [cp, cm] = cat_sdz_amplitudes(cat, xi, z);
    const DisplacedSqueezedFrame f{xi, z};
    const cplx u = f.u(), kappa = f.kappa(), v = cat.upsilon;
    // (-zeta/2)^{n/2} H_n(t)/sqrt(n!) = (i sqrt(zeta))^n Hn(t)/sqrt(2^n n!), normalized recurrence
    const cplx step = I * std::sqrt(zeta);
    auto series = [&](cplx t) {
        std::vector<cplx> h(N, 0.0);
        cplx prev = 0.0, cur = 1.0, pw = 1.0;
        for (int n = 0; n < N; ++n) {
            h[n] = pw * cur;
            const cplx next = (std::sqrt(2.0) * t * cur - std::sqrt(static_cast<double>(n)) * prev) / std::sqrt(n + 1.0);
            prev = cur;
            cur = next;
            pw *= step;
        }
        return h;
    };
    std::vector<cplx> hp = series((u + v) / kappa), hm = series((u - v) / kappa);
    for (int n = 0; n < N; ++n) hp[n] = cp * hp[n] + cm * hm[n];
    return hp;
}

// ---- constructors ----

StateBundle glauber(cplx upsilon, const FockOptions& opts) {
    return bundle("glauber", {{"upsilon", upsilon}}, glauber_spec(upsilon), {}, opts, Branch::Auto);
}

StateBundle displaced_fock(int n, cplx upsilon, const FockOptions& opts) {
    require(n >= 0, "n must be >= 0");
    return bundle("displaced-fock", {{"n", static_cast<double>(n)}, {"upsilon", upsilon}}, displaced_fock_spec(n, upsilon), {},
                  opts, Branch::Auto);
}

StateBundle displaced_squeezed(const SqueezeParam& xi, cplx upsilon, const FockOptions& opts) {
    check_squeeze(xi);
    const cplx zeta = xi.zeta();
    return bundle("displaced-squeezed",
                  {{"s", xi.s},
                   {"theta", xi.theta},
                   {"upsilon", upsilon},
                   {"zeta", zeta},
                   {"u", DisplacedSqueezedFrame::u_ss(xi, upsilon)},
                   {"x_eta", (1.0 - zeta) / (1.0 + zeta)},
                   {"x_lambda", (upsilon - zeta * std::conj(upsilon)) / (1.0 + zeta)}},
                  displaced_squeezed_spec(xi, upsilon), {}, opts, Branch::Auto);
}

StateBundle dsfs(int n, const SqueezeParam& xi, cplx upsilon, const FockOptions& opts, Branch branch) {
    require(n >= 0, "n must be >= 0");
    check_squeeze(xi);
    const AlgebraSpec spec = dsfs_spec(n, xi, upsilon);
    std::vector<std::pair<std::string, cplx>> params{{"n", static_cast<double>(n)}, {"s", xi.s}, {"theta", xi.theta},
                                                     {"upsilon", upsilon}, {"zeta", xi.zeta()}};
    if (xi.s == 0.0) return bundle("dsfs", params, spec, {}, opts, Branch::Auto);
    Mix mix = n % 2 == 0 ? Mix{1.0, 0.0} : Mix{0.0, 1.0};
    return bundle("dsfs", params, spec, mix, opts, branch);
}

StateBundle cat(const CatParam& c, const FockOptions& opts) {
    check_cat(c);
    const AlgebraSpec spec = cat_spec(c.upsilon);
    const double nf = c.norm_factor() * std::exp(-0.5 * std::norm(c.upsilon));
    const Mix mix = exponential_mix(spec, c.upsilon, nf, nf * c.tau * std::polar(1.0, c.varphi));
    return bundle("cat", {{"upsilon", c.upsilon}, {"tau", c.tau}, {"varphi", c.varphi}}, spec, mix, opts, Branch::Auto);
}

StateBundle even_cat(cplx upsilon, const FockOptions& opts) {
    StateBundle b = cat({upsilon, 1.0, 0.0}, opts);
    b.family = "even-cat";
    return b;
}

StateBundle odd_cat(cplx upsilon, const FockOptions& opts) {
    StateBundle b = cat({upsilon, 1.0, PI}, opts);
    b.family = "odd-cat";
    return b;
}

StateBundle yurke_stoler(cplx upsilon, const FockOptions& opts) {
    StateBundle b = cat({upsilon, 1.0, PI / 2.0}, opts);
    b.family = "yurke-stoler";
    return b;
}

StateBundle cat_sdz(const CatParam& c, const SqueezeParam& xi, cplx z, const FockOptions& opts) {
    check_cat(c);
    check_squeeze(xi);
    const AlgebraSpec spec = cat_sdz_spec(c.upsilon, xi, z);
    auto [cp, cm] = cat_sdz_amplitudes(c, xi, z);
    const DisplacedSqueezedFrame f{xi, z};
    const Mix mix = exponential_mix(spec, f.rho() + c.upsilon / std::cosh(xi.s), cp, cm);
    return bundle("cat-sdz",
                  {{"upsilon", c.upsilon},
                   {"tau", c.tau},
                   {"varphi", c.varphi},
                   {"s", xi.s},
                   {"theta", xi.theta},
                   {"z", z},
                   {"rho", f.rho()},
                   {"u", f.u()},
                   {"kappa", f.kappa()},
                   {"y", f.y(c.upsilon)}},
                  spec, mix, opts, Branch::Auto);
}

StateBundle su11_is(cplx lambda, cplx eta, Mix mix, const FockOptions& opts, Branch branch) {
    check_eta(eta);
    return bundle("su11-is", {{"lambda", lambda}, {"eta", eta}, {"omega", su11_omega(eta)}}, su11_is_spec(lambda, eta), mix,
                  opts, branch);
}

StateBundle su11_is_squeezed(cplx lambda, cplx eta, const SqueezeParam& xi, Mix mix, const FockOptions& opts,
                             Branch branch) {
    check_eta(eta);
    check_squeeze(xi);
    const Branch br = concrete(branch);
    SqueezedIS sq = squeeze_is(lambda, eta, xi, mix, opts, br);
    return bundle("su11-is-squeezed", {{"lambda", lambda}, {"eta", eta}, {"s", xi.s}, {"theta", xi.theta}}, sq.spec, sq.mix,
                  opts, br);
}

StateBundle su11_is_displaced_squeezed(cplx lambda, cplx eta, const SqueezeParam& xi, cplx z, Mix mix,
                                       const FockOptions& opts, Branch branch) {
    check_eta(eta);
    check_squeeze(xi);
    const Branch br = concrete(branch);
    SqueezedIS sq = squeeze_is(lambda, eta, xi, mix, opts, br);
    const AnalyticState g = solve_raw(sq.spec, sq.mix, br);
    const AlgebraSpec spec = su11_is_displaced_squeezed_spec(lambda, eta, xi, z);
    auto [a0, a1] = displaced_seeds(g, z);
    const DisplacedSqueezedFrame f{xi, z};
    return bundle("su11-is-displaced-squeezed",
                  {{"lambda", lambda}, {"eta", eta}, {"s", xi.s}, {"theta", xi.theta}, {"z", z}, {"rho", f.rho()}}, spec,
                  mix_from_seeds(spec, a0, a1, br), opts, br);
}

StateBundle su11_is_displaced(cplx lambda, cplx eta, cplx z, Mix mix, const FockOptions& opts, Branch branch) {
    check_eta(eta);
    const Branch br = concrete(branch);
    const AnalyticState g = solve_raw(su11_is_spec(lambda, eta), mix, br);
    const AlgebraSpec spec = su11_is_displaced_spec(lambda, eta, z);
    auto [a0, a1] = displaced_seeds(g, z);
    return bundle("su11-is-displaced", {{"lambda", lambda}, {"eta", eta}, {"z", z}}, spec, mix_from_seeds(spec, a0, a1, br),
                  opts, br);
}

StateBundle raw_aes(const AlgebraSpec& spec, Mix mix, const FockOptions& opts, Branch branch) {
    return bundle("raw-aes", {}, spec, mix, opts, branch);
}

}  // namespace aes
