#include "aes/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aes/complexfn.hpp"
#include "aes/error.hpp"

namespace aes {

namespace {

constexpr double kZeroRel = 1e-12;
constexpr double kIntTol = 1e-8;

bool is_zero(cplx z, double scale) { return std::abs(z) <= kZeroRel * scale; }

cplx snap_half_integer(cplx d) {
    double r = std::round(2.0 * d.real());
    if (std::abs(2.0 * d.real() - r) < 2.0 * kIntTol && std::abs(d.imag()) < kIntTol) return {r / 2.0, 0.0};
    return d;
}

bool nonpos_int(cplx z) {
    long n = 0;
    return nonpositive_integer(z, kIntTol, n);
}

DerivedParams kummer_params(const AlgebraSpec& s, cplx delta) {
    DerivedParams p;
    const cplx b1 = s.b1(), b2 = s.b2(), b4 = s.b4(), b5 = s.b5();
    p.delta = delta;
    p.delta2 = b1 * b1 - 4.0 * b2 * s.b3();
    p.sigma = b4 * (delta - b1) / (2.0 * b2) + b5;
    p.mu = (2.0 * b2 * b5 - b1 * b4) / (delta * delta);
    p.d = (b2 * p.sigma * p.sigma / (delta * delta) - b4 * p.sigma / delta + (delta - b1) / 2.0 - s.lambda) /
          (2.0 * delta);
    p.d = snap_half_integer(p.d);
    p.scale = -delta / (2.0 * b2);
    p.gauss = (delta - b1) / (4.0 * b2);
    return p;
}

// Gaussian-mode conditions for branch delta: |(delta - b1)/2b2| < 1 and |(delta + b1)/2b2| < 1
struct ModeTest {
    bool minus = false, plus = false;
};

ModeTest mode_test(const AlgebraSpec& s, cplx delta) {
    ModeTest t;
    t.minus = std::abs((delta - s.b1()) / (2.0 * s.b2())) < 1.0;
    t.plus = std::abs((delta + s.b1()) / (2.0 * s.b2())) < 1.0;
    return t;
}

cplx kummer_arg(const DerivedParams& p, Parity par) { return par == Parity::Even ? p.d : p.d + 0.5; }
double kummer_c(Parity par) { return par == Parity::Even ? 0.5 : 1.5; }

bool component_polynomial(const DerivedParams& p, Parity par) { return nonpos_int(kummer_arg(p, par)); }

bool component_normalizable(const AlgebraSpec& s, const DerivedParams& p, Parity par) {
    ModeTest t = mode_test(s, p.delta);
    cplx m = kummer_arg(p, par);
    if (nonpos_int(m)) return t.minus;
    if (nonpos_int(kummer_c(par) - m)) return t.plus;
    return t.minus && t.plus;
}

bool active(cplx w) { return w != 0.0; }

struct Choice {
    DerivedParams params;
    bool normalizable = false;
};

Choice choose_kummer(const AlgebraSpec& s, const Mix* mix, Branch branch) {
    const cplx root = std::sqrt(s.b1() * s.b1() - 4.0 * s.b2() * s.b3());
    DerivedParams cand[2] = {kummer_params(s, root), kummer_params(s, -root)};
    auto comps_ok = [&](const DerivedParams& p, auto pred) {
        if (mix) {
            bool ok = true;
            if (active(mix->even)) ok = ok && pred(p, Parity::Even);
            if (active(mix->odd)) ok = ok && pred(p, Parity::Odd);
            return ok;
        }
        return pred(p, Parity::Even) || pred(p, Parity::Odd);
    };
    auto norm_pred = [&](const DerivedParams& p, Parity par) { return component_normalizable(s, p, par); };
    auto poly_pred = [&](const DerivedParams& p, Parity par) { return component_polynomial(p, par); };
    Choice c;
    if (branch == Branch::Principal) {
        c.params = cand[0];
    } else if (branch == Branch::Flipped) {
        c.params = cand[1];
    } else {
        c.params = cand[0];
        for (const auto& p : cand)
            if (comps_ok(p, poly_pred)) {
                c.params = p;
                break;
            }
    }
    c.normalizable = comps_ok(c.params, norm_pred);
    return c;
}

DerivedParams degenerate_params(const AlgebraSpec& s) {
    DerivedParams p;
    const cplx b1 = s.b1(), b2 = s.b2(), b4 = s.b4();
    p.delta2 = b1 * b1 - 4.0 * b2 * s.b3();
    p.sigma = -b4 * b1 / (2.0 * b2) + s.b5();
    p.gauss = -b1 / (4.0 * b2);
    return p;
}

cplx first_order_p(const AlgebraSpec& s) {
    const cplx b1 = s.b1();
    return (b1 * b1 * s.lambda - s.b4() * (s.b3() * s.b4() - b1 * s.b5())) / (b1 * b1 * b1);
}

AnalyticState make_state(const AlgebraSpec& spec, Mix mix, Branch branch, bool check) {
    spec.validate();
    if (mix.even == 0.0 && mix.odd == 0.0) throw Error(ErrorKind::InvalidArgument, "mix must be nonzero");
    AnalyticState st;
    st.spec = spec;
    st.mix = mix;
    st.tag = classify(spec);
    const cplx b1 = spec.b1(), b2 = spec.b2(), b3 = spec.b3(), b4 = spec.b4(), b5 = spec.b5();
    switch (st.tag) {
        case CaseTag::GeneralKummer: {
            Choice c = choose_kummer(spec, &mix, branch);
            st.params = c.params;
            st.normalizable = c.normalizable;
            break;
        }
        case CaseTag::DegenerateBessel:
            st.params = degenerate_params(spec);
            st.params.mu = (4.0 * b2 * spec.lambda + 2.0 * b1 * b2 + b4 * b4) / (4.0 * b2 * st.params.sigma);
            st.params.scale = std::sqrt(st.params.sigma / b2);
            st.normalizable = std::abs(b1 / b2) < 2.0;
            break;
        case CaseTag::ConstantCoeff: {
            st.params = degenerate_params(spec);
            cplx root = std::sqrt(b4 * b4 + 4.0 * b2 * spec.lambda + 2.0 * b1 * b2);
            st.params.omega_plus = (-b4 + root) / (2.0 * b2);
            st.params.omega_minus = (-b4 - root) / (2.0 * b2);
            st.normalizable = std::abs(b1 / b2) < 2.0;
            break;
        }
        case CaseTag::FirstOrderSqueezeLike:
        case CaseTag::Oscillator: {
            cplx p = first_order_p(spec);
            long n = 0;
            if (!near_integer(p, kIntTol, n) || n < 0) {
                if (check) throw Error(ErrorKind::NonIntegerExponent, "first-order exponent p is not a nonnegative integer");
                st.params.p = p;
            } else {
                st.params.p = static_cast<double>(n);
            }
            st.params.gauss = -b3 / (2.0 * b1);
            st.normalizable = std::abs(b3 / b1) < 1.0;
            break;
        }
        case CaseTag::Heisenberg:
            st.params.gauss = -b5 / (2.0 * b4);
            st.normalizable = std::abs(b5 / b4) < 1.0;
            break;
    }
    if (check && !st.normalizable) throw Error(ErrorKind::NonNormalizable, std::string("normalization condition fails (") + to_string(st.tag) + ")");
    return st;
}

cplx sinhc(cplx z) {
    if (std::abs(z) < 1e-3) {
        cplx z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

// value and alpha-derivative of the unnormalized solution
std::pair<cplx, cplx> eval_pair(const AnalyticState& st, cplx a) {
    const AlgebraSpec& s = st.spec;
    const DerivedParams& p = st.params;
    const cplx e = st.mix.even, o = st.mix.odd;
    switch (st.tag) {
        case CaseTag::GeneralKummer: {
            const cplx u = a - p.mu, x = p.scale * u * u, sd = p.sigma / p.delta;
            const cplx P = std::exp(p.gauss * a * a - sd * a);
            const cplx dP = P * (2.0 * p.gauss * a - sd);
            cplx f = 0, df = 0;
            if (active(e)) {
                f += e * kummer_1f1(p.d, 0.5, x);
                if (p.d != 0.0) df += e * 4.0 * p.d * p.scale * u * kummer_1f1(p.d + 1.0, 1.5, x);
            }
            if (active(o)) {
                const cplx g = kummer_1f1(p.d + 0.5, 1.5, x);
                f += o * u * g;
                df += o * g;
                if (p.d + 0.5 != 0.0)
                    df += o * u * ((p.d + 0.5) / 1.5) * kummer_1f1(p.d + 1.5, 2.5, x) * 2.0 * p.scale * u;
            }
            return {P * f, dP * f + P * df};
        }
        case CaseTag::DegenerateBessel: {
            const cplx lin = -s.b4() / (2.0 * s.b2());
            const cplx E = std::exp(p.gauss * a * a + lin * a);
            const cplx dE = E * (2.0 * p.gauss * a + lin);
            const cplx y = a - p.mu;
            cplx f = 0, df = 0;
            if (active(e)) {
                f += e * degenerate_kernel(p.scale, y, Parity::Even);
                df += e * degenerate_kernel_deriv(p.scale, y, Parity::Even);
            }
            if (active(o)) {
                f += o * degenerate_kernel(p.scale, y, Parity::Odd);
                df += o * degenerate_kernel_deriv(p.scale, y, Parity::Odd);
            }
            return {E * f, dE * f + E * df};
        }
        case CaseTag::ConstantCoeff: {
            const cplx G = std::exp(p.gauss * a * a), dG = G * 2.0 * p.gauss * a;
            const cplx wb = (p.omega_plus + p.omega_minus) / 2.0, hd = (p.omega_plus - p.omega_minus) / 2.0;
            const cplx h = hd * a, ew = std::exp(wb * a);
            const cplx ch = std::cosh(h), shc = sinhc(h), sh = std::sinh(h);
            const cplx te = ew * ch, dte = ew * (wb * ch + hd * sh);
            const cplx to = ew * a * shc, dto = ew * (wb * a * shc + ch);
            const cplx f = e * te + o * to, df = e * dte + o * dto;
            return {G * f, dG * f + G * df};
        }
        case CaseTag::FirstOrderSqueezeLike:
        case CaseTag::Oscillator: {
            const cplx b1 = s.b1();
            const cplx B = (s.b3() * s.b4() - b1 * s.b5()) / (b1 * b1);
            const cplx E = std::exp(p.gauss * a * a + B * a), dE = E * (2.0 * p.gauss * a + B);
            const cplx w = a + s.b4() / b1;
            const int n = static_cast<int>(std::lround(p.p.real()));
            cplx wn = 1.0, dwn = 0.0;
            for (int k = 0; k < n; ++k) {
                dwn = dwn * w + wn;
                wn *= w;
            }
            return {wn * E, dwn * E + wn * dE};
        }
        case CaseTag::Heisenberg: {
            const cplx B = s.lambda / s.b4();
            const cplx E = std::exp(p.gauss * a * a + B * a);
            return {E, E * (2.0 * p.gauss * a + B)};
        }
    }
    return {0, 0};
}

// exact Taylor coefficients a_0..a_n of (alpha+w)^n exp(A alpha^2 + B alpha)
std::vector<cplx> first_order_taylor(cplx w, cplx A, cplx B, int n) {
    std::vector<cplx> g(n + 1, 0.0), poly(n + 1, 0.0), out(n + 1, 0.0);
    g[0] = 1.0;
    for (int k = 0; k < n; ++k) g[k + 1] = (B * g[k] + (k >= 1 ? 2.0 * A * g[k - 1] : 0.0)) / static_cast<double>(k + 1);
    // binomial(n,k) w^{n-k}
    poly[0] = 1.0;
    for (int m = 0; m < n; ++m)
        for (int k = m + 1; k >= 0; --k) poly[k] = (k > 0 ? poly[k - 1] : 0.0) + w * poly[k];
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[i + j] += poly[i] * g[j];
    return out;
}

struct Pinned {
    std::vector<cplx> c;  // Fock-normalized coefficients c_0..c_{P-1}
};

Pinned pinned_coefficients(const AnalyticState& st) {
    Pinned pin;
    switch (st.tag) {
        case CaseTag::GeneralKummer:
        case CaseTag::DegenerateBessel:
        case CaseTag::ConstantCoeff: {
            auto [v, dv] = eval_pair(st, 0.0);
            pin.c = {v * st.norm, dv * st.norm};
            break;
        }
        case CaseTag::FirstOrderSqueezeLike:
        case CaseTag::Oscillator: {
            const AlgebraSpec& s = st.spec;
            const cplx b1 = s.b1();
            const int n = static_cast<int>(std::lround(st.params.p.real()));
            const cplx B = (s.b3() * s.b4() - b1 * s.b5()) / (b1 * b1);
            auto a = first_order_taylor(s.b4() / b1, st.params.gauss, B, n);
            double fact = 1.0;
            for (int k = 0; k <= n; ++k) {
                if (k > 0) fact *= std::sqrt(static_cast<double>(k));
                pin.c.push_back(a[k] * fact * st.norm);
            }
            break;
        }
        case CaseTag::Heisenberg:
            pin.c = {st.norm};
            break;
    }
    return pin;
}

// row n of (M - lambda) on columns n-2..n+2
std::array<cplx, 5> operator_row(const AlgebraSpec& s, int n) {
    const double dn = n;
    return {s.b3() * std::sqrt(std::max(0.0, dn * (dn - 1.0))), s.b5() * std::sqrt(dn), s.b1() * dn - s.lambda,
            s.b4() * std::sqrt(dn + 1.0), s.b2() * std::sqrt((dn + 1.0) * (dn + 2.0))};
}

constexpr int kW = 8;

struct BandRow {
    int start = 0;
    std::array<cplx, kW> v{};
    cplx rhs{};
    bool filled = false;
};

// min || A x - b || over unknown c_P..c_{N-1}; returns coefficients and residual
std::vector<cplx> banded_least_squares(const AlgebraSpec& s, const std::vector<cplx>& pinned, int N, double& residual) {
    const int P = static_cast<int>(pinned.size());
    const int U = N - P;
    std::vector<BandRow> R(std::max(U, 0));
    double res2 = 0.0;
    for (int n = 0; n < N; ++n) {
        auto row = operator_row(s, n);
        BandRow cur;
        cur.start = n - 2 - P;
        for (int k = 0; k < 5; ++k) {
            int m = n - 2 + k;
            if (m < 0 || m >= N) continue;
            if (m < P)
                cur.rhs -= row[k] * pinned[m];
            else
                cur.v[k] = row[k];
        }
        // rebase so that start >= 0 (entries below column 0 are pinned and already moved)
        while (cur.start < 0) {
            for (int k = 0; k + 1 < kW; ++k) cur.v[k] = cur.v[k + 1];
            cur.v[kW - 1] = 0.0;
            ++cur.start;
        }
        for (;;) {
            int lead = -1;
            for (int k = 0; k < kW; ++k)
                if (cur.v[k] != 0.0) {
                    lead = k;
                    break;
                }
            if (lead < 0 || cur.start + lead >= U) {
                res2 += std::norm(cur.rhs);
                break;
            }
            for (int k = 0; k + lead < kW; ++k) cur.v[k] = cur.v[k + lead];
            for (int k = kW - lead; k < kW; ++k) cur.v[k] = 0.0;
            cur.start += lead;
            BandRow& r = R[cur.start];
            if (!r.filled) {
                r = cur;
                r.filled = true;
                break;
            }
            const cplx a = r.v[0], b = cur.v[0];
            const double rr = std::hypot(std::abs(a), std::abs(b));
            cplx c, sn;
            if (std::abs(a) == 0.0) {
                c = 0.0;
                sn = 1.0;
            } else {
                c = std::abs(a) / rr;
                sn = (a / std::abs(a)) * std::conj(b) / rr;
            }
            for (int k = 0; k < kW; ++k) {
                cplx x = r.v[k], y = cur.v[k];
                r.v[k] = c * x + sn * y;
                cur.v[k] = -std::conj(sn) * x + c * y;
            }
            cplx x = r.rhs, y = cur.rhs;
            r.rhs = c * x + sn * y;
            cur.rhs = -std::conj(sn) * x + c * y;
            cur.v[0] = 0.0;
        }
    }
    std::vector<cplx> c(N, 0.0);
    for (int i = 0; i < P; ++i) c[i] = pinned[i];
    std::vector<cplx> x(std::max(U, 0), 0.0);
    for (int u = U - 1; u >= 0; --u) {
        const BandRow& r = R[u];
        if (!r.filled || r.v[0] == 0.0) throw Error(ErrorKind::NotConverged, "recurrence system is rank deficient");
        cplx acc = r.rhs;
        for (int k = 1; k < kW && u + k < U; ++k) acc -= r.v[k] * x[u + k];
        x[u] = acc / r.v[0];
    }
    for (int u = 0; u < U; ++u) c[P + u] = x[u];
    residual = std::sqrt(res2);
    return c;
}

std::vector<cplx> forward_from_pinned(const AlgebraSpec& s, const std::vector<cplx>& pinned, int N) {
    std::vector<cplx> c(N, 0.0);
    const int P = static_cast<int>(pinned.size());
    for (int i = 0; i < std::min(P, N); ++i) c[i] = pinned[i];
    const double sc = s.scale();
    auto row_sum_except = [&](int n, int skip) {
        auto row = operator_row(s, n);
        cplx acc = 0.0;
        for (int k = 0; k < 5; ++k) {
            int m = n - 2 + k;
            if (m < 0 || m >= N || k == skip) continue;
            acc += row[k] * c[m];
        }
        return std::pair{acc, row[skip]};
    };
    if (!is_zero(s.b2(), sc)) {
        for (int n = 0; n + 2 < N; ++n) {
            if (n + 2 < P) continue;
            auto [acc, piv] = row_sum_except(n, 4);
            c[n + 2] = -acc / piv;
        }
    } else if (!is_zero(s.b4(), sc)) {
        for (int n = 0; n + 1 < N; ++n) {
            if (n + 1 < P) continue;
            auto [acc, piv] = row_sum_except(n, 3);
            c[n + 1] = -acc / piv;
        }
    } else {
        for (int n = P; n < N; ++n) {
            auto [acc, piv] = row_sum_except(n, 2);
            c[n] = piv == 0.0 ? 0.0 : -acc / piv;
        }
    }
    return c;
}

double l2(const std::vector<cplx>& c) {
    double s = 0.0;
    for (auto z : c) s += std::norm(z);
    return std::sqrt(s);
}

cplx finalize_factor(FockVector& v) {
    const double nrm = l2(v.coeffs);
    v.raw_norm = nrm;
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw Error(ErrorKind::NotConverged, "Fock vector has no finite norm");
    double mx = 0.0;
    for (auto z : v.coeffs) mx = std::max(mx, std::abs(z));
    cplx phase = 1.0;
    for (auto z : v.coeffs)
        if (std::abs(z) > 1e-10 * mx) {
            phase = std::conj(z) / std::abs(z);
            break;
        }
    const cplx f = phase / nrm;
    for (auto& z : v.coeffs) z *= f;
    v.dim = static_cast<int>(v.coeffs.size());
    v.norm = l2(v.coeffs);
    double tail = 0.0;
    for (int n = std::max(0, v.dim - kTailWindow); n < v.dim; ++n) tail += std::norm(v.coeffs[n]);
    v.tail_mass = tail;
    return f;
}

std::pair<FockVector, cplx> fock_fixed(const AnalyticState& st, int N, const FockOptions& opts) {
    if (N < 8) throw Error(ErrorKind::InvalidArgument, "Fock dimension must be at least 8");
    Pinned pin = pinned_coefficients(st);
    if (static_cast<int>(pin.c.size()) >= N) throw Error(ErrorKind::TruncationNotConverged, "Fock dimension below polynomial degree");
    FockVector v;
    double res = 0.0;
    if (opts.method == RecurrenceMethod::LeastSquares) {
        v.coeffs = banded_least_squares(st.spec, pin.c, N, res);
    } else {
        v.coeffs = forward_from_pinned(st.spec, pin.c, N);
        for (int n = 0; n < N; ++n) {
            auto row = operator_row(st.spec, n);
            cplx acc = 0.0;
            for (int k = 0; k < 5; ++k) {
                int m = n - 2 + k;
                if (m >= 0 && m < N) acc += row[k] * v.coeffs[m];
            }
            res += std::norm(acc);
        }
        res = std::sqrt(res);
    }
    const double raw = l2(v.coeffs);
    bool finite_all = std::isfinite(raw) && raw > 0.0;
    cplx f = 1.0;
    if (finite_all) {
        f = finalize_factor(v);
        v.recurrence_residual = res / raw;
    } else {
        v.dim = N;
        v.tail_mass = std::numeric_limits<double>::infinity();
        v.recurrence_residual = std::numeric_limits<double>::infinity();
    }
    v.converged = finite_all && v.tail_mass <= opts.tail_threshold && v.recurrence_residual <= opts.residual_tol;
    return {v, f};
}

std::pair<FockVector, cplx> fock_auto(const AnalyticState& st, const FockOptions& opts) {
    int N = std::max(opts.n_start, 8);
    for (;;) {
        auto r = fock_fixed(st, N, opts);
        if (r.first.converged) return r;
        if (N >= opts.n_max) {
            if (opts.require_converged)
                throw Error(ErrorKind::TruncationNotConverged,
                            "tail mass " + std::to_string(r.first.tail_mass) + " at N=" + std::to_string(N));
            return r;
        }
        N = std::min(2 * N, opts.n_max);
    }
}

}  // namespace

double AlgebraSpec::scale() const {
    double m = 0.0;
    for (auto b : beta) m = std::max(m, std::abs(b));
    return m;
}

void AlgebraSpec::validate() const {
    for (auto b : beta)
        if (!finite(b)) throw Error(ErrorKind::InvalidArgument, "non-finite beta");
    if (!finite(lambda)) throw Error(ErrorKind::InvalidArgument, "non-finite lambda");
    if (scale() == 0.0) throw Error(ErrorKind::InvalidArgument, "all beta coefficients vanish");
}

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::GeneralKummer: return "GeneralKummer";
        case CaseTag::DegenerateBessel: return "DegenerateBessel";
        case CaseTag::ConstantCoeff: return "ConstantCoeff";
        case CaseTag::FirstOrderSqueezeLike: return "FirstOrderSqueezeLike";
        case CaseTag::Oscillator: return "Oscillator";
        case CaseTag::Heisenberg: return "Heisenberg";
    }
    return "Unknown";
}

CaseTag classify(const AlgebraSpec& s) {
    s.validate();
    const double sc = s.scale();
    if (!is_zero(s.b2(), sc)) {
        const cplx d2 = s.b1() * s.b1() - 4.0 * s.b2() * s.b3();
        if (std::abs(d2) > kZeroRel * sc * sc) return CaseTag::GeneralKummer;
        const cplx sigma = -s.b4() * s.b1() / (2.0 * s.b2()) + s.b5();
        return is_zero(sigma, sc) ? CaseTag::ConstantCoeff : CaseTag::DegenerateBessel;
    }
    if (!is_zero(s.b1(), sc)) return is_zero(s.b3(), sc) ? CaseTag::Oscillator : CaseTag::FirstOrderSqueezeLike;
    if (!is_zero(s.b3(), sc)) throw Error(ErrorKind::NonNormalizable, "cubic Gaussian exponent (beta1 = beta2 = 0, beta3 != 0)");
    if (!is_zero(s.b4(), sc)) return CaseTag::Heisenberg;
    throw Error(ErrorKind::NoEigenstate, "the creation operator has no eigenstate");
}

DerivedParams derive_params(const AlgebraSpec& spec, Branch branch) {
    spec.validate();
    if (classify(spec) == CaseTag::GeneralKummer) {
        Choice c = choose_kummer(spec, nullptr, branch);
        if (!c.normalizable) throw Error(ErrorKind::NonNormalizable, "no normalizable solution for either branch");
        return c.params;
    }
    AnalyticState st = make_state(spec, Mix{}, branch, false);
    if (!st.normalizable) throw Error(ErrorKind::NonNormalizable, std::string("normalization condition fails (") + to_string(st.tag) + ")");
    return st.params;
}

AnalyticState solve_raw(const AlgebraSpec& spec, Mix mix, Branch branch) { return make_state(spec, mix, branch, true); }

AnalyticState solve(const AlgebraSpec& spec, Mix mix, Branch branch, const FockOptions& opts) {
    AnalyticState st = make_state(spec, mix, branch, true);
    auto [v, f] = fock_auto(st, opts);
    st.norm = f;
    return st;
}

cplx evaluate(const AnalyticState& st, cplx alpha) { return st.norm * eval_pair(st, alpha).first; }

cplx evaluate_derivative(const AnalyticState& st, cplx alpha) { return st.norm * eval_pair(st, alpha).second; }

Mix mix_from_seeds(const AlgebraSpec& spec, cplx a0, cplx a1, Branch branch) {
    AnalyticState e = make_state(spec, Mix{1.0, 0.0}, branch, false);
    AnalyticState o = make_state(spec, Mix{0.0, 1.0}, branch, false);
    if (e.tag != CaseTag::GeneralKummer && e.tag != CaseTag::DegenerateBessel && e.tag != CaseTag::ConstantCoeff)
        throw Error(ErrorKind::InvalidArgument, "mix_from_seeds needs a second-order case");
    o.params = e.params;
    auto [e0, e1] = eval_pair(e, 0.0);
    auto [o0, o1] = eval_pair(o, 0.0);
    const cplx det = e0 * o1 - o0 * e1;
    if (std::abs(det) == 0.0) throw Error(ErrorKind::InvalidArgument, "degenerate seed system");
    return {(a0 * o1 - o0 * a1) / det, (e0 * a1 - a0 * e1) / det};
}

FockVector fock_from_state(const AnalyticState& st, int N, const FockOptions& opts) {
    AnalyticState raw = st;
    raw.norm = 1.0;
    FockVector v = fock_fixed(raw, N, opts).first;
    if (opts.require_converged && !v.converged)
        throw Error(ErrorKind::TruncationNotConverged, "tail mass " + std::to_string(v.tail_mass) + " at N=" + std::to_string(N));
    return v;
}

std::vector<cplx> fock_raw_coefficients(const AnalyticState& st, const FockOptions& opts) {
    auto [v, f] = fock_auto(st, opts);
    for (auto& z : v.coeffs) z /= f;
    return v.coeffs;
}

FockVector fock_coefficients(const AlgebraSpec& spec, Mix mix, int N, const FockOptions& opts) {
    return fock_from_state(make_state(spec, mix, opts.branch, true), N, opts);
}

FockVector fock_coefficients(const AlgebraSpec& spec, Mix mix, const FockOptions& opts) {
    return fock_auto(make_state(spec, mix, opts.branch, true), opts).first;
}

std::vector<cplx> forward_recurrence(const AlgebraSpec& spec, cplx a0, cplx a1, int N) {
    spec.validate();
    std::vector<cplx> pin{a0};
    if (!is_zero(spec.b2(), spec.scale())) pin.push_back(a1);
    return forward_from_pinned(spec, pin, N);
}

cplx ode_residual(const AlgebraSpec& s, cplx f, cplx df, cplx d2f, cplx a) {
    return s.b2() * d2f + (s.b1() * a + s.b4()) * df + (s.b3() * a * a + s.b5() * a - s.lambda) * f;
}

double ode_residual_fd(const AnalyticState& st, cplx a, double h) {
    auto diffs = [&](double step) {
        const cplx fp = evaluate(st, a + step), fm = evaluate(st, a - step), f0 = evaluate(st, a);
        return std::array<cplx, 3>{f0, (fp - fm) / (2.0 * step), (fp - 2.0 * f0 + fm) / (step * step)};
    };
    const auto D1 = diffs(h), D2 = diffs(h / 2.0);
    const cplx f = D1[0];
    const cplx df = (4.0 * D2[1] - D1[1]) / 3.0, d2f = (4.0 * D2[2] - D1[2]) / 3.0;
    const AlgebraSpec& s = st.spec;
    const double mag = std::abs(s.b2() * d2f) + std::abs((s.b1() * a + s.b4()) * df) +
                       std::abs((s.b3() * a * a + s.b5() * a) * f) + std::abs(s.lambda * f);
    const double r = std::abs(ode_residual(s, f, df, d2f, a));
    return mag > 0.0 ? r / mag : r;
}

cplx fock_evaluate(const std::vector<cplx>& c, cplx alpha) {
    cplx term = 1.0, sum = 0.0;
    for (size_t n = 0; n < c.size(); ++n) {
        if (n > 0) term *= alpha / std::sqrt(static_cast<double>(n));
        sum += c[n] * term;
    }
    return sum;
}

void finalize_fock(FockVector& v) { finalize_factor(v); }

double fidelity(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const size_t n = std::min(a.size(), b.size());
    cplx ov = 0.0;
    for (size_t i = 0; i < n; ++i) ov += std::conj(a[i]) * b[i];
    return std::abs(ov) / (l2(a) * l2(b));
}

}  // namespace aes
