#include "aes/fock_oracle.hpp"

#include <cmath>

#include "aes/error.hpp"

namespace aes {

namespace {

ComplexMatrix interior_block(const ComplexMatrix& m, int n) {
    ComplexMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = m(i, j);
    return b;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double tail_of(const std::vector<cplx>& c) {
    double t = 0.0;
    for (size_t n = c.size() > static_cast<size_t>(kTailWindow) ? c.size() - kTailWindow : 0; n < c.size(); ++n)
        t += std::norm(c[n]);
    return t;
}

}  // namespace

bool CommutatorReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

OperatorMatrix annihilation(int N) {
    OperatorMatrix m{ComplexMatrix(N, N), N, "a"};
    for (int n = 0; n + 1 < N; ++n) m.entries(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
    return m;
}

OperatorMatrix creation(int N) {
    OperatorMatrix m{ComplexMatrix(N, N), N, "a+"};
    for (int n = 0; n + 1 < N; ++n) m.entries(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    return m;
}

OperatorMatrix number_op(int N) {
    OperatorMatrix m{ComplexMatrix(N, N), N, "N"};
    for (int n = 0; n < N; ++n) m.entries(n, n) = static_cast<double>(n);
    return m;
}

OperatorMatrix identity_op(int N) { return {ComplexMatrix::identity(N), N, "I"}; }

OperatorMatrix build_element(const AlgebraSpec& s, int N) {
    if (N < 8) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 8");
    OperatorMatrix m{ComplexMatrix(N, N), N, "b1 N + b2 a^2 + b3 a+^2 + b4 a + b5 a+"};
    for (int n = 0; n < N; ++n) {
        const double dn = n;
        m.entries(n, n) = s.b1() * dn;
        if (n + 2 < N) m.entries(n, n + 2) = s.b2() * std::sqrt((dn + 1.0) * (dn + 2.0));
        if (n >= 2) m.entries(n, n - 2) = s.b3() * std::sqrt(dn * (dn - 1.0));
        if (n + 1 < N) m.entries(n, n + 1) = s.b4() * std::sqrt(dn + 1.0);
        if (n >= 1) m.entries(n, n - 1) = s.b5() * std::sqrt(dn);
    }
    return m;
}

OperatorMatrix su11_generator(const std::string& name, int N) {
    const ComplexMatrix a = annihilation(N).entries, ad = creation(N).entries;
    const ComplexMatrix a2 = a * a, ad2 = ad * ad;
    ComplexMatrix m;
    if (name == "K+")
        m = 0.5 * ad2;
    else if (name == "K-")
        m = 0.5 * a2;
    else if (name == "K0")
        m = 0.5 * number_op(N).entries + 0.25 * ComplexMatrix::identity(N);
    else if (name == "K1")
        m = 0.25 * (ad2 + a2);
    else if (name == "K2")
        m = cplx(0.0, -0.25) * (ad2 - a2);
    else
        throw Error(ErrorKind::InvalidArgument, "unknown SU(1,1) generator " + name);
    return {m, N, name};
}

CommutatorReport commutator_check(int N, double tol) {
    if (N < 16) throw Error(ErrorKind::InvalidArgument, "commutator_check needs N >= 16");
    const int n = N - kEdgeBand;
    const ComplexMatrix a = annihilation(N).entries, ad = creation(N).entries, num = number_op(N).entries;
    const ComplexMatrix Id = ComplexMatrix::identity(N);
    const ComplexMatrix a2 = a * a, ad2 = ad * ad;
    const ComplexMatrix Kp = su11_generator("K+", N).entries, Km = su11_generator("K-", N).entries,
                        K0 = su11_generator("K0", N).entries, K1 = su11_generator("K1", N).entries,
                        K2 = su11_generator("K2", N).entries;
    struct Rel {
        const char* name;
        const ComplexMatrix *x, *y;
        ComplexMatrix rhs;
    };
    const std::vector<Rel> rels = {
        {"[a^2,a+^2] = 4N + 2I", &a2, &ad2, 4.0 * num + 2.0 * Id},
        {"[a,a+] = I", &a, &ad, Id},
        {"[a+^2,a] = -2a+", &ad2, &a, -2.0 * ad},
        {"[a^2,a+] = 2a", &a2, &ad, 2.0 * a},
        {"[N,a+^2] = 2a+^2", &num, &ad2, 2.0 * ad2},
        {"[N,a^2] = -2a^2", &num, &a2, -2.0 * a2},
        {"[N,a+] = a+", &num, &ad, ad},
        {"[N,a] = -a", &num, &a, -1.0 * a},
        {"[K-,K+] = 2K0", &Km, &Kp, 2.0 * K0},
        {"[K0,K+] = K+", &K0, &Kp, Kp},
        {"[K0,K-] = -K-", &K0, &Km, -1.0 * Km},
        {"[K1,K2] = -iK0", &K1, &K2, cplx(0.0, -1.0) * K0},
    };
    CommutatorReport rep;
    rep.dim = N;
    for (const auto& r : rels) {
        ComplexMatrix diff = interior_block(commutator(*r.x, *r.y) - r.rhs, n);
        CommutatorResult res;
        res.relation = r.name;
        res.deviation = diff.max_abs();
        res.scale = 1.0 + interior_block(*r.x, n).max_abs() * interior_block(*r.y, n).max_abs();
        res.pass = res.deviation <= tol * res.scale;
        rep.results.push_back(res);
    }
    return rep;
}

Residual eigen_residual(const AlgebraSpec& spec, const std::vector<cplx>& psi) {
    const int N = static_cast<int>(psi.size());
    const ComplexMatrix M = build_element(spec, N).entries;
    std::vector<cplx> y;
    kernels::matvec(M, psi, y);
    const int n = N - kEdgeBand;
    double s = 0.0, nn = 0.0;
    for (int i = 0; i < N; ++i) nn += std::norm(psi[i]);
    for (int i = 0; i < n; ++i) s += std::norm(y[i] - spec.lambda * psi[i]);
    return {std::sqrt(s / nn) / (1.0 + std::abs(spec.lambda)), n};
}

Residual eigen_residual(const AlgebraSpec& spec, const FockVector& psi, double tail_threshold) {
    if (!(psi.tail_mass <= tail_threshold))
        throw Error(ErrorKind::NotConverged, "state tail mass " + std::to_string(psi.tail_mass) + " above threshold");
    return eigen_residual(spec, psi.coeffs);
}

ComplexMatrix displacement_matrix(cplx z, int N) {
    ComplexMatrix g = z * creation(N).entries - std::conj(z) * annihilation(N).entries;
    return expm(g);
}

ComplexMatrix squeeze_matrix(cplx xi, int N) {
    const ComplexMatrix a = annihilation(N).entries, ad = creation(N).entries;
    ComplexMatrix g = (0.5 * xi) * (ad * ad) - (0.5 * std::conj(xi)) * (a * a);
    return expm(g);
}

FockVector make_fock(std::vector<cplx> coeffs) {
    FockVector v;
    v.coeffs = std::move(coeffs);
    finalize_fock(v);
    v.converged = true;
    return v;
}

FockVector wrap_fock(std::vector<cplx> coeffs) {
    FockVector v;
    v.coeffs = std::move(coeffs);
    v.dim = static_cast<int>(v.coeffs.size());
    double nn = 0.0;
    for (auto z : v.coeffs) nn += std::norm(z);
    v.norm = v.raw_norm = std::sqrt(nn);
    v.tail_mass = tail_of(v.coeffs);
    v.converged = true;
    return v;
}

FockVector pad(const FockVector& psi, int N) {
    FockVector v = psi;
    if (N > static_cast<int>(v.coeffs.size())) v.coeffs.resize(N, 0.0);
    v.dim = static_cast<int>(v.coeffs.size());
    v.tail_mass = tail_of(v.coeffs);
    return v;
}

FockVector fock_basis(int n, int N) {
    std::vector<cplx> c(N, 0.0);
    c.at(n) = 1.0;
    return make_fock(std::move(c));
}

namespace {

FockVector apply_unitary(const ComplexMatrix& U, const FockVector& psi, double tail_threshold) {
    std::vector<cplx> y;
    kernels::matvec(U, psi.coeffs, y);
    FockVector v;
    v.coeffs = std::move(y);
    v.dim = static_cast<int>(v.coeffs.size());
    double nn = 0.0;
    for (auto z : v.coeffs) nn += std::norm(z);
    v.norm = std::sqrt(nn);
    v.raw_norm = v.norm;
    v.tail_mass = tail_of(v.coeffs);
    v.converged = v.tail_mass <= tail_threshold;
    if (!v.converged)
        throw Error(ErrorKind::TruncationNotConverged, "transformed state leaks to the truncation edge (tail " +
                                                           std::to_string(v.tail_mass) + ")");
    return v;
}

}  // namespace

FockVector apply_displacement(cplx z, const FockVector& psi, double tail_threshold) {
    return apply_unitary(displacement_matrix(z, psi.dim), psi, tail_threshold);
}

FockVector apply_squeeze(cplx xi, const FockVector& psi, double tail_threshold) {
    return apply_unitary(squeeze_matrix(xi, psi.dim), psi, tail_threshold);
}

}  // namespace aes
