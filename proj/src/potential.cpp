#include "szego/potential.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

double wrap_pm_pi(const Real& x)
{
    Real tp = two_pi();
    Real r = x - tp * boost::multiprecision::round(x / tp);
    return to_double(r);
}

double sinc(double x)
{
    double ax = std::fabs(x);
    if (ax < 1e-4) return 1 - x * x / 6 + x * x * x * x / 120;
    return std::sin(x) / x;
}

// |2 sin(x/2)|
double chord(double x) { return std::fabs(2 * std::sin(x / 2)); }

// log S(d) where sin(d/2) = (d/2)(1 - d^2/4pi^2) S(d); smooth on |d| < 2pi
double log_S(double d)
{
    double ad = std::fabs(d);
    if (ad < kPi) {
        double r = ad / kTwoPi;
        return std::log(sinc(ad / 2)) - std::log1p(-r * r);
    }
    double e = 1 - ad / kTwoPi;   // sin(ad/2) = sin(pi e)
    return std::log(kPi * sinc(kPi * e)) - std::log((ad / 2) * (1 + ad / kTwoPi));
}

// L_k = integral_0^pi log|y - h cos psi| cos(k psi) d psi, k = 0..K-1
void log_moments(double y, double h, int K, std::vector<double>& L)
{
    L.assign(K, 0.0);
    double ay = std::fabs(y);
    if (ay <= h) {
        double t = std::acos(std::clamp(y / h, -1.0, 1.0));
        L[0] = kPi * (std::log(h) - std::log(2.0));
        for (int k = 1; k < K; ++k) L[k] = -(kPi / k) * std::cos(k * t);
    } else {
        double s = std::sqrt((ay - h) * (ay + h));
        double W = ay + s;
        L[0] = kPi * std::log(W / 2);
        double q = h / W * (y < 0 ? -1 : 1), qk = 1;
        for (int k = 1; k < K; ++k) {
            qk *= q;
            L[k] = -(kPi / k) * qk;
            if (std::fabs(qk) < 1e-300) break;
        }
    }
}

// Weights T_k with  integral log|2 sin((y - h cos psi)/2)| g(psi) d psi
//   = sum_k ghat_k T_k + (pi/K) sum_j log S(y - h cos psi_j) g_j.
void kernel_weights(double y, double h, int K, std::vector<double>& T)
{
    std::vector<double> A, B, C;
    log_moments(y, h, K, A);
    log_moments(kTwoPi - y, h, K, B);
    log_moments(kTwoPi + y, h, K, C);
    T.resize(K);
    for (int k = 0; k < K; ++k) T[k] = A[k] + (k % 2 ? -B[k] : B[k]) + C[k];
    T[0] -= 2 * kPi * std::log(kTwoPi);
}

std::vector<double> nodes_psi(int K)
{
    std::vector<double> psi(K);
    for (int j = 0; j < K; ++j) psi[j] = (j + 0.5) * kPi / K;
    return psi;
}

std::vector<double> dct(const std::vector<double>& g)
{
    const int K = static_cast<int>(g.size());
    std::vector<double> c(K, 0.0);
    for (int k = 0; k < K; ++k) {
        double s = 0;
        for (int j = 0; j < K; ++j) s += g[j] * std::cos(k * (j + 0.5) * kPi / K);
        c[k] = s * (k == 0 ? 1.0 : 2.0) / K;
    }
    return c;
}

struct Geometry {
    int p = 0;
    std::vector<Real> center;
    std::vector<double> half;
    std::vector<Real> gap_center;
    std::vector<double> gap_half;
    std::vector<std::vector<double>> D;    // wrap(center_a - center_b)
    std::vector<std::vector<double>> DG;   // wrap(center_a - gap_center_j)
    std::vector<std::vector<double>> GG;   // wrap(gap_center_i - gap_center_j)
    std::vector<std::vector<double>> GA;   // wrap(gap_center_i - center_b)
};

Geometry make_geometry(const ArcSet& E)
{
    Geometry G;
    G.p = static_cast<int>(E.size());
    const Real tp = two_pi();
    for (const auto& a : E.arcs()) {
        G.center.push_back(a.center());
        G.half.push_back(a.length / 2);
    }
    for (int j = 0; j < G.p; ++j) {
        const Arc& a = E.arcs()[j];
        const Arc& b = E.arcs()[(j + 1) % G.p];
        Real end = a.start_real() + Real(a.length);
        Real next = b.start_real();
        if (j + 1 == G.p) next += tp;
        Real len = next - end;
        G.gap_center.push_back(end + len / 2);
        G.gap_half.push_back(to_double(len) / 2);
    }
    auto mat = [&](const std::vector<Real>& x, const std::vector<Real>& y) {
        std::vector<std::vector<double>> M(x.size(), std::vector<double>(y.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) M[i][j] = wrap_pm_pi(x[i] - y[j]);
        return M;
    };
    G.D = mat(G.center, G.center);
    G.DG = mat(G.center, G.gap_center);
    G.GG = mat(G.gap_center, G.gap_center);
    G.GA = mat(G.gap_center, G.center);
    return G;
}

// unit-mass integral of log|2 sin((theta - t)/2)| over arc b, theta - center_b = y
double arc_integral(const EquilibriumResult& eq, int b, double y, std::vector<double>& T)
{
    const int K = eq.nodes;
    const double h = eq.half[b];
    kernel_weights(y, h, K, T);
    double s = 0;
    for (int k = 0; k < K; ++k) s += eq.gcoef[b][k] * T[k];
    double corr = 0;
    for (int j = 0; j < K; ++j) corr += log_S(y - h * std::cos((j + 0.5) * kPi / K)) * eq.g[b][j];
    return s + corr * kPi / K;
}

double unit_potential_at(const EquilibriumResult& eq, const std::vector<double>& Drow, int a, double y)
{
    std::vector<double> T;
    double U = 0;
    for (int b = 0; b < static_cast<int>(Drow.size()); ++b) {
        double yb = b == a ? y : std::remainder(Drow[b] + y, kTwoPi);
        U += arc_integral(eq, b, yb, T);
    }
    return U;
}

// ------------------------------------------------------------ energy (collocation)

bool solve_collocation(const Geometry& G, int K, EquilibriumResult& eq)
{
    const int p = G.p, N = p * K;
    const auto psi = nodes_psi(K);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N + 1, N + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N + 1);
    // cosine transform matrix
    Eigen::MatrixXd C(K, K);
    for (int k = 0; k < K; ++k)
        for (int j = 0; j < K; ++j) C(k, j) = std::cos(k * psi[j]) * (k == 0 ? 1.0 : 2.0) / K;
    std::vector<double> T;
    for (int a = 0; a < p; ++a)
        for (int i = 0; i < K; ++i) {
            const int row = a * K + i;
            const double ya = G.half[a] * std::cos(psi[i]);
            for (int b = 0; b < p; ++b) {
                double y = b == a ? ya : std::remainder(G.D[a][b] + ya, kTwoPi);
                kernel_weights(y, G.half[b], K, T);
                Eigen::Map<Eigen::RowVectorXd> Tv(T.data(), K);
                Eigen::RowVectorXd w = Tv * C;
                for (int j = 0; j < K; ++j)
                    A(row, b * K + j) = w(j) + kPi / K * log_S(y - G.half[b] * std::cos(psi[j]));
            }
            A(row, N) = -1;
        }
    for (int c = 0; c < N; ++c) A(N, c) = kPi / K;
    rhs(N) = 1;
    Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    if (!sol.allFinite()) return false;
    eq.nodes = K;
    eq.g.assign(p, std::vector<double>(K));
    eq.gcoef.assign(p, {});
    for (int a = 0; a < p; ++a) {
        for (int j = 0; j < K; ++j) eq.g[a][j] = sol(a * K + j);
        eq.gcoef[a] = dct(eq.g[a]);
    }
    eq.log_capacity = sol(N);
    return true;
}

// ------------------------------------------------------------ parametric

// g(psi) on arc a, unit mass, from the closed form with the current betas
double parametric_g(const std::vector<std::vector<double>>& D, const std::vector<std::vector<double>>& DG,
                    const std::vector<double>& half, const std::vector<double>& boff, int a, double y, double dl,
                    double dr)
{
    const int p = static_cast<int>(half.size());
    double logv = -std::log(kTwoPi);
    for (int j = 0; j < p; ++j) logv += std::log(chord(DG[a][j] + y - boff[j]));
    for (int b = 0; b < p; ++b) {
        if (b == a) continue;
        logv -= 0.5 * std::log(chord(D[a][b] + y + half[b]));
        logv -= 0.5 * std::log(chord(D[a][b] + y - half[b]));
    }
    // own endpoints against the Jacobian sqrt(dl dr)
    logv -= 0.5 * std::log(sinc(dl / 2) * sinc(dr / 2));
    return std::exp(logv);
}

// signed integrand on gap i (times the Jacobian), theta = gap_center_i + x
double gap_integrand(const Geometry& G, const std::vector<double>& boff, int i, double x, double dl, double dr)
{
    double v = 1;
    for (int j = 0; j < G.p; ++j) {
        double d = (j == i) ? x - boff[j] : G.GG[i][j] + x - boff[j];
        v *= (j == i) ? 2 * std::sin(d / 2) : chord(d);
    }
    const int right_arc = (i + 1) % G.p;   // arc whose left end closes gap i
    for (int b = 0; b < G.p; ++b) {
        double lo = G.GA[i][b] + x + G.half[b];   // theta - left end of b
        double hi = G.GA[i][b] + x - G.half[b];   // theta - right end of b
        // the arcs bounding the gap: one end is the gap end itself, the far end
        // is taken from the gap-end distances so tiny arcs keep their width
        if (b == i) {
            hi = 0;
            lo = dl + 2 * G.half[b];
        }
        if (b == right_arc) {
            lo = 0;
            hi = b == i ? 0 : dr + 2 * G.half[b];
        }
        if (lo != 0) v /= std::sqrt(chord(lo));
        if (hi != 0) v /= std::sqrt(chord(hi));
    }
    return v / std::sqrt(sinc(dl / 2) * sinc(dr / 2));
}

std::vector<double> parametric_residual(const Geometry& G, const std::vector<double>& boff, int K)
{
    const auto psi = nodes_psi(K);
    std::vector<double> F;
    // tanh-sinh in theta: near a tiny neighbouring arc the integrand looks like
    // 1/sqrt(x (x + w)), which a fixed Chebyshev grid cannot resolve
    static thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
    for (int i = 0; i < G.p; ++i) {
        const double h = G.gap_half[i];
        auto f = [&](double x, double xc) {
            const double dl = xc < 0 ? -xc : h + x;
            const double dr = xc < 0 ? h - x : xc;
            return gap_integrand(G, boff, i, x, dl, dr) / (std::sqrt(dl) * std::sqrt(dr));
        };
        double err = 0, L1 = 0;
        const double s = ts.integrate(f, -h, h, 1e-14, &err, &L1);
        F.push_back(s / L1);
    }
    double mass = 0;
    for (int a = 0; a < G.p; ++a) {
        const double h = G.half[a];
        for (int j = 0; j < K; ++j) {
            double c = std::cos(psi[j]);
            mass += parametric_g(G.D, G.DG, G.half, boff, a, h * c, h * (1 + c), h * (1 - c));
        }
    }
    F.push_back(mass * kPi / K - 1);
    return F;
}

bool solve_parametric(const Geometry& G, int K, EquilibriumResult& eq)
{
    const int p = G.p;
    std::vector<double> u(p, 0.0);
    auto offsets = [&](const std::vector<double>& uu) {
        std::vector<double> b(p);
        for (int j = 0; j < p; ++j) b[j] = G.gap_half[j] * std::tanh(uu[j]);
        return b;
    };
    std::vector<double> F = parametric_residual(G, offsets(u), K);
    auto nrm = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s = std::max(s, std::fabs(x));
        return s;
    };
    for (int it = 0; it < 200 && nrm(F) > 1e-14; ++it) {
        const int m = static_cast<int>(F.size());
        Eigen::MatrixXd J(m, p);
        for (int c = 0; c < p; ++c) {
            auto up = u;
            const double step = 1e-7 * std::max(1.0, std::fabs(u[c]));
            up[c] += step;
            auto Fp = parametric_residual(G, offsets(up), K);
            for (int r = 0; r < m; ++r) J(r, c) = (Fp[r] - F[r]) / step;
        }
        Eigen::VectorXd rhs(m);
        for (int r = 0; r < m; ++r) rhs(r) = -F[r];
        // Gauss-Newton: the total mass does not depend on the betas, so the
        // system is square only through the p gap conditions
        Eigen::VectorXd du = J.colPivHouseholderQr().solve(rhs);
        if (!du.allFinite()) return false;
        double lam = 1;
        bool moved = false;
        for (int k = 0; k < 30; ++k) {
            std::vector<double> trial(u);
            for (int j = 0; j < p; ++j) trial[j] += lam * std::clamp(du(j), -3.0, 3.0);
            auto Ft = parametric_residual(G, offsets(trial), K);
            if (nrm(Ft) < nrm(F)) {
                u = trial;
                F = Ft;
                moved = true;
                break;
            }
            lam /= 2;
        }
        if (!moved) break;
    }
    if (nrm(F) > 1e-10) return false;

    const auto boff = offsets(u);
    const auto psi = nodes_psi(K);
    eq.nodes = K;
    eq.beta_offsets = boff;
    eq.betas.clear();
    for (int j = 0; j < p; ++j) eq.betas.push_back(G.gap_center[j] + Real(boff[j]));
    eq.g.assign(p, std::vector<double>(K));
    eq.gcoef.assign(p, {});
    for (int a = 0; a < p; ++a) {
        const double h = G.half[a];
        for (int j = 0; j < K; ++j) {
            double c = std::cos(psi[j]);
            eq.g[a][j] = parametric_g(G.D, G.DG, G.half, boff, a, h * c, h * (1 + c), h * (1 - c));
        }
        eq.gcoef[a] = dct(eq.g[a]);
    }
    // log cap from the potential at the node closest to the arc center
    double s = 0;
    int cnt = 0;
    for (int a = 0; a < p; ++a) {
        s += unit_potential_at(eq, G.D[a], a, G.half[a] * std::cos(psi[K / 2]));
        ++cnt;
    }
    eq.log_capacity = s / cnt;
    return true;
}

void finish_checks(const Geometry& G, EquilibriumResult& eq)
{
    const int K = eq.nodes;
    double flat = 0, mind = HUGE_VAL;
    for (int a = 0; a < G.p; ++a) {
        for (int j = 1; j < K; ++j) {
            double y = G.half[a] * std::cos(j * kPi / K);
            flat = std::max(flat, std::fabs(unit_potential_at(eq, G.D[a], a, y) - eq.log_capacity));
        }
        for (double v : eq.g[a]) mind = std::min(mind, v);
    }
    eq.flatness = flat;
    eq.min_density = mind;
}

}  // namespace

// ------------------------------------------------------------ public

double EquilibriumResult::potential_at(int a, double y) const
{
    if (full_circle) return 0.0;
    return normalization * unit_potential_at(*this, center_diff[a], a, y);
}

double EquilibriumResult::potential(const Real& theta) const
{
    if (full_circle) return 0.0;
    std::vector<double> T;
    double U = 0;
    for (std::size_t b = 0; b < centers.size(); ++b) U += arc_integral(*this, static_cast<int>(b), wrap_pm_pi(theta - centers[b]), T);
    return normalization * U;
}

double EquilibriumResult::density_at(int a, double y) const
{
    if (full_circle) return normalization / kTwoPi;
    return density_at(a, y, half[a] + y, half[a] - y);
}

double EquilibriumResult::density_at(int a, double y, double dl, double dr) const
{
    if (full_circle) return normalization / kTwoPi;
    const double h = half[a];
    if (!beta_offsets.empty()) {
        double g = parametric_g(center_diff, center_gap_diff, half, beta_offsets, a, y, dl, dr);
        return normalization * g / (std::sqrt(dl) * std::sqrt(dr));
    }
    double c = std::clamp(y / h, -1.0, 1.0);
    double psi = std::acos(c);
    double s = 0;
    for (std::size_t k = 0; k < gcoef[a].size(); ++k) s += gcoef[a][k] * std::cos(k * psi);
    return normalization * s / (std::sqrt(dl) * std::sqrt(dr));
}

double EquilibriumResult::cumulative_at(int a, double y) const
{
    if (full_circle) return normalization * (y + kPi) / kTwoPi;
    const double h = half[a];
    double psi = std::acos(std::clamp(y / h, -1.0, 1.0));
    double s = gcoef[a][0] * (kPi - psi);
    for (std::size_t k = 1; k < gcoef[a].size(); ++k) s -= gcoef[a][k] * std::sin(k * psi) / static_cast<double>(k);
    return normalization * s;
}

EquilibriumResult equilibrium_measure(const ArcSet& E, double normalization, EquilibriumMethod method,
                                      const EquilibriumOptions& opt)
{
    if (E.empty()) throw PreconditionError("equilibrium measure of an empty set");
    if (!(normalization > 0)) throw PreconditionError("normalization must be positive");
    EquilibriumResult eq;
    eq.arcs = E;
    eq.method = method;
    eq.normalization = normalization;
    if (E.is_full_circle()) {
        eq.full_circle = true;
        eq.centers = {Real(0)};
        eq.half = {kPi};
        eq.capacity = 1;
        eq.log_capacity = 0;
        eq.energy = 0;
        eq.min_density = 1 / kTwoPi;
        return eq;
    }
    Geometry G = make_geometry(E);
    eq.centers = G.center;
    eq.half = G.half;
    eq.center_diff = G.D;
    eq.center_gap_diff = G.DG;
    double last_flat = HUGE_VAL;
    for (int K = opt.nodes; K <= opt.max_nodes; K *= 2) {
        bool ok = method == EquilibriumMethod::energy ? solve_collocation(G, K, eq) : solve_parametric(G, K, eq);
        if (!ok) {
            // narrow gaps can stall Newton on a coarse grid
            if (method == EquilibriumMethod::parametric && 2 * K <= opt.max_nodes) continue;
            if (method == EquilibriumMethod::parametric)
                throw ConvergenceError("parametric equilibrium solve did not converge (" + std::to_string(G.p) + " arcs)");
            throw ConvergenceError("collocation system is singular");
        }
        finish_checks(G, eq);
        last_flat = eq.flatness;
        if (eq.flatness <= opt.flatness_tol * std::max(1.0, std::fabs(eq.log_capacity))) break;
        if (2 * K > opt.max_nodes)
            throw ConvergenceError("equilibrium potential not flat: deviation " + to_decimal(Real(last_flat), 3) +
                                   " with " + std::to_string(K) + " nodes per arc");
    }
    eq.capacity = std::exp(eq.log_capacity);
    eq.energy = -eq.log_capacity;
    // off-set probes: 64 per gap
    double mn = HUGE_VAL;
    std::vector<double> T;
    for (int j = 0; j < G.p; ++j)
        for (int i = 0; i < 64; ++i) {
            double x = G.gap_half[j] * (2 * (i + 0.5) / 64 - 1);
            Real theta = G.gap_center[j] + Real(x);
            double U = 0;
            for (int b = 0; b < G.p; ++b) U += arc_integral(eq, b, wrap_pm_pi(theta - G.center[b]), T);
            mn = std::min(mn, U - eq.log_capacity);
        }
    eq.off_set_min_excess = mn;
    return eq;
}

CapacityComparison compare_capacity(const ArcSet& E, double tol)
{
    CapacityComparison c;
    auto a = equilibrium_measure(E, 1, EquilibriumMethod::energy);
    auto b = equilibrium_measure(E, 1, EquilibriumMethod::parametric);
    c.energy = a.capacity;
    c.parametric = b.capacity;
    // relative difference via logs so tiny capacities compare sensibly
    c.rel_diff = std::fabs(std::expm1(a.log_capacity - b.log_capacity));
    if (c.rel_diff > tol)
        throw ConvergenceError("capacity methods disagree: energy " + std::to_string(a.capacity) + ", parametric " +
                               std::to_string(b.capacity));
    return c;
}

double log_capacity(const ArcSet& E) { return equilibrium_measure(E).log_capacity; }

double capacity(const ArcSet& E) { return std::exp(log_capacity(E)); }

double log_density_derivative(const EquilibriumResult& eq, int a, double y)
{
    if (eq.beta_offsets.empty()) throw PreconditionError("closed-form derivative needs the parametric solution");
    const int p = static_cast<int>(eq.half.size());
    const double h = eq.half[a];
    auto half_cot = [](double x) { return 0.5 / std::tan(x / 2); };
    double s = 0;
    for (int j = 0; j < p; ++j) s += half_cot(eq.center_gap_diff[a][j] + y - eq.beta_offsets[j]);
    for (int b = 0; b < p; ++b) {
        double lo = b == a ? h + y : eq.center_diff[a][b] + y + eq.half[b];
        double hi = b == a ? y - h : eq.center_diff[a][b] + y - eq.half[b];
        s -= 0.5 * (half_cot(lo) + half_cot(hi));
    }
    return s;
}

}  // namespace szego
