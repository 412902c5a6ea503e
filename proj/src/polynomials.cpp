#include "szego/polynomials.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/zeta.hpp>
#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace szego {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

using cd = std::complex<double>;

// In-place DFT, sign -1: X_k = sum x_j e^{-2 pi i jk/N}
void fft(std::vector<cd>& x, int sign)
{
    const int N = static_cast<int>(x.size());
    auto* p = reinterpret_cast<fftw_complex*>(x.data());
    fftw_plan plan = fftw_plan_dft_1d(N, p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

double circ_dist_to_arc(double theta, const Arc& a)
{
    double d = std::fmod(theta - a.start, kTwoPi);
    if (d < 0) d += kTwoPi;
    if (d <= a.length) return 0.0;
    return std::min(d - a.length, kTwoPi - d);
}

}  // namespace

double grid_sup(const CirclePolynomial& p, int points)
{
    double best = 0;
    for (int i = 0; i < points; ++i) best = std::max(best, p.abs_on_circle(kTwoPi * i / points));
    return best;
}

// ---------------------------------------------------------------- Halasz

HalaszResult halasz_polynomial(int d, int grid)
{
    if (d < 1) throw PreconditionError("halasz degree must be at least 1");
    HalaszResult res;
    res.d = d;
    res.bound = 1.0 + 2.0 / d;
    std::vector<double> h(d + 1, 0.0);   // full coefficient vector
    h[0] = 1.0;

    if (d > 1) {
        // H = f + B x with f = 1 - z^d and B_k = z^k - z^d, k = 1..d-1 (real x).
        // Real coefficients make |H| even in theta, so [0, pi] suffices.
        const int m = d - 1;
        const int G = std::max(512, 32 * d);
        // stacked real and imaginary parts: rows 0..G and G+1..2G+1
        Eigen::MatrixXd B(2 * (G + 1), m);
        Eigen::VectorXd f(2 * (G + 1));
        for (int i = 0; i <= G; ++i) {
            double t = kPi * i / G;
            cd zd = std::polar(1.0, d * t);
            f(i) = 1.0 - zd.real();
            f(G + 1 + i) = -zd.imag();
            for (int k = 1; k <= m; ++k) {
                cd b = std::polar(1.0, k * t) - zd;
                B(i, k - 1) = b.real();
                B(G + 1 + i, k - 1) = b.imag();
            }
        }
        Eigen::VectorXd w = Eigen::VectorXd::Constant(G + 1, 1.0 / (G + 1));
        Eigen::VectorXd x = Eigen::VectorXd::Zero(m), best_x = x;
        double best = HUGE_VAL;
        // Lawson iteration: weighted least squares, weights pushed toward the peaks.
        // Convergence is linear; 1000 steps land within 1e-3 of the optimum.
        for (int it = 0; it < 1000; ++it) {
            Eigen::VectorXd ww(2 * (G + 1));
            ww << w, w;
            Eigen::MatrixXd WB = ww.asDiagonal() * B;
            Eigen::MatrixXd N = B.transpose() * WB;
            Eigen::VectorXd rhs = -(WB.transpose() * f);
            x = N.ldlt().solve(rhs);
            Eigen::VectorXd res2 = f + B * x;
            Eigen::VectorXd r = (res2.head(G + 1).array().square() + res2.tail(G + 1).array().square()).sqrt();
            double mx = r.maxCoeff();
            if (mx < best) {
                best = mx;
                best_x = x;
            }
            ++res.iterations;
            // minimax lower bound from the weighted L2 value
            double lower = std::sqrt((w.array() * r.array().square()).sum());
            if (mx - lower < 1e-9 * mx) break;
            w = w.cwiseProduct(r);
            w /= w.sum();
        }
        for (int k = 1; k <= m; ++k) h[k] = best_x(k - 1);
    }
    // H(1) = 0 exactly: the top coefficient closes the sum in Real arithmetic
    std::vector<Cplx> c(d + 1);
    Real acc(0);
    for (int k = 0; k < d; ++k) {
        c[k] = Cplx(Real(h[k]));
        acc += Real(h[k]);
    }
    c[d] = Cplx(-acc);
    res.poly = CirclePolynomial(std::move(c));
    res.sup_norm = grid_sup(res.poly, grid);
    if (res.sup_norm > res.bound + 1e-6)
        throw ConvergenceError("halasz optimizer reached sup " + std::to_string(res.sup_norm) + " above " +
                               std::to_string(res.bound) + " at d = " + std::to_string(d));
    return res;
}

HalaszProduct halasz_product(const std::vector<double>& angles, int n, int grid)
{
    HalaszProduct out;
    const int k = static_cast<int>(angles.size());
    if (k == 0) {
        out.poly = CirclePolynomial({Cplx(Real(1))});
        out.sup_norm = 1;
        out.bound = 1;
        return out;
    }
    if (2 * k > n) throw PreconditionError("halasz product needs k <= n/2 (k = " + std::to_string(k) + ", n = " +
                                           std::to_string(n) + ")");
    out.d = n / k;
    HalaszResult H = halasz_polynomial(out.d, grid);
    CirclePolynomial P({Cplx(Real(1))});
    for (double a : angles) {
        // H(z conj(lambda)): coefficient h_m lambda^{-m}
        std::vector<Cplx> c(H.poly.coeffs().size());
        Real ang(a);
        for (int m = 0; m <= out.d; ++m) c[m] = H.poly.coeffs()[m] * unit(-Real(m) * ang);
        P = P * CirclePolynomial(std::move(c));
    }
    out.poly = P;
    out.sup_norm = grid_sup(P, grid);
    out.bound = std::exp(4.0 * k * k / n);
    for (double a : angles) out.max_abs_at_points = std::max(out.max_abs_at_points, to_double(abs(P.on_circle(Real(a)))));
    if (out.sup_norm > out.bound * (1 + 1e-6))
        throw ConvergenceError("halasz product sup " + std::to_string(out.sup_norm) + " exceeds exp(4k^2/n)");
    return out;
}

// ---------------------------------------------------------------- kernel

double ConcentratedKernel::value(double x) const
{
    double s = coeffs.empty() ? 0.0 : coeffs[0];
    for (std::size_t l = 1; l < coeffs.size(); ++l) s += 2 * coeffs[l] * std::cos(static_cast<double>(l) * x);
    return s;
}

namespace {

// |q| sampled at x_i = 2 pi i / G through one inverse FFT
std::vector<double> kernel_abs_samples(const ConcentratedKernel& q, int G)
{
    std::vector<cd> v(G, 0.0);
    v[0] = q.coeffs[0];
    for (std::size_t l = 1; l < q.coeffs.size(); ++l) {
        v[l] = q.coeffs[l];
        v[G - l] = q.coeffs[l];
    }
    fft(v, +1);
    std::vector<double> a(G);
    for (int i = 0; i < G; ++i) a[i] = std::fabs(v[i].real());
    return a;
}

// 2 * integral_{x0}^{pi} |q| by trapezoid on the samples; the first partial cell is interpolated
double kernel_tail(const std::vector<double>& a, double x0)
{
    const int G = static_cast<int>(a.size());
    const double h = kTwoPi / G;
    if (x0 >= kPi) return 0.0;
    int i0 = static_cast<int>(std::floor(x0 / h));
    double frac = x0 / h - i0;
    double f0 = a[i0] + frac * (a[i0 + 1] - a[i0]);
    double s = 0.5 * (f0 + a[i0 + 1]) * (1 - frac) * h;
    for (int i = i0 + 1; i < G / 2; ++i) s += 0.5 * (a[i] + a[i + 1]) * h;
    return 2 * s;
}

int pow2_at_least(int v)
{
    int g = 1;
    while (g < v) g <<= 1;
    return g;
}

}  // namespace

ConcentratedKernel concentrated_kernel(const KernelSpec& spec)
{
    if (spec.n < 4) throw PreconditionError("kernel degree bound n must be at least 4");
    if (!(spec.gamma > 0 && spec.gamma < 1)) throw PreconditionError("kernel gamma must lie in (0, 1)");
    ConcentratedKernel q;
    q.n = spec.n;
    q.gamma = spec.gamma;

    // ghat on xi = j h, h = 1/(n M): indicator of [-a, a] smoothed by box
    // averages of half-widths c j^{-1/gamma}; total support stays inside 0.98.
    const int M = 64;
    const double h = 1.0 / (static_cast<double>(spec.n) * M);
    const double a = 0.25;
    const double zeta = boost::math::zeta(1.0 / spec.gamma);
    const double c = (0.98 - a) / zeta;
    const int half = static_cast<int>(std::ceil(1.0 / h)) + 2;   // xi in [-1, 1]
    std::vector<double> g(2 * half + 1, 0.0);
    for (int i = -half; i <= half; ++i)
        if (std::fabs(i * h) <= a) g[i + half] = 1.0;
    std::vector<double> prefix(g.size() + 1);
    for (int j = 1;; ++j) {
        double wj = c * std::pow(static_cast<double>(j), -1.0 / spec.gamma);
        int r = static_cast<int>(std::floor(wj / h));
        if (r < 1) break;
        prefix[0] = 0;
        for (std::size_t i = 0; i < g.size(); ++i) prefix[i + 1] = prefix[i] + g[i];
        std::vector<double> next(g.size(), 0.0);
        for (int i = 0; i < static_cast<int>(g.size()); ++i) {
            int lo = std::max(0, i - r), hi = std::min(static_cast<int>(g.size()) - 1, i + r);
            next[i] = (prefix[hi + 1] - prefix[lo]) / (2 * r + 1);
        }
        g = std::move(next);
        q.mollifier_depth = j;
    }
    const double g0 = g[half];
    q.coeffs.resize(spec.n);
    for (int l = 0; l < spec.n; ++l) q.coeffs[l] = g[half + l * M] / g0;
    q.coeffs[0] = 1.0;

    // L1 norm and tails on the verification grid
    const int G = pow2_at_least(std::max(spec.grid, 64 * spec.n));
    const std::vector<double> absq = kernel_abs_samples(q, G);
    q.l1_norm = std::accumulate(absq.begin(), absq.end(), 0.0) * kTwoPi / G;

    const int smax = spec.n / 2;
    q.tails.assign(smax + 1, 0.0);
    for (int t = 0; t <= smax; ++t) q.tails[t] = kernel_tail(absq, static_cast<double>(t) / spec.n);
    auto shape = [&](double sv) { return std::pow(sv, 1 - spec.gamma) * std::exp(-std::pow(sv, spec.gamma)); };
    q.fit_window = std::min(8, smax);
    for (int t = 1; t <= q.fit_window; ++t) q.tail_constant = std::max(q.tail_constant, q.tails[t] / shape(t));
    // tails below double resolution of the quadrature cannot be resolved
    const double floor = 1e-12 * q.l1_norm;
    for (int t = 1; t <= smax; ++t) {
        if (q.tails[t] > q.tail_constant * shape(t) * (1 + 1e-9) + floor)
            throw ConvergenceError("kernel tail fit violated at s = " + std::to_string(t) + ": tail " +
                                   std::to_string(q.tails[t]) + " vs " + std::to_string(q.tail_constant * shape(t)));
    }
    q.constant = std::max(q.l1_norm, q.tail_constant);
    return q;
}

// ---------------------------------------------------------------- outer function

OuterFunctionResult outer_function(const ArcSet& E, double eps, int grid)
{
    if (E.empty()) throw PreconditionError("outer function needs a nonempty arc set");
    if (!(eps >= 0)) throw PreconditionError("epsilon must be nonnegative");
    if (grid < 64 || (grid & (grid - 1)) != 0) throw PreconditionError("grid must be a power of two >= 64");
    OuterFunctionResult out;
    out.eps = eps;
    out.grid = grid;
    out.expanded = E.expanded(eps);
    if (out.expanded.is_full_circle() || out.expanded.normalized_measure() >= 1)
        throw PreconditionError("m(E + eps) must be below 1");

    const double cell = kTwoPi / grid;
    // cosine taper of a few cells outside E+eps keeps the conjugation accurate
    const int W = 16;
    out.taper_cells = W;
    std::vector<double> u(grid, 0.0);
    std::vector<int> per_arc(out.expanded.size(), 0);
    for (int i = 0; i < grid; ++i) {
        double t = i * cell;
        double best = HUGE_VAL;
        int last_gain = 0;
        for (std::size_t a = 0; a < out.expanded.size(); ++a) {
            double dd = circ_dist_to_arc(t, out.expanded.arcs()[a]);
            if (dd == 0.0) ++per_arc[a];
            best = std::min(best, dd);
        }
        double cells = best / cell;
        u[i] = best == 0.0 ? 1.0 : (cells < W ? 0.5 * (1 + std::cos(kPi * cells / W)) : 0.0);
    }
    for (std::size_t a = 0; a < per_arc.size(); ++a)
        if (per_arc[a] < 16)
            throw PreconditionError("grid too coarse: arc " + std::to_string(a) + " of E+eps gets " +
                                    std::to_string(per_arc[a]) + " samples (need 16)");
    double m = std::accumulate(u.begin(), u.end(), 0.0) / grid;
    if (m >= 1) throw PreconditionError("tapered E + eps covers the circle");
    out.m_expanded = m;

    // log|F| = -u/m; analytic completion V = v + i conj(v) via one-sided spectrum
    std::vector<cd> V(grid);
    for (int i = 0; i < grid; ++i) V[i] = u[i] / m;
    fft(V, -1);
    for (auto& x : V) x /= static_cast<double>(grid);
    for (int l = 1; l < grid / 2; ++l) V[l] *= 2.0;
    for (int l = grid / 2 + 1; l < grid; ++l) V[l] = 0.0;
    fft(V, +1);
    out.samples.resize(grid);
    for (int i = 0; i < grid; ++i) out.samples[i] = std::exp(-V[i]);

    std::vector<cd> Fh = out.samples;
    fft(Fh, -1);
    out.coeffs.resize(grid / 2);
    for (int l = 0; l < grid / 2; ++l) out.coeffs[l] = Fh[l] / static_cast<double>(grid);
    out.f0 = out.coeffs[0];

    for (int i = 0; i < grid; ++i) {
        double a = std::abs(out.samples[i]);
        out.sup_abs = std::max(out.sup_abs, a);
        if (u[i] == 1.0) out.sup_on_expanded = std::max(out.sup_on_expanded, a);
    }
    return out;
}

// ---------------------------------------------------------------- Denisov

DenisovResult denisov_polynomial(const ArcSet& E, double eps, int n, double gamma, int grid)
{
    if (!(eps * n >= 1)) throw PreconditionError("denisov construction needs eps * n >= 1");
    if (E.empty()) throw PreconditionError("denisov construction needs a nonempty arc set");
    DenisovResult r;
    r.n = n;
    r.k = static_cast<int>(E.size());
    r.eps = eps;
    r.gamma = gamma;

    OuterFunctionResult F = outer_function(E, eps, grid);
    ConcentratedKernel q = concentrated_kernel({n, gamma, grid});
    if (n > grid / 2) throw PreconditionError("grid too small for degree n");

    std::vector<cd> ph(n);
    for (int l = 0; l < n; ++l) ph[l] = F.coeffs[l] * q.coeffs[l];
    r.poly = CirclePolynomial::from_double(ph);
    r.p0 = ph[0];
    for (int l = n - 1; l >= 0; --l)
        if (ph[l] != 0.0) {
            r.highest_degree = l;
            break;
        }

    std::vector<cd> vals(grid, 0.0);
    for (int l = 0; l < n; ++l) vals[l] = ph[l];
    fft(vals, +1);
    for (const auto& v : vals) r.sup_circle = std::max(r.sup_circle, std::abs(v));

    for (const auto& arc : E.arcs()) {
        const int S = 64;
        for (int i = 0; i <= S; ++i) r.sup_on_E = std::max(r.sup_on_E, r.poly.abs_on_circle(arc.start + arc.length * i / S));
    }
    for (int i = 0; i < grid; ++i)
        if (E.contains(kTwoPi * i / grid)) r.sup_on_E = std::max(r.sup_on_E, std::abs(vals[i]));

    r.kernel_l1 = q.l1_norm / kTwoPi;
    r.kernel_constant = q.constant;
    const double tail = kernel_tail(kernel_abs_samples(q, pow2_at_least(std::max(grid, 64 * n))), eps);
    r.bound_direct = F.sup_abs * tail / kTwoPi + F.sup_on_expanded * q.l1_norm / kTwoPi;

    // C(gamma) absorbs s^{1-gamma} exp(-s^gamma / 2) over s >= 1
    double peak = 0;
    for (int i = 0; i <= 100000; ++i) {
        double s = 1.0 + i * 0.01;
        peak = std::max(peak, std::pow(s, 1 - gamma) * std::exp(-0.5 * std::pow(s, gamma)));
    }
    r.two_exp_constant = std::max(q.tail_constant * peak, q.l1_norm) / kTwoPi;
    r.bound_two_exp = r.two_exp_constant * (std::exp(-0.5 * std::pow(eps * n, gamma)) + std::exp(-0.5 / (eps * r.k)));
    return r;
}

// ---------------------------------------------------------------- vanishing powers

CirclePolynomial vanishing_power_polynomial(const std::vector<Real>& centers, const std::vector<int>& multiplicities,
                                            int degree_budget)
{
    if (centers.size() != multiplicities.size()) throw PreconditionError("centers and multiplicities differ in length");
    std::vector<Real> roots;
    for (std::size_t l = 0; l < centers.size(); ++l) {
        if (multiplicities[l] < 0) throw PreconditionError("negative multiplicity");
        for (int j = 0; j <= multiplicities[l]; ++j) roots.push_back(centers[l]);
    }
    if (degree_budget >= 0 && static_cast<int>(roots.size()) > degree_budget)
        throw PreconditionError("vanishing-power degree " + std::to_string(roots.size()) + " exceeds budget " +
                                std::to_string(degree_budget));
    return CirclePolynomial::from_unit_roots(roots);
}

double vanishing_power_arc_excess(const std::vector<Real>& centers, const std::vector<int>& multiplicities,
                                  const std::vector<double>& lengths, int samples_per_arc)
{
    int deg = 0;
    for (int m : multiplicities) deg += m + 1;
    double worst = -HUGE_VAL;
    for (std::size_t l = 0; l < centers.size(); ++l) {
        std::vector<double> rel(centers.size());
        for (std::size_t j = 0; j < centers.size(); ++j) rel[j] = to_double(centers[l] - centers[j]);
        double logbound = deg * std::log(2.0) + (multiplicities[l] + 1) * std::log(lengths[l]);
        for (int i = 0; i <= samples_per_arc; ++i) {
            double o = lengths[l] * (static_cast<double>(i) / samples_per_arc - 0.5);
            if (o == 0.0) continue;
            double lp = 0;
            for (std::size_t j = 0; j < centers.size(); ++j) {
                double dj = j == l ? o : rel[j] + o;
                lp += (multiplicities[j] + 1) * std::log(std::fabs(2 * std::sin(dj / 2)));
            }
            worst = std::max(worst, lp - logbound);
        }
    }
    return worst;
}

// ---------------------------------------------------------------- small off an arc

SmallOffArcResult small_off_arc_monic(int n, const Arc& J, int grid)
{
    if (n < 1) throw PreconditionError("degree must be at least 1");
    if (!(J.length > 0 && J.length < kPi)) throw PreconditionError("arc length must lie in (0, pi)");
    SmallOffArcResult r;
    const double cap = std::cos(J.length / 4);
    r.capacity = cap;
    // zeros spread over T \ J by the half-angle map of the Chebyshev nodes
    Real phi = J.center();
    Real c = boost::multiprecision::cos(Real(J.length) / 4);
    std::vector<Real> roots;
    for (int k = 1; k <= n; ++k) {
        Real x = c * boost::multiprecision::cos(real_pi() * Real(2 * k - 1) / Real(2 * n));
        roots.push_back(phi + 2 * boost::multiprecision::acos(x));
    }
    r.poly = CirclePolynomial::from_unit_roots(roots);
    r.bound_off = 2 * std::pow(cap, n);
    r.capacity_floor = std::pow(cap, n);
    r.literal_target = 2 * std::pow(std::cos(J.length / 2), n);
    const double ph = to_double(phi);
    for (int i = 0; i < grid; ++i) {
        double t = kTwoPi * i / grid;
        double v = r.poly.abs_on_circle(t);
        if (std::fabs(angle_diff(t, ph)) <= J.length / 2) r.sup_on = std::max(r.sup_on, v);
        else r.sup_off = std::max(r.sup_off, v);
    }
    r.sup_on = std::max(r.sup_on, r.poly.abs_on_circle(ph));
    r.growth_constant = std::log(r.sup_on) / (n * J.length / kTwoPi);
    if (r.sup_off > r.bound_off * (1 + 1e-6))
        throw ConvergenceError("off-arc sup " + std::to_string(r.sup_off) + " above 2 cap^n = " +
                               std::to_string(r.bound_off));
    return r;
}

// ---------------------------------------------------------------- sublevel sets

SublevelResult sublevel_arcs(const CirclePolynomial& p, const Real& tau)
{
    if (!(tau > 0)) throw PreconditionError("sublevel threshold must be positive");
    const int d = p.degree();
    const auto& a = p.coeffs();
    const Real tau2 = tau * tau;
    SublevelResult out;
    // f(theta) = |P|^2 - tau^2 evaluated in Real
    auto f = [&](const Real& t) { return norm(p.on_circle(t)) - tau2; };

    if (d == 0) {
        if (f(Real(0)) <= 0) out.full_circle = true;
        else out.empty = true;
        if (out.full_circle) out.arcs = ArcSet::full_circle();
        return out;
    }
    // S(z) = z^d P(z) conj(P)(1/z) - tau^2 z^d, coefficients s_0..s_{2d}
    std::vector<Cplx> s(2 * d + 1, Cplx(Real(0)));
    for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= d; ++k) s[j - k + d] += a[j] * conj(a[k]);
    s[d] -= Cplx(tau2);

    std::vector<Cplx> roots = polynomial_roots(s);
    const int bits = current_precision_bits();
    const Real tol = boost::multiprecision::ldexp(Real(1), -bits / 3);
    std::vector<Real> ang;
    const Real tp = two_pi();
    for (const auto& z : roots) {
        if (boost::multiprecision::abs(abs(z) - 1) > tol) continue;
        Real t = boost::multiprecision::atan2(z.im, z.re);
        if (t < 0) t += tp;
        ang.push_back(t);
    }
    std::sort(ang.begin(), ang.end());
    std::vector<Real> uniq;
    for (const auto& t : ang)
        if (uniq.empty() || t - uniq.back() > tol) uniq.push_back(t);
    if (uniq.size() > 1 && uniq.front() + tp - uniq.back() <= tol) uniq.pop_back();
    out.crossings = uniq;

    if (uniq.empty()) {
        if (f(Real(0)) <= 0) {
            out.full_circle = true;
            out.arcs = ArcSet::full_circle();
        } else {
            out.empty = true;
        }
        return out;
    }
    const std::size_t m = uniq.size();
    std::vector<bool> inside(m);
    for (std::size_t i = 0; i < m; ++i) {
        Real lo = uniq[i], hi = i + 1 < m ? uniq[i + 1] : uniq[0] + tp;
        inside[i] = f((lo + hi) / 2) <= 0;
    }
    if (std::all_of(inside.begin(), inside.end(), [](bool b) { return b; })) {
        out.full_circle = true;
        out.arcs = ArcSet::full_circle();
        return out;
    }
    // start the sweep right after an outside interval
    std::size_t first = 0;
    while (inside[first]) ++first;
    std::vector<Arc> arcs;
    for (std::size_t step = 1; step <= m; ++step) {
        std::size_t i = (first + step) % m;
        if (!inside[i]) continue;
        // extend across consecutive inside intervals
        std::size_t j = i;
        std::size_t count = 0;
        while (inside[j] && count < m) {
            j = (j + 1) % m;
            ++count;
        }
        Real lo = uniq[i], hi = uniq[j];
        if (hi <= lo) hi += tp;
        Arc arc{to_double(lo), to_double(hi - lo)};
        arc.start_lo = to_double(lo - Real(arc.start));
        arcs.push_back(arc);
        step += count - 1;
    }
    if (arcs.empty()) {
        out.empty = true;
        return out;
    }
    out.arcs = ArcSet(arcs);
    return out;
}

CartanCheck cartan_cover_check(const CirclePolynomial& p, double eps)
{
    if (!(eps > 0)) throw PreconditionError("cartan radius must be positive");
    if (!p.monic()) throw PreconditionError("cartan check needs a monic polynomial");
    CartanCheck c;
    c.bound = 2 * std::exp(1.0) * eps;
    Real tau = boost::multiprecision::pow(Real(eps), p.degree());
    SublevelResult s = sublevel_arcs(p, tau);
    c.cover = s.arcs;
    for (const auto& a : s.arcs.arcs()) c.radii_sum += a.length / 2;
    c.pass = c.radii_sum <= c.bound;
    return c;
}

}  // namespace szego
