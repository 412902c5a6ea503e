#pragma once

#include "szego/szego_solver.hpp"

#include <complex>
#include <vector>

namespace szego {

constexpr int kDefaultGrid = 1 << 14;

// Grid maximum of |P| over `points` equispaced samples of the circle.
double grid_sup(const CirclePolynomial& p, int points = kDefaultGrid);

// All complex roots (Aberth-Ehrlich at the working precision).
std::vector<Cplx> polynomial_roots(const std::vector<Cplx>& coeffs, int max_iter = 2000);

struct HalaszResult {
    int d = 0;
    CirclePolynomial poly;        // real coefficients, H(0) = 1, H(1) = 0
    double sup_norm = 0;          // on the verification grid
    double bound = 0;             // 1 + 2/d
    int iterations = 0;
};

HalaszResult halasz_polynomial(int d, int grid = kDefaultGrid);

struct HalaszProduct {
    CirclePolynomial poly;
    int d = 0;
    double sup_norm = 0;
    double bound = 0;             // exp(4 k^2 / n)
    double max_abs_at_points = 0;
};

// prod_j H_d(z conj(lambda_j)), lambda_j = exp(i angle_j), d = floor(n / k)
HalaszProduct halasz_product(const std::vector<double>& angles, int n, int grid = kDefaultGrid);

struct KernelSpec {
    int n = 0;
    double gamma = 0.5;
    int grid = kDefaultGrid;
};

// Even trigonometric polynomial q(x) = sum_{|l|<n} qhat(l) e^{ilx} with
// qhat(l) = ghat(l/n) for a bump ghat supported in (-1, 1), ghat(0) = 1.
struct ConcentratedKernel {
    int n = 0;
    double gamma = 0;
    std::vector<double> coeffs;   // qhat(l), l = 0..n-1
    double l1_norm = 0;           // integral over [-pi, pi] of |q(x)| dx
    std::vector<double> tails;    // tails[s] = integral over s/n <= |x| <= pi of |q|, s = 0..n/2
    double tail_constant = 0;     // fitted C in tails[s] <= C s^{1-gamma} exp(-s^gamma)
    int fit_window = 0;           // s = 1..fit_window fixes the constant
    double constant = 0;          // max(l1_norm, tail_constant)
    int mollifier_depth = 0;

    double value(double x) const;
};

ConcentratedKernel concentrated_kernel(const KernelSpec& spec);

struct OuterFunctionResult {
    ArcSet expanded;              // E_{+eps}
    double eps = 0;
    double m_expanded = 0;        // normalized measure of the (tapered) set
    int grid = 0;
    int taper_cells = 0;
    std::vector<std::complex<double>> samples;   // F on the grid
    std::vector<std::complex<double>> coeffs;    // Fhat(0..grid/2 - 1)
    std::complex<double> f0;
    double sup_abs = 0;
    double sup_on_expanded = 0;
};

OuterFunctionResult outer_function(const ArcSet& E, double eps, int grid = kDefaultGrid);

struct DenisovResult {
    CirclePolynomial poly;
    int n = 0;
    int k = 0;
    double eps = 0;
    double gamma = 0;
    std::complex<double> p0;
    double sup_circle = 0;
    double sup_on_E = 0;
    double kernel_l1 = 0;         // integral of |q| dm
    double kernel_constant = 0;
    // direct bound: sup|F| T(eps n) / 2pi + sup_{E+eps}|F| |q|_1 / 2pi
    double bound_direct = 0;
    // C(gamma) [exp(-(eps n)^gamma / 2) + exp(-1 / (2 eps k))]
    double bound_two_exp = 0;
    double two_exp_constant = 0;
    int highest_degree = 0;
};

DenisovResult denisov_polynomial(const ArcSet& E, double eps, int n, double gamma, int grid = kDefaultGrid);

// prod_l (z - exp(i c_l))^{m_l + 1}
CirclePolynomial vanishing_power_polynomial(const std::vector<Real>& centers, const std::vector<int>& multiplicities,
                                            int degree_budget = -1);

// Largest grid value of log|P| - log(2^deg |I_l|^{m_l+1}) over the arcs I_l
// of the given lengths centered at the centers.  Nonpositive means the bound holds.
double vanishing_power_arc_excess(const std::vector<Real>& centers, const std::vector<int>& multiplicities,
                                  const std::vector<double>& lengths, int samples_per_arc = 2048);

struct SmallOffArcResult {
    CirclePolynomial poly;
    double capacity = 0;          // cap(T \ J) = cos(|J| / 4)
    double sup_off = 0;
    double bound_off = 0;         // 2 cap^n
    double literal_target = 0;    // 2 cos^n(|J| / 2)
    double capacity_floor = 0;    // cap^n, no monic polynomial does better
    double sup_on = 0;
    double growth_constant = 0;   // log(sup_on) / (n m(J))
};

SmallOffArcResult small_off_arc_monic(int n, const Arc& J, int grid = kDefaultGrid);

struct SublevelResult {
    ArcSet arcs;
    bool full_circle = false;
    bool empty = false;
    std::vector<Real> crossings;  // unimodular roots of |P|^2 - tau^2, sorted angles
};

SublevelResult sublevel_arcs(const CirclePolynomial& p, const Real& tau);

struct CartanCheck {
    ArcSet cover;
    double radii_sum = 0;
    double bound = 0;             // 2 e eps
    bool pass = false;
};

CartanCheck cartan_cover_check(const CirclePolynomial& p, double eps);

}  // namespace szego
