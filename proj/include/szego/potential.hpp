#pragma once

#include "szego/polynomials.hpp"

#include <optional>
#include <string>
#include <vector>

namespace szego {

enum class EquilibriumMethod { energy, parametric };

struct EquilibriumOptions {
    int nodes = 48;              // Chebyshev nodes per arc to start with
    int max_nodes = 768;
    double flatness_tol = 1e-9;  // relative to max(1, |log cap|)
};

// Equilibrium measure of a finite union of arcs.  On arc a the density is
// stored through theta = center_a + h_a cos(psi), g(psi) = phi(theta) h_a sin(psi),
// which is smooth in psi even though phi blows up at the arc ends.
struct EquilibriumResult {
    ArcSet arcs;
    EquilibriumMethod method = EquilibriumMethod::energy;
    double normalization = 1;
    bool full_circle = false;
    int nodes = 0;
    std::vector<Real> centers;                  // arc centers
    std::vector<double> half;                   // half lengths
    std::vector<std::vector<double>> center_diff;      // wrap(center_a - center_b)
    std::vector<std::vector<double>> center_gap_diff;  // wrap(center_a - gap_center_j)
    std::vector<std::vector<double>> g;         // unit-mass g at psi_j = (j + 1/2) pi / nodes
    std::vector<std::vector<double>> gcoef;     // cosine coefficients of g
    std::vector<Real> betas;                    // parametric method: one point per gap
    std::vector<double> beta_offsets;           // beta_j - gap_center_j
    double log_capacity = 0;
    double capacity = 1;
    double energy = 0;                          // -log cap (unit mass)
    double flatness = 0;                        // max |U - log cap| on check points, unit mass
    double min_density = 0;                     // min of g over nodes
    double off_set_min_excess = 0;              // min (U - log cap) over gap probes, unit mass

    // U^nu(e^{i theta}) = integral log|e^{i theta} - e^{it}| d nu, scaled by the normalization
    double potential(const Real& theta) const;
    // same at theta = centers[a] + y
    double potential_at(int a, double y) const;
    // phi(theta) at theta = centers[a] + y, |y| <= half[a]; scaled by the normalization
    double density_at(int a, double y) const;
    // same with the distances to the arc ends supplied (accurate near the ends)
    double density_at(int a, double y, double dl, double dr) const;
    // nu of [center - half, center + y] on arc a, scaled
    double cumulative_at(int a, double y) const;
};

EquilibriumResult equilibrium_measure(const ArcSet& E, double normalization = 1,
                                      EquilibriumMethod method = EquilibriumMethod::energy,
                                      const EquilibriumOptions& opt = {});

struct CapacityComparison {
    double energy = 0;
    double parametric = 0;
    double rel_diff = 0;
};

// Both methods; throws ConvergenceError carrying both values beyond `tol`.
CapacityComparison compare_capacity(const ArcSet& E, double tol = 1e-3);
double capacity(const ArcSet& E);
double log_capacity(const ArcSet& E);

// Closed-form d/dtheta log phi for the parametric density.
double log_density_derivative(const EquilibriumResult& eq, int a, double y);

struct DiscretizationPiece {
    int arc = 0;
    double lo = 0, hi = 0;        // offsets from the arc center
    double mass = 0;              // nu(Delta_j) at normalization n
    bool increasing = false;
};

struct DiscretizationResult {
    CirclePolynomial poly;
    int n = 0;
    int N = 0;                    // number of pieces
    int N_bound = 0;              // 14 n, or 13 n + 14 for n < 14
    int degree_bound = 0;         // 2 N_bound
    bool enlarged_constants = false;
    int critical_points = 0;
    std::vector<DiscretizationPiece> pieces;
    std::vector<Real> roots;      // gamma_j, gamma'_j
    double log_capacity = 0;
    // grid check of log|P| <= U^nu + (3 log 2) N on E
    int grid_points = 0;
    double max_excess = 0;        // max of log|P| - U^nu - 3 N log 2; <= 0 passes
    double max_log_abs_on_E = 0;
    double envelope_log_bound = 0;   // n log cap + 3 N log 2
    bool bound_ok = false;
    // inner inequality probes
    int probes = 0;
    double eq3_worst_margin = 0;  // min over probes of RHS - LHS
    bool eq3_ok = false;
};

DiscretizationResult discretization_polynomial(const ArcSet& E, int n, int probes_per_piece = 32,
                                               int grid_per_piece = 64);

}  // namespace szego
