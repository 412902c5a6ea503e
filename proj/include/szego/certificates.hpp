#pragma once

#include "szego/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace szego {

// One inequality lhs <= rhs.  Tiny quantities are kept in Real so that
// e^{-Omega} with Omega in the hundreds stays representable.
struct Inequality {
    std::string name;
    Real lhs;
    Real rhs;
    bool pass = false;
};

Inequality make_inequality(std::string name, const Real& lhs, const Real& rhs);

struct Quantity {
    std::string name;
    Real value;
};

struct Certificate {
    std::string kind;             // metric_A, metric_B, capacity_A, capacity_B
    int n = 0;
    Real omega;
    std::vector<Inequality> hypotheses;
    std::vector<Inequality> checks;
    std::vector<Quantity> measured;
    std::vector<std::string> notes;
    std::optional<ArcSet> arcs;   // arcs produced or used
    int degree = 0;               // degree of the certifying polynomial, when there is one

    bool hypotheses_hold() const;
    bool checks_pass() const;     // all checks, hypotheses aside
    bool ok() const { return hypotheses_hold() && checks_pass(); }
    const Inequality* check(const std::string& name) const;
    const Real* value(const std::string& name) const;
};

// JSON with every real as a decimal string at the working precision.
std::string certificate_to_json(const Certificate& c);

// Sublevel arcs {|Q| <= e^{-Omega/2}} of the extremal polynomial, with the
// harmonic-sum and residual checks.  Hypotheses: n >= 3, Omega >= 16 n log n,
// e_n <= e^{-Omega}.  Unmet hypotheses are reported and nothing is built.
Certificate certify_metric_A(const Measure& rho, int n, const Real& omega, const PrecisionContext& ctx = {});

// prod (z - z_l)^{m_l + 1}, m_l = floor(Omega / log(1/|I_l|)).  Reports
// integral |P|^2 d rho as an upper bound for e_n^2 and checks it against 4 e^{-Omega}.
Certificate certify_metric_B(const ArcSet& arcs, const Measure& rho, int n, const Real& omega,
                             const PrecisionContext& ctx = {});

enum class CapacityDirection { A, B };

struct CapacityConstants {
    int C = 28;
    int C1 = 80;
    bool enlarged = false;
};

// C = 28, C1 = 80 for n >= 14; larger values from the piece count otherwise
CapacityConstants capacity_constants(int n);

// A: sublevel arcs of the extremal polynomial, checked for capacity and residual.
// B: the discretization polynomial for `arcs`, with
//    e_{Cn}^2 <= max_E |P|^2 + max_T |P|^2 rho(T \ E) checked against e^{-Omega/2}.
Certificate certify_capacity(const Measure& rho, int n, const Real& omega, CapacityDirection dir,
                             const std::optional<ArcSet>& arcs = std::nullopt, const PrecisionContext& ctx = {});

}  // namespace szego
