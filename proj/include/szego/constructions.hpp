#pragma once

#include "szego/szego_solver.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace szego {

// Positive weights a_1, a_2, ... summing to 1, with tails s_k = sum_{j>k} a_j.
class TailSequence {
public:
    TailSequence() = default;
    // normalizes; rejects empty input and nonpositive entries
    static TailSequence normalized(std::vector<double> weights);
    // a_j proportional to ratio^j, j = 1..count
    static TailSequence geometric(double ratio, int count);

    int size() const { return static_cast<int>(a_.size()); }
    double a(int j) const { return j >= 1 && j <= size() ? a_[j - 1] : 0.0; }   // 1-based
    double tail(int k) const;                                                 // s_k, k >= 0
    const std::vector<double>& values() const { return a_; }
    bool monotone() const;

private:
    std::vector<double> a_;
    std::vector<double> tails_;   // tails_[k] = s_k, k = 0..size
};

// sum_{k=1..K} a_k rho_k, rho_k = 2^{-k} sum of deltas over Lambda_{2^{k+1}} \ Lambda_{2^k}.
// One atomic component per level, carrying the weight a_k exactly.
Measure dyadic_root_measure(const TailSequence& a, int K);

struct MonotoneTailMeasure {
    Measure rho;
    int n = 0;
    Real lower_bound;             // (n + 1) sum_{j>=1} a_{j(n+1)}
    Real min_mass;
};

// masses sum_{j>=0} a_{k + j(n+1)} at exp(2 pi i k / (n+1)), k = 1..n+1
MonotoneTailMeasure monotone_tail_measure(const TailSequence& a, int n);

enum class HFamily { zero, reciprocal };   // H = 0 or H(theta) = 1/|theta| on (-pi, pi]

struct AntiNevaiSpec {
    HFamily h = HFamily::reciprocal;
    // a_k proportional to max(eps(2^k), 2^{-k}) unless `a` is given
    std::function<double(double)> epsilon = [](double n) { return 1 / std::sqrt(n); };
    std::optional<TailSequence> a;
    std::optional<std::vector<double>> eta;   // overrides the default eta rule
    std::vector<double> powers{1, 2, 4};
    int extension = 64;           // levels past K used to witness summability of the infinite sums
};

struct SpreadPiece {
    double lo = 0, hi = 0;        // radians in [0, 2pi)
    double value = 0;             // sum of a_k / (2^k eta_k) over levels covering the piece
    int levels = 0;               // how many levels cover it
};

// w = max(1, w0 e^{-H_-}), w0 = 1 + e^{H_+} 1_E sum_k a_k / (2^k eta_k) 1_{E_k}
struct AntiNevaiWeight {
    HFamily h = HFamily::reciprocal;
    std::vector<SpreadPiece> pieces;   // sorted, disjoint

    double spread(double theta) const;
    double operator()(double theta) const;
};

struct IntegrabilityCheck {
    double p = 0;
    double h_integral = 0;        // integral over E of H_+^p dm
    double h_bound = 0;           // sum_k A_k^p 2^k eta_k over the materialized levels
    double log_integral = 0;      // integral over E of log_+^p(sum a_k / (2^k eta_k) 1_{E_k}) dm
    double log_bound = 0;         // sum_r 2^r eta_r log^p(1 / eta_r)
    double h_series = 0;          // the two series summed over the extended range
    double log_series = 0;
    int witness_from = 0;         // terms are <= 2^{-k} from this level on
    bool pass = false;
};

struct LevelBound {
    int n = 0;                    // degree is 2^n
    Real e_sq;                    // e_{2^n}(w mu)^2
    Real tail;                    // sum_{k >= n+1} a_k
    bool pass = false;
};

struct RatioRow {
    int degree = 0;
    Real e_w_mu;
    Real e_mu;
    Real ratio;
    double epsilon = 0;           // eps at this degree, for the anti-Nevai pair
};

struct AntiNevaiPair {
    int K = 0;
    Measure mu0;                  // e^{-H_+} m
    Measure w_mu;                 // mu0 + sum a_k rho~_k
    AntiNevaiWeight w;
    std::vector<double> A, eta, a;
    bool eta_decreasing = false;
    bool disjoint_within_levels = false;
    bool disjoint_across_levels = false;
    bool invariance_ok = false;   // rho~_k is 2^{-k}-invariant by its moments
    bool weight_at_least_one = false;
    std::vector<IntegrabilityCheck> integrability;
    std::vector<LevelBound> chain;
    std::vector<RatioRow> ratios;

    bool ok() const;
};

AntiNevaiPair anti_nevai_pair(const AntiNevaiSpec& spec, int K, const PrecisionContext& ctx = {});

struct ProNSpec {
    std::vector<std::int64_t> N;  // levels k = 2, 3, ...
    std::vector<double> alpha;    // in turns, beta < alpha < 1/2
    std::vector<double> beta;

    // N_{k+1} = 4 N_k from N_2 = 4; alpha_k = 0.4 * 4^{-(k-2)}, beta_k = alpha_k e^{-4}
    static ProNSpec scaled(int levels = 3);
    // N_k = 2^{4^k}; only k = 2 fits, anything past it is rejected
    static std::vector<std::int64_t> literal_schedule(int last_level);
};

struct ProNPair {
    int K = 0;
    ProNSpec spec;
    Measure mu;
    Measure w_mu;
    double mu_max = 0;            // sup mu'
    double mu_min_positive = 0;
    double zero_set_measure = 0;  // m{mu' = 0} left by the truncation
    double w_max = 0;
    double w_min = 0;
    double log_integral_closed = 0;       // sum alpha_k log(alpha_k / beta_k)
    double log_integral_quadrature = 0;   // piecewise integral of log(1/w) evaluated pointwise
    struct InvarianceBound {
        int level = 0;
        std::int64_t N = 0;
        Real alpha_sq;
        Real min_e_sq;            // min over s < N_k of e_s(mu)^2
        bool pass = false;
    };
    std::vector<InvarianceBound> invariance;
    std::vector<RatioRow> ratios;

    bool ok() const;
};

ProNPair pron_pair(const ProNSpec& spec, int K, const PrecisionContext& ctx = {});

// alpha_j ~ scale * j^{-decay} past the stored factors
struct RieszTail {
    double scale = 1;
    double decay = 0;
};

struct RieszMeasure {
    Measure rho;
    RieszProductComponent product;   // factors j = 0..n
    std::int64_t N = 0;              // sum of ells
    bool singular = false;           // sum alpha_j^2 = infinity under the tail description
};

RieszMeasure riesz_measure(const std::vector<double>& alphas, const std::vector<std::int64_t>& ells, int n,
                           const RieszTail& tail = {});

struct RieszCheck {
    std::int64_t N = 0;
    Real e_sq;                    // e_N^2
    Real lower;                   // prod (1 + sqrt(1 - alpha^2)) / 2
    Real upper;                   // prod (1 - alpha^2 / 4)
    Real test_l2;                 // integral |prod (z^l - alpha/2)|^2 d rho from moments
    double log_integral_closed = 0;
    double log_integral_quadrature = 0;
    bool quadrature_used = false; // false when some |alpha_j| = 1
    int quadrature_points = 0;
    bool sandwich = false;
};

RieszCheck riesz_check(const RieszMeasure& r, const PrecisionContext& ctx = {});

// p arcs of length exp(-p (2 Omega / n + 1)) carrying 1 - e^{-Omega}, plus e^{-Omega} Lebesgue.
struct SuperexpInstance {
    Measure rho;
    ArcSet arcs;
    int n = 0;
    Real omega;
};

// Reals use the precision in force at the call.
SuperexpInstance superexp_arc_instance(int p, int n, const Real& omega);

// atoms with masses proportional to exp(-c j^2), j = 1..count, at golden-angle positions
Measure superexp_atomic_measure(int count, double c = 1.0);

}  // namespace szego
