#pragma once

#include "szego/numeric.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace szego {

// Position on the circle as a fraction of a full turn.  Exact when den > 0.
struct Angle {
    std::int64_t num = 0;
    std::int64_t den = 0;
    double turns = 0.0;

    static Angle rational(std::int64_t num, std::int64_t den);
    static Angle from_turns(double t);      // dyadic doubles become exact rationals
    static Angle from_radians(double r);

    bool exact() const { return den > 0; }
    Real radians() const;                    // in [0, 2pi), current precision
    double radians_double() const;
    Cplx power(std::int64_t m) const;        // exp(i m theta)
};

// Closed arc {start + t : 0 <= t <= length}, radians.
struct Arc {
    double start = 0.0;
    double length = 0.0;
    double start_lo = 0.0;   // low word of the start angle, for arcs far below double resolution

    Real start_real() const { return Real(start) + Real(start_lo); }
    Real center() const { return start_real() + Real(length) / 2; }
    double end() const { return start + length; }
};

Arc make_arc(double start, double length);   // validates and wraps start into [0, 2pi)

// Pairwise disjoint arcs, sorted by start.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(std::vector<Arc> arcs);  // merges overlaps

    static ArcSet full_circle();

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }
    bool empty() const { return arcs_.empty(); }
    bool is_full_circle() const;

    double total_length() const;
    Real total_length_real() const;
    double normalized_measure() const;       // length / 2pi
    ArcSet expanded(double eps) const;

    bool contains(double theta) const;
    bool contains(const Real& theta) const;
    // Sum over arcs of 1 / log(1/length).
    double harmonic_sum() const;

private:
    std::vector<Arc> arcs_;
};

// Signed arc-length of the shortest rotation taking b to a, in (-pi, pi].
double angle_diff(double a, double b);

struct Atom {
    Angle angle;
    double mass = 0.0;
};

struct AtomicComponent {
    std::vector<Atom> atoms;
};

struct ConstantDensity {
    double value = 0.0;
};

// exp(a + b t) with t the offset from the arc start
struct ExpLinearDensity {
    double a = 0.0;
    double b = 0.0;
};

// base + amplitude cos(frequency theta)
struct CosineDensity {
    double base = 1.0;
    double amplitude = 0.0;
    std::int64_t frequency = 1;
};

// offset + coeff exp(scale / |theta - center|), circular distance
struct ReciprocalExpDensity {
    double offset = 0.0;
    double coeff = 1.0;
    double scale = -1.0;
    double center = 0.0;
};

using DensityFamily = std::variant<ConstantDensity, ExpLinearDensity, CosineDensity, ReciprocalExpDensity>;

// Density with respect to normalized arc length dtheta / 2pi.
struct DensityPiece {
    Arc arc;
    DensityFamily family;
};

struct DensityComponent {
    std::vector<DensityPiece> pieces;
};

// prod_j (1 + alpha_j cos(ell_j theta)) dtheta / 2pi
struct RieszProductComponent {
    std::vector<double> alphas;
    std::vector<std::int64_t> ells;
};

using Component = std::variant<AtomicComponent, DensityComponent, RieszProductComponent>;

struct WeightedComponent {
    Real weight{1};
    Component component;
};

struct Measure {
    std::vector<WeightedComponent> components;

    Measure& add(Component c, Real weight = Real(1));
    bool purely_atomic() const;
    Real total_mass() const;
    std::vector<Atom> all_atoms() const;     // weights folded into masses
};

double density_value(const DensityFamily& f, const Arc& arc, double theta);

enum class MomentConvention { NegativeExponent };

// c_m = integral of exp(-i m theta) d rho, m = 0..order
struct MomentSequence {
    std::vector<Cplx> values;
    MomentConvention convention = MomentConvention::NegativeExponent;
    int precision_bits = 256;

    int order() const { return static_cast<int>(values.size()) - 1; }
    Cplx at(std::int64_t m) const;           // negative m by conjugation
};

// Moments at the current working precision.  tol bounds the absolute error
// of moments of pieces that need quadrature.
MomentSequence moments(const Measure& rho, int order, double tol = 1e-13);
MomentSequence moments(const Measure& rho, int order, const PrecisionContext& ctx, double tol = 1e-13);

std::vector<Cplx> atomic_moments(const AtomicComponent& a, int order);
std::vector<Cplx> density_moments(const DensityComponent& d, int order, double tol);

// Greedy signed representation m = sum eps_j ell_j, eps_j in {-1,0,1}.
std::optional<std::vector<int>> greedy_signed_representation(std::int64_t m, const std::vector<std::int64_t>& ells);
void check_lacunary(const std::vector<std::int64_t>& ells);
std::vector<Cplx> riesz_moments(const RieszProductComponent& r, int order);

// Largest k' dividing k with c_m = 0 for all 0 < m <= order not divisible by k'
// (within tol * c_0).  Returns 1 when nothing beyond the trivial invariance holds.
int invariance_order(const MomentSequence& c, int k, double tol);

// rho(T \ arcs) at the current precision.
Real mass_outside(const Measure& rho, const ArcSet& arcs, double tol = 1e-13);

// Measure files: JSON with a "components" array, angles in turns.
Measure parse_measure_json(const std::string& text);
Measure load_measure_file(const std::string& path);
std::string measure_to_json(const Measure& rho);

}  // namespace szego
