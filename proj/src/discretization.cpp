#include "szego/potential.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

double chord(double x) { return std::fabs(2 * std::sin(x / 2)); }

// unit-mass nu of the part of arc a with psi' in [psi, pi], y = h cos psi
double cumulative_psi(const EquilibriumResult& eq, int a, double psi)
{
    const auto& c = eq.gcoef[a];
    double s = c[0] * (kPi - psi);
    for (std::size_t k = 1; k < c.size(); ++k) s -= c[k] * std::sin(k * psi) / static_cast<double>(k);
    return s;
}

// point in psi between lo and hi with cumulative_psi = target; cumulative decreases in psi.
// Returns the bracket end on the side of `from`, so the piece walked from there keeps its mass
// at or below the target.
double invert_cumulative(const EquilibriumResult& eq, int a, double target, double lo, double hi, double from)
{
    for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (cumulative_psi(eq, a, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return from >= hi ? hi : lo;
}

// zeros of d log phi / d theta on arc a, returned as psi values in decreasing order
std::vector<double> critical_psi(const EquilibriumResult& eq, int a)
{
    const int M = 4096;
    const double h = eq.half[a];
    auto f = [&](double psi) { return log_density_derivative(eq, a, h * std::cos(psi)); };
    std::vector<double> out;
    double prev_psi = kPi * (M - 1) / M, prev = f(prev_psi);
    for (int i = M - 2; i >= 1; --i) {
        double psi = kPi * i / M, v = f(psi);
        // y increases as psi decreases; the derivative runs from -inf to +inf
        if ((prev < 0) != (v < 0)) {
            double lo = psi, hi = prev_psi;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                if ((f(mid) < 0) == (prev < 0))
                    hi = mid;
                else
                    lo = mid;
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = v;
        prev_psi = psi;
    }
    return out;
}

// psi values this close give nearly the same offset y = h cos psi
bool a_hair(double h, double psi, double end) { return std::fabs(h * std::cos(psi) - h * std::cos(end)) <= 1e-12 * h; }

struct RootRef {
    int arc;
    double y;
};

double log_abs_P(const EquilibriumResult& eq, const std::vector<RootRef>& roots, int a, double y)
{
    double s = 0;
    for (const auto& r : roots) {
        double d = r.arc == a ? y - r.y : eq.center_diff[a][r.arc] + y - r.y;
        s += std::log(chord(d));
    }
    return s;
}

}  // namespace

DiscretizationResult discretization_polynomial(const ArcSet& E, int n, int probes_per_piece, int grid_per_piece)
{
    if (n < 1) throw PreconditionError("discretization needs n >= 1");
    if (E.empty() || E.is_full_circle()) throw PreconditionError("discretization needs a proper nonempty arc set");
    if (static_cast<int>(E.size()) > n)
        throw PreconditionError("discretization needs at most n arcs, got " + std::to_string(E.size()));
    DiscretizationResult R;
    R.n = n;
    R.enlarged_constants = n < 14;
    // at most 13n - 2 pieces before the length split, which adds at most 16
    R.N_bound = n >= 14 ? 14 * n : 13 * n + 14;
    R.degree_bound = 2 * R.N_bound;

    const auto eq = equilibrium_measure(E, n, EquilibriumMethod::parametric);
    R.log_capacity = eq.log_capacity;
    const int p = static_cast<int>(E.size());
    const double quarter = 0.25 * (1 - 1e-9);
    const double max_len = kPi / 8;

    for (int a = 0; a < p; ++a) {
        const double h = eq.half[a];
        auto crit = critical_psi(eq, a);
        R.critical_points += static_cast<int>(crit.size());
        std::vector<double> cuts{kPi};
        cuts.insert(cuts.end(), crit.begin(), crit.end());
        cuts.push_back(0.0);
        // pieces in psi, one monotone segment at a time
        std::vector<std::pair<double, double>> seg_pieces;   // (psi_left, psi_right)
        std::vector<bool> incr;
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            const double pl = cuts[s], pr = cuts[s + 1];
            // phi increases where the derivative is positive, just left of the segment's right end
            const double probe = pr + 0.5 * (pl - pr);
            const bool inc = log_density_derivative(eq, a, h * std::cos(probe)) > 0;
            // walk from the low-density end, so a mirror image of E gets the mirrored split
            const double start = inc ? pl : pr, stop = inc ? pr : pl;
            const double lo = std::min(pl, pr), hi = std::max(pl, pr);
            double cur = start;
            while (cur != stop) {
                const double here = cumulative_psi(eq, a, cur);
                const double rest = cumulative_psi(eq, a, stop);
                const double target = inc ? here + quarter / n : here - quarter / n;
                // a remainder within rounding of the target is absorbed by the 1e-9 slack
                const bool last = inc ? rest <= target + 1e-13 : rest >= target - 1e-13;
                const double blo = inc ? lo : cur, bhi = inc ? cur : hi;
                double next = last ? stop : invert_cumulative(eq, a, target, blo, bhi, cur);
                // a sliver left next to a segment end would give coincident roots: share the mass
                if (next != stop && a_hair(h, next, stop))
                    next = invert_cumulative(eq, a, 0.5 * (here + rest), blo, bhi, cur);
                if (!(inc ? next < cur : next > cur)) next = stop;
                seg_pieces.emplace_back(std::max(cur, next), std::min(cur, next));
                incr.push_back(inc);
                cur = next;
            }
        }
        for (std::size_t k = 0; k < seg_pieces.size(); ++k) {
            const auto [pl, pr] = seg_pieces[k];
            const double ylo = pl == kPi ? -h : h * std::cos(pl);
            const double yhi = pr == 0.0 ? h : h * std::cos(pr);
            const double len = yhi - ylo;
            const int parts = len >= max_len ? static_cast<int>(std::floor(len / max_len)) + 1 : 1;
            for (int q = 0; q < parts; ++q) {
                DiscretizationPiece P;
                P.arc = a;
                P.lo = q == 0 ? ylo : ylo + len * q / parts;
                P.hi = q + 1 == parts ? yhi : ylo + len * (q + 1) / parts;
                const double psl = q == 0 ? pl : std::acos(std::clamp(P.lo / h, -1.0, 1.0));
                const double psr = q + 1 == parts ? pr : std::acos(std::clamp(P.hi / h, -1.0, 1.0));
                P.mass = n * (cumulative_psi(eq, a, psr) - cumulative_psi(eq, a, psl));
                P.increasing = incr[k];
                R.pieces.push_back(P);
            }
        }
    }
    R.N = static_cast<int>(R.pieces.size());
    if (R.N > R.N_bound)
        throw ConvergenceError("discretization produced " + std::to_string(R.N) + " pieces, bound " +
                               std::to_string(R.N_bound));

    std::vector<RootRef> refs;
    for (const auto& P : R.pieces) {
        refs.push_back({P.arc, P.lo});
        refs.push_back({P.arc, P.hi});
        R.roots.push_back(eq.centers[P.arc] + Real(P.lo));
        R.roots.push_back(eq.centers[P.arc] + Real(P.hi));
    }
    R.poly = CirclePolynomial::from_unit_roots(R.roots);

    // log|P| <= U^nu + 3 N log 2 on a grid of E
    const double slack = 3 * R.N * std::log(2.0);
    R.envelope_log_bound = n * eq.log_capacity + slack;
    R.max_excess = -HUGE_VAL;
    R.max_log_abs_on_E = -HUGE_VAL;
    for (const auto& P : R.pieces)
        for (int i = 0; i < grid_per_piece; ++i) {
            const double y = P.lo + (P.hi - P.lo) * (i + 0.5) / grid_per_piece;
            const double lp = log_abs_P(eq, refs, P.arc, y);
            R.max_excess = std::max(R.max_excess, lp - eq.potential_at(P.arc, y) - slack);
            R.max_log_abs_on_E = std::max(R.max_log_abs_on_E, lp);
            ++R.grid_points;
        }
    R.bound_ok = R.max_excess <= 0 && R.N <= R.N_bound;

    // 4 int phi log(1/|t - theta|) <= 3 log(1/((theta - gamma)(gamma' - theta))) + 2
    boost::math::quadrature::tanh_sinh<double> ts;
    R.eq3_worst_margin = HUGE_VAL;
    for (const auto& P : R.pieces) {
        const int a = P.arc;
        const double h = eq.half[a];
        for (int i = 0; i < probes_per_piece; ++i) {
            const double th = P.lo + (P.hi - P.lo) * (i + 0.5) / probes_per_piece;
            // boost passes xc = a - t on the left half and b - t on the right half
            auto left = [&](double t, double xc) {
                const double dl = xc < 0 ? (h + P.lo) - xc : h + t;
                const double dist = xc < 0 ? th - t : xc;
                return eq.density_at(a, t, dl, h - t) * -std::log(dist);
            };
            auto right = [&](double t, double xc) {
                const double dr = xc > 0 ? (h - P.hi) + xc : h - t;
                const double dist = xc > 0 ? t - th : -xc;
                return eq.density_at(a, t, h + t, dr) * -std::log(dist);
            };
            double lhs = 4 * (ts.integrate(left, P.lo, th) + ts.integrate(right, th, P.hi));
            double rhs = 3 * -std::log((th - P.lo) * (P.hi - th)) + 2;
            R.eq3_worst_margin = std::min(R.eq3_worst_margin, rhs - lhs);
            ++R.probes;
        }
    }
    R.eq3_ok = R.eq3_worst_margin >= 0;
    return R;
}

}  // namespace szego
