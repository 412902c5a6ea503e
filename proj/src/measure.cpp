#include "szego/measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace szego {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_2pi(double x)
{
    double r = std::fmod(x, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

Real wrap_2pi(const Real& x)
{
    const Real tp = two_pi();
    Real r = boost::multiprecision::fmod(x, tp);
    if (r < 0) r += tp;
    return r;
}

bool full_length(double len) { return len >= kTwoPi; }

Real length_real(const Arc& a) { return full_length(a.length) ? two_pi() : Real(a.length); }

// Circle interval with Real endpoints.
struct RArc {
    Real s;
    Real len;
};

std::vector<RArc> complement(const ArcSet& set)
{
    std::vector<RArc> out;
    if (set.is_full_circle()) return out;
    if (set.empty()) {
        out.push_back({Real(0), two_pi()});
        return out;
    }
    const auto& a = set.arcs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real end = a[i].start_real() + length_real(a[i]);
        Real next = a[(i + 1) % a.size()].start_real();
        if (i + 1 == a.size()) next += two_pi();
        Real len = next - end;
        if (len > 0) out.push_back({wrap_2pi(end), len});
    }
    return out;
}

// Pieces of x intersected with y, as intervals [s, s+len] on the real line
// with s measured in the frame of x.
std::vector<RArc> intersect(const RArc& x, const RArc& y)
{
    std::vector<RArc> out;
    const Real tp = two_pi();
    for (int shift = -1; shift <= 1; ++shift) {
        Real ys = y.s + shift * tp;
        Real lo = (x.s > ys ? x.s : ys);
        Real xe = x.s + x.len, ye = ys + y.len;
        Real hi = xe < ye ? xe : ye;
        if (hi > lo) out.push_back({lo, hi - lo});
    }
    return out;
}

// integral_0^L exp(kappa t) dt
Cplx exp_integral0(const Real& L, const Cplx& kappa)
{
    const Real kl = abs(kappa) * L;
    if (kl == 0) return Cplx(L);
    if (kl < Real(0.5)) {
        // L * sum (kappa L)^j / (j+1)!
        Cplx z = kappa * L;
        Cplx term(Real(1));
        Cplx sum(Real(1));
        const Real eps = boost::multiprecision::ldexp(Real(1), -current_precision_bits() - 8);
        for (int j = 1; j < 400; ++j) {
            term = term * z / Real(j + 1);
            sum += term;
            if (abs(term) < eps) break;
        }
        return sum * L;
    }
    Cplx e = unit(kappa.im * L) * boost::multiprecision::exp(kappa.re * L);
    return (e - Cplx(Real(1))) / kappa;
}

// integral over [s, s+L] of exp(kappa theta) dtheta
Cplx exp_integral(const Real& s, const Real& L, const Cplx& kappa)
{
    Cplx rot = unit(kappa.im * s) * boost::multiprecision::exp(kappa.re * s);
    return rot * exp_integral0(L, kappa);
}

double circ_dist(double a, double b) { return std::fabs(angle_diff(a, b)); }

double recip_exp_value(const ReciprocalExpDensity& f, double theta)
{
    double d = circ_dist(theta, f.center);
    if (d == 0.0) return f.scale < 0 ? f.offset : HUGE_VAL;
    return f.offset + f.coeff * std::exp(f.scale / d);
}

// integral of g over [a, b] split in panels no longer than panel
template <class F>
double panel_integral(F g, double a, double b, double panel, double tol, double* err_out)
{
    using boost::math::quadrature::gauss_kronrod;
    int np = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    double h = (b - a) / np;
    double total = 0.0, err_total = 0.0;
    for (int i = 0; i < np; ++i) {
        double lo = a + i * h, hi = (i + 1 == np) ? b : a + (i + 1) * h;
        double err = 0.0;
        total += gauss_kronrod<double, 31>::integrate(g, lo, hi, 8, 1e-13, &err);
        err_total += err;
    }
    if (err_out) *err_out = err_total;
    return total;
}

void check_reciprocal_piece(const DensityPiece& p, const ReciprocalExpDensity& f)
{
    if (f.scale > 0) {
        double d = angle_diff(f.center, p.arc.start);
        if (d < 0) d += kTwoPi;
        if (d <= p.arc.length)
            throw PreconditionError("reciprocal_exp piece with positive scale contains its center");
    }
}

// Moments of a quadrature-only piece over the sub-interval [s, s+len] (radians, double frame).
std::vector<Cplx> quadrature_moments(const std::function<double(double)>& f, double s, double len, int order,
                                     double tol)
{
    std::vector<Cplx> out(order + 1);
    for (int m = 0; m <= order; ++m) {
        double panel = std::min(len, 0.5 / (m + 1));
        double e1 = 0, e2 = 0;
        double re = panel_integral([&](double t) { return f(t) * std::cos(m * t); }, s, s + len, panel, tol, &e1);
        double im = panel_integral([&](double t) { return -f(t) * std::sin(m * t); }, s, s + len, panel, tol, &e2);
        if (e1 + e2 > tol * kTwoPi)
            throw ConvergenceError("density quadrature error " + std::to_string(e1 + e2) + " above tolerance");
        out[m] = Cplx(Real(re / kTwoPi), Real(im / kTwoPi));
    }
    return out;
}

// integral of density piece times exp(-i m theta) dtheta/2pi over sub-interval (Real frame)
std::vector<Cplx> piece_moments_on(const DensityPiece& p, const RArc& part, int order, double tol)
{
    std::vector<Cplx> out(order + 1, Cplx(Real(0)));
    const Real tp = two_pi();
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ConstantDensity>) {
                for (int m = 0; m <= order; ++m)
                    out[m] = exp_integral(part.s, part.len, Cplx(Real(0), Real(-m))) * (Real(f.value) / tp);
            } else if constexpr (std::is_same_v<T, ExpLinearDensity>) {
                // exp(a + b (theta - arc start))
                // part is expressed in the frame of the piece's arc
                Real s0 = part.s - p.arc.start_real();
                Real scale = boost::multiprecision::exp(Real(f.a) + Real(f.b) * s0) / tp;
                for (int m = 0; m <= order; ++m) {
                    Cplx v = unit(-Real(m) * part.s) * exp_integral0(part.len, Cplx(Real(f.b), Real(-m)));
                    out[m] = v * scale;
                }
            } else if constexpr (std::is_same_v<T, CosineDensity>) {
                Real half = Real(f.amplitude) / 2;
                for (int m = 0; m <= order; ++m) {
                    Cplx v = exp_integral(part.s, part.len, Cplx(Real(0), Real(-m))) * Real(f.base);
                    v += exp_integral(part.s, part.len, Cplx(Real(0), Real(f.frequency - m))) * half;
                    v += exp_integral(part.s, part.len, Cplx(Real(0), Real(-f.frequency - m))) * half;
                    out[m] = v / tp;
                }
            } else {
                check_reciprocal_piece(p, f);
                double s = to_double(part.s), len = to_double(part.len);
                out = quadrature_moments([&](double t) { return recip_exp_value(f, t); }, s, len, order, tol);
            }
        },
        p.family);
    return out;
}

RArc to_rarc(const Arc& a) { return {a.start_real(), length_real(a)}; }

}  // namespace

// ---------------------------------------------------------------- Angle

Angle Angle::rational(std::int64_t num, std::int64_t den)
{
    if (den <= 0) throw PreconditionError("angle denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = den;
    Angle a;
    a.num = num / g;
    a.den = den / g;
    a.turns = static_cast<double>(a.num) / static_cast<double>(a.den);
    return a;
}

Angle Angle::from_turns(double t)
{
    if (!std::isfinite(t)) throw PreconditionError("non-finite angle");
    double r = t - std::floor(t);
    if (r >= 1.0) r = 0.0;
    const double scale = std::ldexp(1.0, 40);
    double x = r * scale;
    if (x == std::floor(x)) return rational(static_cast<std::int64_t>(x), static_cast<std::int64_t>(scale));
    Angle a;
    a.turns = r;
    return a;
}

Angle Angle::from_radians(double r) { return from_turns(r / kTwoPi); }

Real Angle::radians() const
{
    if (exact()) return two_pi() * Real(num) / Real(den);
    return two_pi() * Real(turns);
}

double Angle::radians_double() const { return kTwoPi * turns; }

Cplx Angle::power(std::int64_t m) const
{
    if (exact()) {
        __int128 r = (static_cast<__int128>(m % den) * num) % den;
        if (r < 0) r += den;
        std::int64_t rr = static_cast<std::int64_t>(r);
        if (rr == 0) return Cplx(Real(1), Real(0));
        if (4 * rr == den) return Cplx(Real(0), Real(1));
        if (2 * rr == den) return Cplx(Real(-1), Real(0));
        if (4 * rr == 3 * den) return Cplx(Real(0), Real(-1));
        return unit(two_pi() * Real(rr) / Real(den));
    }
    return unit(Real(m) * radians());
}

// ---------------------------------------------------------------- arcs

double angle_diff(double a, double b) { return std::remainder(a - b, kTwoPi); }

Arc make_arc(double start, double length)
{
    if (!std::isfinite(start) || !std::isfinite(length)) throw PreconditionError("non-finite arc");
    if (!(length > 0)) throw PreconditionError("arc length must be positive");
    Arc a;
    a.start = wrap_2pi(start);
    a.length = std::min(length, kTwoPi);
    return a;
}

ArcSet::ArcSet(std::vector<Arc> arcs)
{
    for (auto& a : arcs) {
        double lo = a.start_lo;
        Arc w = make_arc(a.start, a.length);
        // the low word only survives when no wrapping happened
        if (w.start == a.start) w.start_lo = lo;
        a = w;
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
    std::vector<Arc> merged;
    for (const auto& a : arcs) {
        if (!merged.empty() && a.start <= merged.back().end()) {
            merged.back().length = std::max(merged.back().length, a.end() - merged.back().start);
        } else {
            merged.push_back(a);
        }
    }
    // wrap-around overlap between the last and first arc
    while (merged.size() > 1 && merged.back().end() - kTwoPi >= merged.front().start) {
        Arc last = merged.back();
        merged.pop_back();
        double new_end = std::max(last.end(), merged.front().end() + kTwoPi);
        merged.front().start = last.start;
        merged.front().length = new_end - last.start;
        std::rotate(merged.begin(), merged.begin() + 1, merged.end());
        std::sort(merged.begin(), merged.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
    }
    for (const auto& a : merged) {
        if (a.length >= kTwoPi) {
            merged = {Arc{0.0, kTwoPi}};
            break;
        }
    }
    arcs_ = std::move(merged);
}

ArcSet ArcSet::full_circle()
{
    ArcSet s;
    s.arcs_ = {Arc{0.0, kTwoPi}};
    return s;
}

bool ArcSet::is_full_circle() const { return arcs_.size() == 1 && full_length(arcs_[0].length); }

double ArcSet::total_length() const
{
    double t = 0;
    for (const auto& a : arcs_) t += a.length;
    return t;
}

Real ArcSet::total_length_real() const
{
    Real t = 0;
    for (const auto& a : arcs_) t += length_real(a);
    return t;
}

double ArcSet::normalized_measure() const { return total_length() / kTwoPi; }

ArcSet ArcSet::expanded(double eps) const
{
    if (is_full_circle()) return *this;
    std::vector<Arc> v;
    for (const auto& a : arcs_) v.push_back({a.start - eps, std::min(a.length + 2 * eps, kTwoPi)});
    return ArcSet(v);
}

bool ArcSet::contains(double theta) const
{
    for (const auto& a : arcs_) {
        double d = wrap_2pi(theta - a.start);
        if (d <= a.length) return true;
    }
    return false;
}

bool ArcSet::contains(const Real& theta) const
{
    for (const auto& a : arcs_) {
        if (full_length(a.length)) return true;
        Real d = wrap_2pi(theta - a.start_real());
        if (d <= Real(a.length)) return true;
    }
    return false;
}

double ArcSet::harmonic_sum() const
{
    double s = 0;
    for (const auto& a : arcs_) {
        if (a.length >= 1.0) return HUGE_VAL;
        s += 1.0 / std::log(1.0 / a.length);
    }
    return s;
}

// ---------------------------------------------------------------- measure

Measure& Measure::add(Component c, Real weight)
{
    components.push_back({std::move(weight), std::move(c)});
    return *this;
}

bool Measure::purely_atomic() const
{
    for (const auto& c : components)
        if (!std::holds_alternative<AtomicComponent>(c.component)) return false;
    return true;
}

Real Measure::total_mass() const { return moments(*this, 0).values[0].re; }

std::vector<Atom> Measure::all_atoms() const
{
    std::vector<Atom> out;
    for (const auto& c : components) {
        if (const auto* a = std::get_if<AtomicComponent>(&c.component)) {
            double w = to_double(c.weight);
            for (auto at : a->atoms) {
                at.mass *= w;
                out.push_back(at);
            }
        }
    }
    return out;
}

double density_value(const DensityFamily& f, const Arc& arc, double theta)
{
    double off = wrap_2pi(theta - arc.start);
    if (off > arc.length) return 0.0;
    return std::visit(
        [&](const auto& g) -> double {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ConstantDensity>) return g.value;
            else if constexpr (std::is_same_v<T, ExpLinearDensity>) return std::exp(g.a + g.b * off);
            else if constexpr (std::is_same_v<T, CosineDensity>)
                return g.base + g.amplitude * std::cos(static_cast<double>(g.frequency) * theta);
            else return recip_exp_value(g, theta);
        },
        f);
}

Cplx MomentSequence::at(std::int64_t m) const
{
    std::int64_t a = m < 0 ? -m : m;
    if (a > order()) throw PreconditionError("moment index " + std::to_string(m) + " beyond order");
    return m < 0 ? conj(values[a]) : values[a];
}

std::vector<Cplx> atomic_moments(const AtomicComponent& a, int order)
{
    std::vector<Cplx> out(order + 1, Cplx(Real(0)));
    for (const auto& at : a.atoms) {
        if (!(at.mass >= 0) || !std::isfinite(at.mass)) throw PreconditionError("atom mass must be finite and nonnegative");
        Real mass(at.mass);
        Cplx step = conj(at.angle.power(1));
        Cplx p(Real(1));
        for (int m = 0; m <= order; ++m) {
            out[m] += p * mass;
            p *= step;
        }
    }
    return out;
}

std::vector<Cplx> density_moments(const DensityComponent& d, int order, double tol)
{
    std::vector<Cplx> out(order + 1, Cplx(Real(0)));
    for (const auto& p : d.pieces) {
        auto v = piece_moments_on(p, to_rarc(p.arc), order, tol);
        for (int m = 0; m <= order; ++m) out[m] += v[m];
    }
    return out;
}

void check_lacunary(const std::vector<std::int64_t>& ells)
{
    for (std::size_t j = 0; j < ells.size(); ++j) {
        if (ells[j] < 1) throw PreconditionError("riesz frequencies must be positive");
        if (j > 0 && ells[j] < 3 * ells[j - 1])
            throw PreconditionError("non-lacunary frequencies " + std::to_string(ells[j - 1]) + ", " +
                                    std::to_string(ells[j]) + " at indices " + std::to_string(j - 1) + "," +
                                    std::to_string(j) + " (need ratio >= 3)");
    }
}

std::optional<std::vector<int>> greedy_signed_representation(std::int64_t m, const std::vector<std::int64_t>& ells)
{
    check_lacunary(ells);
    const std::size_t n = ells.size();
    // below[j] = ell_0 + ... + ell_{j-1}
    std::vector<std::int64_t> below(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) below[j + 1] = below[j] + ells[j];
    std::vector<int> eps(n, 0);
    std::int64_t r = m;
    for (std::size_t jj = n; jj-- > 0;) {
        std::int64_t ar = r < 0 ? -r : r;
        if (ar > below[jj]) {
            eps[jj] = r > 0 ? 1 : -1;
            r -= eps[jj] * ells[jj];
        }
    }
    if (r != 0) return std::nullopt;
    return eps;
}

namespace {

// Moments past the spectrum bound are zero.
std::vector<Cplx> riesz_moments_any(const RieszProductComponent& rz, int order)
{
    if (rz.alphas.size() != rz.ells.size()) throw PreconditionError("riesz alphas and ells differ in length");
    check_lacunary(rz.ells);
    for (double a : rz.alphas)
        if (!(a > 0 && a <= 1)) throw PreconditionError("riesz alpha outside (0, 1]");
    std::vector<Cplx> out(order + 1, Cplx(Real(0)));
    for (int m = 0; m <= order; ++m) {
        auto eps = greedy_signed_representation(m, rz.ells);
        if (!eps) continue;
        Real v(1);
        for (std::size_t j = 0; j < eps->size(); ++j)
            if ((*eps)[j] != 0) v *= Real(rz.alphas[j]) / 2;
        out[m] = Cplx(v);
    }
    return out;
}

}  // namespace

std::vector<Cplx> riesz_moments(const RieszProductComponent& rz, int order)
{
    std::int64_t span = std::accumulate(rz.ells.begin(), rz.ells.end(), std::int64_t{0});
    if (order > span)
        throw PreconditionError("riesz moments requested to order " + std::to_string(order) +
                                " beyond the spectrum bound " + std::to_string(span));
    return riesz_moments_any(rz, order);
}

MomentSequence moments(const Measure& rho, int order, double tol)
{
    if (order < 0) throw PreconditionError("negative moment order");
    MomentSequence ms;
    ms.precision_bits = current_precision_bits();
    ms.values.assign(order + 1, Cplx(Real(0)));
    for (const auto& wc : rho.components) {
        if (wc.weight < 0) throw PreconditionError("negative component weight");
        std::vector<Cplx> v = std::visit(
            [&](const auto& c) -> std::vector<Cplx> {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, AtomicComponent>) return atomic_moments(c, order);
                else if constexpr (std::is_same_v<T, DensityComponent>) return density_moments(c, order, tol);
                else return riesz_moments_any(c, order);
            },
            wc.component);
        for (int m = 0; m <= order; ++m) ms.values[m] += v[m] * wc.weight;
    }
    return ms;
}

MomentSequence moments(const Measure& rho, int order, const PrecisionContext& ctx, double tol)
{
    PrecisionScope scope(ctx);
    return moments(rho, order, tol);
}

int invariance_order(const MomentSequence& c, int k, double tol)
{
    if (k < 1) throw PreconditionError("invariance order k must be positive");
    const Real c0 = c.values[0].re;
    int best = 1;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        bool ok = true;
        for (int m = 1; m <= c.order() && ok; ++m)
            if (m % d != 0 && abs(c.values[m]) > Real(tol) * c0) ok = false;
        if (ok) best = d;
    }
    return best;
}

Real mass_outside(const Measure& rho, const ArcSet& arcs, double tol)
{
    Real total(0);
    const auto gaps = complement(arcs);
    const Real tp = two_pi();
    for (const auto& wc : rho.components) {
        Real part(0);
        if (const auto* a = std::get_if<AtomicComponent>(&wc.component)) {
            for (const auto& at : a->atoms)
                if (!arcs.contains(at.angle.radians())) part += Real(at.mass);
        } else if (const auto* d = std::get_if<DensityComponent>(&wc.component)) {
            for (const auto& p : d->pieces) {
                for (const auto& g : gaps) {
                    for (const auto& iv : intersect(to_rarc(p.arc), g)) part += piece_moments_on(p, iv, 0, tol)[0].re;
                }
            }
        } else {
            const auto& rz = std::get<RieszProductComponent>(wc.component);
            double lmax = rz.ells.empty() ? 1.0 : static_cast<double>(rz.ells.back());
            auto f = [&](double t) {
                double v = 1.0;
                for (std::size_t j = 0; j < rz.ells.size(); ++j)
                    v *= 1.0 + rz.alphas[j] * std::cos(static_cast<double>(rz.ells[j]) * t);
                return v;
            };
            for (const auto& g : gaps) {
                double err = 0;
                double s = to_double(g.s), len = to_double(g.len);
                double v = panel_integral(f, s, s + len, 0.5 / lmax, tol, &err);
                part += Real(v) / tp;
            }
        }
        total += part * wc.weight;
    }
    return total;
}

}  // namespace szego
