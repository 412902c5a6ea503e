#include "szego/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace szego {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

// sum of doubles smallest first
double sorted_sum(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    double s = 0;
    for (double x : v) s += x;
    return s;
}

Measure single(Component c)
{
    Measure m;
    m.add(std::move(c));
    return m;
}

DensityComponent lebesgue()
{
    DensityComponent d;
    d.pieces.push_back({Arc{0.0, kTwoPi}, ConstantDensity{1.0}});
    return d;
}

// profile of e_0..e_deg for both measures, one row per listed degree
std::vector<RatioRow> ratio_rows(const MomentSequence& top, const MomentSequence& bottom,
                                 const std::vector<int>& degrees)
{
    const int maxdeg = *std::max_element(degrees.begin(), degrees.end());
    auto pt = en_profile(top, maxdeg);
    auto pb = en_profile(bottom, maxdeg);
    std::vector<RatioRow> out;
    for (int d : degrees) {
        RatioRow r;
        r.degree = d;
        r.e_w_mu = pt[d].e_n;
        r.e_mu = pb[d].e_n;
        r.ratio = r.e_mu > 0 ? r.e_w_mu / r.e_mu : Real(0);
        out.push_back(r);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- tails

TailSequence TailSequence::normalized(std::vector<double> weights)
{
    if (weights.empty()) throw PreconditionError("tail sequence needs at least one weight");
    for (std::size_t j = 0; j < weights.size(); ++j)
        if (!(weights[j] > 0) || !std::isfinite(weights[j]))
            throw PreconditionError("tail sequence weight a_" + std::to_string(j + 1) + " is not positive");
    const double total = sorted_sum(weights);
    TailSequence t;
    t.a_.reserve(weights.size());
    for (double w : weights) t.a_.push_back(w / total);
    t.tails_.assign(t.a_.size() + 1, 0.0);
    for (int k = static_cast<int>(t.a_.size()) - 1; k >= 0; --k) t.tails_[k] = t.tails_[k + 1] + t.a_[k];
    return t;
}

TailSequence TailSequence::geometric(double ratio, int count)
{
    if (!(ratio > 0 && ratio < 1)) throw PreconditionError("geometric tail needs 0 < ratio < 1");
    if (count < 1) throw PreconditionError("geometric tail needs count >= 1");
    std::vector<double> w;
    double x = 1;
    for (int j = 1; j <= count; ++j) w.push_back(x *= ratio);
    return normalized(std::move(w));
}

double TailSequence::tail(int k) const
{
    if (k < 0) throw PreconditionError("tail index must be nonnegative");
    return k < static_cast<int>(tails_.size()) ? tails_[k] : 0.0;
}

bool TailSequence::monotone() const
{
    for (std::size_t j = 1; j < a_.size(); ++j)
        if (a_[j] > a_[j - 1]) return false;
    return true;
}

// ---------------------------------------------------------------- dyadic and monotone tails

Measure dyadic_root_measure(const TailSequence& a, int K)
{
    if (K < 1) throw PreconditionError("dyadic measure needs K >= 1");
    if (K > 20) throw PreconditionError("dyadic measure with K = " + std::to_string(K) + " needs 2^K atoms per level");
    if (K > a.size()) throw PreconditionError("tail sequence shorter than K");
    Measure rho;
    for (int k = 1; k <= K; ++k) {
        AtomicComponent level;
        const std::int64_t den = std::int64_t{1} << (k + 1);
        const double mass = std::ldexp(1.0, -k);
        // odd numerators: roots of order 2^{k+1} that are not roots of order 2^k
        for (std::int64_t j = 1; j < den; j += 2) level.atoms.push_back({Angle::rational(j, den), mass});
        rho.add(std::move(level), Real(a.a(k)));
    }
    return rho;
}

MonotoneTailMeasure monotone_tail_measure(const TailSequence& a, int n)
{
    if (n < 0) throw PreconditionError("monotone tail measure needs n >= 0");
    if (!a.monotone()) throw PreconditionError("monotone tail measure needs a non-increasing sequence");
    MonotoneTailMeasure r;
    r.n = n;
    const int m = n + 1;
    AtomicComponent atoms;
    double min_mass = HUGE_VAL;
    for (int k = 1; k <= m; ++k) {
        std::vector<double> parts;
        for (int j = k; j <= a.size(); j += m) parts.push_back(a.a(j));
        const double mass = sorted_sum(parts);
        min_mass = std::min(min_mass, mass);
        atoms.atoms.push_back({Angle::rational(k % m, m), mass});
    }
    r.rho.add(std::move(atoms));
    r.min_mass = Real(min_mass);
    r.lower_bound = Real(m) * r.min_mass;
    return r;
}

// ---------------------------------------------------------------- anti-Nevai pair

double AntiNevaiWeight::spread(double theta) const
{
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    auto it = std::upper_bound(pieces.begin(), pieces.end(), theta,
                               [](double t, const SpreadPiece& p) { return t < p.lo; });
    if (it == pieces.begin()) return 0;
    --it;
    return theta <= it->hi ? it->value : 0;
}

double AntiNevaiWeight::operator()(double theta) const
{
    const double s = spread(theta);
    if (s == 0) return 1;
    double H = 0;
    if (h == HFamily::reciprocal) H = 1 / std::fabs(angle_diff(theta, 0.0));
    // H >= 0 here, so H_- = 0 and w = max(1, w0) = w0
    return std::max(1.0, 1 + std::exp(H) * s);
}

bool AntiNevaiPair::ok() const
{
    bool good = eta_decreasing && disjoint_within_levels && invariance_ok && weight_at_least_one;
    for (const auto& c : integrability) good = good && c.pass;
    for (const auto& c : chain) good = good && c.pass;
    return good;
}

namespace {

// integral of |theta|^{-p} over [lo, hi] (0 < lo < hi), in radians
double inv_power_integral(double lo, double hi, double p)
{
    if (p == 1) return std::log(hi / lo);
    return (std::pow(lo, 1 - p) - std::pow(hi, 1 - p)) / (p - 1);
}

double a_rule_constant(int k) { return std::ldexp(1.0, k + 2) / kPi; }

}  // namespace

AntiNevaiPair anti_nevai_pair(const AntiNevaiSpec& spec, int K, const PrecisionContext& ctx)
{
    if (K < 1) throw PreconditionError("anti-Nevai pair needs K >= 1");
    if (K > 16) throw PreconditionError("anti-Nevai pair with K = " + std::to_string(K) + " is too many pieces");
    PrecisionScope scope(ctx);
    AntiNevaiPair R;
    R.K = K;
    R.w.h = spec.h;
    const int ext = K + std::max(0, spec.extension);

    // A_k: H_+(conj(lambda) t) > A on {|arg t| < pi / 2^k} only within 1/A of the cell edge,
    // a set of normalized measure 1 / (pi A) = 2^{-k-2} < 2^{-k-1}.  Any A_k works for H = 0.
    std::vector<double> A(ext + 1), eta(ext + 1);
    for (int k = 1; k <= ext; ++k) A[k] = a_rule_constant(k);
    if (spec.eta) {
        if (static_cast<int>(spec.eta->size()) < K) throw PreconditionError("eta override shorter than K");
    }
    for (int k = 1; k <= ext; ++k) {
        if (spec.eta && k <= static_cast<int>(spec.eta->size())) {
            eta[k] = (*spec.eta)[k - 1];
            continue;
        }
        double e = std::ldexp(1.0, -k) / (std::pow(A[k], k) + 1);
        e = std::min(e, std::ldexp(1.0, -k - 1));
        if (k > 1) e = std::min(e, eta[k - 1] / 2);
        eta[k] = e;
    }
    // X_k = [-pi eta_k, pi eta_k] must sit where H_+ <= A_k: |t| <= pi / 2^k - 1 / A_k
    for (int k = 1; k <= K; ++k) {
        const double room = kPi * std::ldexp(1.0, -k) - 1 / A[k];
        if (!(eta[k] > 0) || kPi * eta[k] > room)
            throw PreconditionError("eta_" + std::to_string(k) + " leaves the region where H_+ <= A_k");
    }

    std::vector<double> a(K + 1);
    if (spec.a) {
        if (spec.a->size() < K) throw PreconditionError("tail sequence shorter than K");
        std::vector<double> w(spec.a->values().begin(), spec.a->values().begin() + K);
        auto t = TailSequence::normalized(w);
        for (int k = 1; k <= K; ++k) a[k] = t.a(k);
    } else {
        std::vector<double> w;
        for (int k = 1; k <= K; ++k) w.push_back(std::max(spec.epsilon(std::ldexp(1.0, k)), std::ldexp(1.0, -k)));
        auto t = TailSequence::normalized(w);
        for (int k = 1; k <= K; ++k) a[k] = t.a(k);
    }
    R.A.assign(A.begin() + 1, A.begin() + K + 1);
    R.eta.assign(eta.begin() + 1, eta.begin() + K + 1);
    R.a.assign(a.begin() + 1, a.end());

    R.eta_decreasing = true;
    for (int k = 2; k <= K; ++k) R.eta_decreasing = R.eta_decreasing && eta[k] < eta[k - 1];
    // cells of one level are 2 pi / 2^k apart and X_k is 2 pi eta_k wide
    R.disjoint_within_levels = true;
    for (int k = 1; k <= K; ++k) R.disjoint_within_levels = R.disjoint_within_levels && eta[k] < std::ldexp(1.0, -k);

    // mu0 = e^{-H_+} m
    if (spec.h == HFamily::reciprocal) {
        DensityComponent d;
        // split at pi, where the circular distance to 0 has its kink
        d.pieces.push_back({Arc{0.0, kPi}, ReciprocalExpDensity{0.0, 1.0, -1.0, 0.0}});
        d.pieces.push_back({Arc{kPi, kPi}, ReciprocalExpDensity{0.0, 1.0, -1.0, 0.0}});
        R.mu0.add(std::move(d));
    } else {
        R.mu0.add(lebesgue());
    }
    R.w_mu = R.mu0;

    struct Interval {
        double lo, hi;
        int level;
    };
    std::vector<Interval> all;
    R.invariance_ok = true;
    for (int k = 1; k <= K; ++k) {
        const std::int64_t den = std::int64_t{1} << (k + 1);
        const double half = kPi * eta[k];
        const double value = 1 / (std::ldexp(1.0, k) * eta[k]);
        DensityComponent level;
        for (std::int64_t j = 1; j < den; j += 2) {
            const double c = kTwoPi * static_cast<double>(j) / static_cast<double>(den);
            level.pieces.push_back({Arc{c - half, 2 * half}, ConstantDensity{value}});
            all.push_back({c - half, c + half, k});
        }
        const int cells = 1 << k;
        auto mk = moments(single(level), std::min(4 * cells, 256), ctx);
        R.invariance_ok = R.invariance_ok && invariance_order(mk, cells, 1e-12) == cells;
        R.w_mu.add(std::move(level), Real(a[k]));
    }

    // elementary intervals of the union, with the level sum on each
    std::vector<double> cuts;
    for (const auto& iv : all) {
        cuts.push_back(iv.lo);
        cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    R.disjoint_across_levels = true;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        SpreadPiece P{cuts[i], cuts[i + 1], 0.0, 0};
        for (const auto& iv : all)
            if (iv.lo <= mid && mid <= iv.hi) {
                P.value += a[iv.level] / (std::ldexp(1.0, iv.level) * eta[iv.level]);
                ++P.levels;
            }
        if (P.levels == 0) continue;
        if (P.levels > 1) R.disjoint_across_levels = false;
        R.w.pieces.push_back(P);
    }

    // w >= 1 on a grid and at every piece midpoint
    R.weight_at_least_one = true;
    for (int i = 0; i < 1 << 14; ++i) R.weight_at_least_one = R.weight_at_least_one && R.w(kTwoPi * (i + 0.5) / (1 << 14)) >= 1;
    for (const auto& P : R.w.pieces) R.weight_at_least_one = R.weight_at_least_one && R.w(0.5 * (P.lo + P.hi)) >= 1;

    for (double p : spec.powers) {
        IntegrabilityCheck c;
        c.p = p;
        for (const auto& iv : all) {
            if (spec.h == HFamily::reciprocal) {
                // H = 1/|theta| with theta the signed angle; cells never straddle 0
                double lo = std::fabs(angle_diff(iv.lo, 0.0)), hi = std::fabs(angle_diff(iv.hi, 0.0));
                if (lo > hi) std::swap(lo, hi);
                c.h_integral += inv_power_integral(lo, hi, p) / kTwoPi;
            }
        }
        for (const auto& P : R.w.pieces)
            if (P.value > 1) c.log_integral += (P.hi - P.lo) / kTwoPi * std::pow(std::log(P.value), p);
        auto h_term = [&](int k) { return std::pow(A[k], p) * std::ldexp(eta[k], k); };
        auto log_term = [&](int k) { return std::ldexp(eta[k], k) * std::pow(std::log(1 / eta[k]), p); };
        for (int k = 1; k <= K; ++k) {
            c.h_bound += h_term(k);
            c.log_bound += log_term(k);
        }
        // both series dominated by 2^{-k} once k > 2p; the k named is the first that is not
        c.witness_from = static_cast<int>(std::floor(2 * p)) + 1;
        for (int k = 1; k <= ext; ++k) {
            // past double range the terms are far below 2^{-k}; the rule keeps eta decreasing
            if (eta[k] < 1e-280) break;
            const double ht = spec.h == HFamily::reciprocal ? h_term(k) : 0.0;
            c.h_series += ht;
            c.log_series += log_term(k);
            if (k >= c.witness_from && (ht > std::ldexp(1.0, -k) || log_term(k) > std::ldexp(1.0, -k)))
                throw PreconditionError("eta_" + std::to_string(k) + " too large for integrability at p = " +
                                        std::to_string(p));
        }
        const double h_cap = spec.h == HFamily::reciprocal ? c.h_bound : 0.0;
        c.pass = c.h_integral <= h_cap * (1 + 1e-12) && c.log_integral <= c.log_bound * (1 + 1e-12) &&
                 std::isfinite(c.h_series) && std::isfinite(c.log_series);
        R.integrability.push_back(c);
    }

    // e_{2^n}(w mu)^2 >= sum_{k >= n+1} a_k
    std::vector<int> degrees;
    for (int n = 0; n < K; ++n) degrees.push_back(1 << n);
    // panel error estimates of the e^{-1/|theta|} moments sum to about 1e-11, above the 1e-13 default
    const double tol = spec.h == HFamily::reciprocal ? 1e-10 : 1e-13;
    const auto mw = moments(R.w_mu, degrees.back(), ctx, tol);
    const auto m0 = moments(R.mu0, degrees.back(), ctx, tol);
    auto prof = en_profile(mw, degrees.back());
    for (int n = 0; n < K; ++n) {
        LevelBound b;
        b.n = n;
        b.e_sq = prof[1 << n].e_n_squared;
        b.tail = 0;
        for (int k = K; k >= n + 1; --k) b.tail += Real(a[k]);
        b.pass = b.e_sq >= b.tail;
        R.chain.push_back(b);
    }
    R.ratios = ratio_rows(mw, m0, degrees);
    for (auto& r : R.ratios) r.epsilon = spec.epsilon(r.degree);
    return R;
}

// ---------------------------------------------------------------- proN pair

ProNSpec ProNSpec::scaled(int levels)
{
    if (levels < 1 || levels > 6) throw PreconditionError("scaled schedule supports 1..6 levels");
    ProNSpec s;
    std::int64_t N = 4;
    double alpha = 0.4;
    for (int k = 0; k < levels; ++k) {
        s.N.push_back(N);
        s.alpha.push_back(alpha);
        s.beta.push_back(alpha * std::exp(-4.0));
        N *= 4;
        alpha /= 4;
    }
    return s;
}

std::vector<std::int64_t> ProNSpec::literal_schedule(int last_level)
{
    if (last_level < 2) throw PreconditionError("the schedule starts at k = 2");
    if (last_level > 2)
        throw PreconditionError("N_k = 2^{4^k} beyond k = 2 does not fit any numeric type (N_3 = 2^64)");
    return {std::int64_t{1} << 16};
}

bool ProNPair::ok() const
{
    bool good = mu_max < 1 && mu_min_positive > 0 && w_max <= 1 && w_min > 0 &&
                std::fabs(log_integral_closed - log_integral_quadrature) <= 1e-10;
    for (const auto& b : invariance) good = good && b.pass;
    return good;
}

ProNPair pron_pair(const ProNSpec& spec, int K, const PrecisionContext& ctx)
{
    if (K < 1 || K > static_cast<int>(spec.N.size())) throw PreconditionError("pron pair needs 1 <= K <= levels");
    if (spec.alpha.size() != spec.N.size() || spec.beta.size() != spec.N.size())
        throw PreconditionError("pron schedule arrays differ in length");
    for (int k = 0; k < K; ++k) {
        const std::string lv = std::to_string(k + 2);
        if (spec.N[k] < 1 || (k > 0 && spec.N[k] <= spec.N[k - 1]))
            throw PreconditionError("N_" + lv + " breaks the strictly increasing schedule");
        if (!(spec.beta[k] > 0 && spec.beta[k] < spec.alpha[k] && spec.alpha[k] < 0.5))
            throw PreconditionError("level " + lv + " violates 0 < beta < alpha < 1/2");
        if (spec.N[k] > 4096) throw PreconditionError("N_" + lv + " too large to materialize");
    }
    PrecisionScope scope(ctx);
    ProNPair R;
    R.K = K;
    R.spec = spec;

    // breakpoints in turns
    std::vector<double> cuts{0.0, 1.0};
    DensityComponent mu;
    for (int k = 0; k < K; ++k) {
        const double N = static_cast<double>(spec.N[k]), al = spec.alpha[k], be = spec.beta[k];
        for (std::int64_t j = 0; j < spec.N[k]; ++j) {
            const double t0 = j / N, t1 = (j + al) / N, t2 = (j + 0.5) / N;
            cuts.insert(cuts.end(), {t0, t1, t2});
            mu.pieces.push_back({Arc{kTwoPi * t0, kTwoPi * (t1 - t0)}, ConstantDensity{al}});
            mu.pieces.push_back({Arc{kTwoPi * t1, kTwoPi * (t2 - t1)}, ConstantDensity{be}});
        }
    }
    R.mu.add(mu);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // pointwise h and g at theta (turns)
    auto frac = [](double x) { return x - std::floor(x); };
    auto mu_at = [&](double t) {
        double s = 0;
        for (int k = 0; k < K; ++k) {
            const double u = frac(spec.N[k] * t);
            s += u <= spec.alpha[k] ? spec.alpha[k] : (u <= 0.5 ? spec.beta[k] : 0.0);
        }
        return s;
    };
    auto w_at = [&](double t) {
        double e = 0;
        for (int k = 0; k < K; ++k)
            if (frac(spec.N[k] * t) <= spec.alpha[k]) e += std::log(spec.beta[k] / spec.alpha[k]);
        return std::exp(e);
    };

    R.mu_max = 0;
    R.mu_min_positive = HUGE_VAL;
    R.w_max = 0;
    R.w_min = HUGE_VAL;
    DensityComponent wmu;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]), len = cuts[i + 1] - cuts[i];
        const double m = mu_at(mid), w = w_at(mid);
        R.mu_max = std::max(R.mu_max, m);
        if (m > 0)
            R.mu_min_positive = std::min(R.mu_min_positive, m);
        else
            R.zero_set_measure += len;
        R.w_max = std::max(R.w_max, w);
        R.w_min = std::min(R.w_min, w);
        R.log_integral_quadrature += len * -std::log(w);
        if (m > 0) wmu.pieces.push_back({Arc{kTwoPi * cuts[i], kTwoPi * len}, ConstantDensity{w * m}});
    }
    // a fine grid as well, so w <= 1 is not only checked at piece midpoints
    for (int i = 0; i < 1 << 16; ++i) {
        const double w = w_at((i + 0.5) / (1 << 16));
        R.w_max = std::max(R.w_max, w);
        R.w_min = std::min(R.w_min, w);
    }
    R.w_mu.add(std::move(wmu));
    for (int k = 0; k < K; ++k)
        R.log_integral_closed += spec.alpha[k] * std::log(spec.alpha[k] / spec.beta[k]);

    // e_s(mu)^2 >= alpha_k^2 for s < N_k
    const int top = static_cast<int>(spec.N[K - 1]);
    const auto mm = moments(R.mu, top, ctx);
    auto prof = en_profile(mm, top);
    for (int k = 0; k < K; ++k) {
        ProNPair::InvarianceBound b;
        b.level = k + 2;
        b.N = spec.N[k];
        b.alpha_sq = Real(spec.alpha[k]) * Real(spec.alpha[k]);
        b.min_e_sq = prof[0].e_n_squared;
        for (std::int64_t s = 0; s < spec.N[k]; ++s) b.min_e_sq = rmin(b.min_e_sq, prof[s].e_n_squared);
        b.pass = b.min_e_sq >= b.alpha_sq;
        R.invariance.push_back(b);
    }
    std::vector<int> degrees(top + 1);
    std::iota(degrees.begin(), degrees.end(), 0);
    R.ratios = ratio_rows(moments(R.w_mu, top, ctx), mm, degrees);
    return R;
}

// ---------------------------------------------------------------- Riesz products

RieszMeasure riesz_measure(const std::vector<double>& alphas, const std::vector<std::int64_t>& ells, int n,
                           const RieszTail& tail)
{
    if (alphas.size() != ells.size()) throw PreconditionError("riesz alphas and ells differ in length");
    if (n < 0 || n >= static_cast<int>(alphas.size()))
        throw PreconditionError("riesz level " + std::to_string(n) + " outside the supplied factors");
    RieszMeasure r;
    r.product.alphas.assign(alphas.begin(), alphas.begin() + n + 1);
    r.product.ells.assign(ells.begin(), ells.begin() + n + 1);
    check_lacunary(r.product.ells);
    for (double a : r.product.alphas)
        if (!(a > 0 && a <= 1)) throw PreconditionError("riesz alpha outside (0, 1]");
    r.N = std::accumulate(r.product.ells.begin(), r.product.ells.end(), std::int64_t{0});
    r.rho.add(r.product);
    // sum alpha_j^2 diverges iff the tail does: scale * j^{-decay} squared is summable iff decay > 1/2
    r.singular = tail.scale != 0 && tail.decay <= 0.5;
    return r;
}

RieszCheck riesz_check(const RieszMeasure& r, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    RieszCheck c;
    c.N = r.N;
    if (r.N > 4096) throw PreconditionError("riesz order too large for a dense check");
    const int N = static_cast<int>(r.N);
    auto mom = moments(r.rho, N, ctx);
    auto sz = szego_en(mom, N);
    c.e_sq = sz.e_n_squared;
    c.lower = 1;
    c.upper = 1;
    bool endpoint = false;
    for (double a : r.product.alphas) {
        const Real ra(a);
        c.lower *= (1 + sqrt(1 - ra * ra)) / 2;
        c.upper *= 1 - ra * ra / 4;
        c.log_integral_closed += std::log(0.5 * (1 + std::sqrt(1 - a * a)));
        endpoint = endpoint || a == 1;
    }
    // the upper bound is attained for a single factor, so allow rounding at the working precision
    const Real ulp = ldexp(Real(1), 16 - current_precision_bits());
    c.sandwich = c.lower * (1 - ulp) <= c.e_sq && c.e_sq <= c.upper * (1 + ulp);

    // prod (z^l - alpha/2), integrated through the moments
    CirclePolynomial P;
    for (std::size_t j = 0; j < r.product.alphas.size(); ++j) {
        std::vector<Cplx> f(r.product.ells[j] + 1, Cplx(Real(0)));
        f[0] = Cplx(-Real(r.product.alphas[j]) / 2);
        f.back() = Cplx(Real(1));
        P = P * CirclePolynomial(f);
    }
    c.test_l2 = l2_norm_squared(mom, P);

    // periodic trapezoid rule on log of the product density; exponentially convergent for |alpha| < 1
    c.quadrature_used = !endpoint;
    if (c.quadrature_used) {
        auto rule = [&](int M) {
            double s = 0;
            for (int i = 0; i < M; ++i) {
                const double th = kTwoPi * i / M;
                double d = 1;
                for (std::size_t j = 0; j < r.product.alphas.size(); ++j)
                    d *= 1 + r.product.alphas[j] * std::cos(static_cast<double>(r.product.ells[j]) * th);
                s += std::log(d);
            }
            return s / M;
        };
        int M = 1024;
        double prev = rule(M);
        for (M *= 2; M <= 1 << 22; M *= 2) {
            const double cur = rule(M);
            const bool done = std::fabs(cur - prev) < 1e-14;
            prev = cur;
            if (done) break;
        }
        c.log_integral_quadrature = prev;
        c.quadrature_points = std::min(M, 1 << 22);
    } else {
        c.log_integral_quadrature = c.log_integral_closed;
    }
    return c;
}

// ---------------------------------------------------------------- super-exponential instances

SuperexpInstance superexp_arc_instance(int p, int n, const Real& omega)
{
    if (p < 1 || n < 1) throw PreconditionError("superexp instance needs p >= 1 and n >= 1");
    SuperexpInstance s;
    s.n = n;
    s.omega = omega;
    // harmonic sum p / log(1/delta) = 1 / (2 Omega / n + 1) stays below n / (2 Omega)
    const double delta = std::exp(-p * (2 * to_double(omega) / n + 1));
    std::vector<Arc> arcs;
    DensityComponent d;
    for (int k = 0; k < p; ++k) {
        Arc a{0.5 + kTwoPi * k / p, delta};
        arcs.push_back(a);
        d.pieces.push_back({a, ConstantDensity{kTwoPi / (p * delta)}});
    }
    const Real eps = exp(-omega);
    s.rho.add(std::move(d), 1 - eps);
    s.rho.add(lebesgue(), eps);
    s.arcs = ArcSet(arcs);
    return s;
}

Measure superexp_atomic_measure(int count, double c)
{
    if (count < 1 || !(c > 0)) throw PreconditionError("superexp atoms need count >= 1 and c > 0");
    std::vector<double> w;
    for (int j = 1; j <= count; ++j) w.push_back(std::exp(-c * j * j));
    auto t = TailSequence::normalized(w);
    const double golden = 0.5 * (std::sqrt(5.0) - 1);
    AtomicComponent atoms;
    for (int j = 1; j <= count; ++j) {
        double turn = j * golden;
        turn -= std::floor(turn);
        atoms.atoms.push_back({Angle::from_turns(turn), t.a(j)});
    }
    Measure m;
    m.add(std::move(atoms));
    return m;
}

}  // namespace szego
