#include "szego/certificates.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::log;

constexpr double kPi = 3.14159265358979323846;

Real rlog(double x) { return log(Real(x)); }

// largest log|P| over the arcs for P = prod (z - e^{i c_l})^{mult_l}, sampled
double log_max_on_arcs(const ArcSet& arcs, const std::vector<Real>& centers, const std::vector<int>& mult,
                       int samples = 512)
{
    const Real tp = two_pi();
    double best = -HUGE_VAL;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const double h = arcs.arcs()[a].length / 2;
        const Real ca = arcs.arcs()[a].center();
        std::vector<double> off(centers.size());
        for (std::size_t k = 0; k < centers.size(); ++k) {
            Real d = ca - centers[k];
            d -= tp * boost::multiprecision::round(d / tp);
            off[k] = to_double(d);
        }
        for (int i = 0; i <= samples; ++i) {
            const double y = -h + 2 * h * i / samples;
            double s = 0;
            for (std::size_t k = 0; k < centers.size(); ++k)
                s += mult[k] * std::log(std::fabs(2 * std::sin((off[k] + y) / 2)));
            best = std::max(best, s);
        }
    }
    return best;
}

Inequality e_n_hypothesis(const SzegoResult& r, const Real& omega)
{
    return make_inequality("e_n <= exp(-Omega)", r.e_n, exp(-omega));
}

// extremal polynomial, its sublevel arcs at e^{-Omega/2}, and the residual mass
struct Sublevel {
    SzegoResult sz;
    SublevelResult sub;
    Real residual;
};

Sublevel extremal_sublevel(const Measure& rho, int n, const Real& omega, const PrecisionContext& ctx)
{
    Sublevel s;
    s.sz = szego_en(rho, n, ctx);
    s.sub = sublevel_arcs(s.sz.extremal, exp(-omega / 2));
    if (s.sub.empty)
        s.residual = rho.total_mass();
    else if (s.sub.full_circle)
        s.residual = Real(0);
    else
        s.residual = mass_outside(rho, s.sub.arcs);
    return s;
}

}  // namespace

Inequality make_inequality(std::string name, const Real& lhs, const Real& rhs)
{
    Inequality q;
    q.name = std::move(name);
    q.lhs = lhs;
    q.rhs = rhs;
    q.pass = lhs <= rhs;
    return q;
}

bool Certificate::hypotheses_hold() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Inequality& q) { return q.pass; });
}

bool Certificate::checks_pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Inequality& q) { return q.pass; });
}

const Inequality* Certificate::check(const std::string& name) const
{
    for (const auto& q : checks)
        if (q.name == name) return &q;
    for (const auto& q : hypotheses)
        if (q.name == name) return &q;
    return nullptr;
}

const Real* Certificate::value(const std::string& name) const
{
    for (const auto& q : measured)
        if (q.name == name) return &q.value;
    return nullptr;
}

std::string certificate_to_json(const Certificate& c)
{
    using nlohmann::json;
    auto ineq = [](const std::vector<Inequality>& v) {
        json a = json::array();
        for (const auto& q : v)
            a.push_back({{"name", q.name}, {"lhs", to_decimal(q.lhs)}, {"rhs", to_decimal(q.rhs)}, {"pass", q.pass}});
        return a;
    };
    json j;
    j["kind"] = c.kind;
    j["n"] = c.n;
    j["omega"] = to_decimal(c.omega);
    j["hypotheses"] = ineq(c.hypotheses);
    j["checks"] = ineq(c.checks);
    json m = json::object();
    for (const auto& q : c.measured) m[q.name] = to_decimal(q.value);
    j["measured"] = m;
    j["notes"] = c.notes;
    j["degree"] = c.degree;
    j["hypotheses_hold"] = c.hypotheses_hold();
    j["pass"] = c.ok();
    if (c.arcs) {
        json a = json::array();
        for (const auto& arc : c.arcs->arcs())
            a.push_back({{"start", to_decimal(arc.start_real())}, {"length", to_decimal(Real(arc.length))}});
        j["arcs"] = a;
    }
    return j.dump(2);
}

Certificate certify_metric_A(const Measure& rho, int n, const Real& omega, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Certificate c;
    c.kind = "metric_A";
    c.n = n;
    c.omega = omega;
    c.hypotheses.push_back(make_inequality("n >= 3", Real(3), Real(n)));
    c.hypotheses.push_back(make_inequality("16 n log n <= Omega", Real(16 * n) * rlog(n), omega));
    if (n < 1) return c;
    const auto s = extremal_sublevel(rho, n, omega, ctx);
    c.hypotheses.push_back(e_n_hypothesis(s.sz, omega));
    c.measured.push_back({"e_n", s.sz.e_n});
    if (!c.hypotheses_hold()) {
        c.notes.push_back("hypotheses not met; no arcs produced");
        return c;
    }
    c.degree = n;
    c.arcs = s.sub.arcs;
    const int p = s.sub.full_circle ? 1 : static_cast<int>(s.sub.arcs.size());
    c.checks.push_back(make_inequality("p <= n", Real(p), Real(n)));
    const double hs = s.sub.full_circle ? HUGE_VAL : s.sub.arcs.harmonic_sum();
    c.checks.push_back(make_inequality("sum 1/log(1/|I|) <= 8 n log n / Omega", Real(hs),
                                       Real(8 * n) * rlog(n) / omega));
    c.checks.push_back(make_inequality("rho(T \\ E) <= exp(-Omega)", s.residual, exp(-omega)));
    c.measured.push_back({"harmonic_sum", Real(hs)});
    c.measured.push_back({"residual", s.residual});
    return c;
}

Certificate certify_metric_B(const ArcSet& arcs, const Measure& rho, int n, const Real& omega,
                             const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Certificate c;
    c.kind = "metric_B";
    c.n = n;
    c.omega = omega;
    c.arcs = arcs;
    const int p = static_cast<int>(arcs.size());
    const double hs = arcs.harmonic_sum();
    const Real residual = arcs.empty() ? rho.total_mass() : mass_outside(rho, arcs);
    c.hypotheses.push_back(make_inequality("sum 1/log(1/|I|) <= n / (2 Omega)", Real(hs), Real(n) / (2 * omega)));
    c.hypotheses.push_back(make_inequality("rho(T \\ E) <= exp(-Omega)", residual, exp(-omega)));
    c.hypotheses.push_back(make_inequality("4 n <= Omega", Real(4 * n), omega));
    c.hypotheses.push_back(make_inequality("p <= n / 2", Real(p), Real(n) / 2));
    c.measured.push_back({"harmonic_sum", Real(hs)});
    c.measured.push_back({"residual", residual});

    std::vector<Real> centers;
    std::vector<int> mult;
    int deg = 0;
    for (const auto& a : arcs.arcs()) {
        if (!(a.length < 1)) throw PreconditionError("arc of length >= 1 has no vanishing multiplicity");
        const Real m = boost::multiprecision::floor(omega / -rlog(a.length));
        centers.push_back(a.center());
        mult.push_back(static_cast<int>(m.convert_to<long long>()) + 1);
        deg += mult.back();
    }
    c.degree = deg;
    c.checks.push_back(make_inequality("deg P <= n", Real(deg), Real(n)));
    if (deg > n) return c;

    // z^{n - deg} P is monic of degree n with the same modulus on the circle
    CirclePolynomial P = CirclePolynomial::from_unit_roots({});
    if (!centers.empty()) {
        std::vector<Real> roots;
        for (std::size_t k = 0; k < centers.size(); ++k) roots.insert(roots.end(), mult[k], centers[k]);
        P = CirclePolynomial::from_unit_roots(roots);
    }
    const Real l2 = l2_norm_squared(rho, P);
    const Real max_on = arcs.empty() ? Real(0) : exp(Real(2 * log_max_on_arcs(arcs, centers, mult)));
    const Real proof_bound = max_on + pow(Real(4), deg) * residual;
    c.measured.push_back({"integral |P|^2 d rho", l2});
    c.measured.push_back({"certified e_n", boost::multiprecision::sqrt(l2)});
    c.measured.push_back({"max_E |P|^2", max_on});
    c.measured.push_back({"max_E |P|^2 + 4^deg residual", proof_bound});
    // what the chain of inequalities in the argument gives for e_n^2
    c.measured.push_back({"(1 + 4^n) exp(-Omega)", (1 + pow(Real(4), n)) * exp(-omega)});

    const auto sz = szego_en(rho, n, ctx);
    c.measured.push_back({"e_n", sz.e_n});
    c.checks.push_back(make_inequality("integral |P|^2 d rho <= 4 exp(-Omega)", l2, 4 * exp(-omega)));
    c.checks.push_back(make_inequality("e_n^2 <= integral |P|^2 d rho", sz.e_n_squared, l2 * (1 + Real(1e-20))));
    return c;
}

CapacityConstants capacity_constants(int n)
{
    CapacityConstants k;
    if (n >= 14) return k;
    const int Nmax = 13 * n + 14;
    k.enlarged = true;
    k.C = (2 * Nmax + n - 1) / n;
    k.C1 = static_cast<int>(std::ceil((4 * std::log(4.0) * Nmax + 2 * std::log(2.0)) / n));
    return k;
}

Certificate certify_capacity(const Measure& rho, int n, const Real& omega, CapacityDirection dir,
                             const std::optional<ArcSet>& arcs, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    Certificate c;
    c.n = n;
    c.omega = omega;
    if (dir == CapacityDirection::A) {
        c.kind = "capacity_A";
        c.hypotheses.push_back(make_inequality("n >= 2", Real(2), Real(n)));
        if (n < 1) return c;
        const auto s = extremal_sublevel(rho, n, omega, ctx);
        c.hypotheses.push_back(e_n_hypothesis(s.sz, omega));
        c.measured.push_back({"e_n", s.sz.e_n});
        if (!c.hypotheses_hold()) {
            c.notes.push_back("hypotheses not met; no arcs produced");
            return c;
        }
        c.degree = n;
        c.arcs = s.sub.arcs;
        int p = 0;
        Real logcap(0);
        if (s.sub.full_circle) {
            p = 1;
        } else if (s.sub.empty) {
            logcap = Real(-HUGE_VAL);
        } else {
            p = static_cast<int>(s.sub.arcs.size());
            logcap = Real(log_capacity(s.sub.arcs));
        }
        c.checks.push_back(make_inequality("p <= n", Real(p), Real(n)));
        c.checks.push_back(make_inequality("cap(E) <= exp(-Omega / (2 n))", exp(logcap), exp(-omega / (2 * n))));
        c.checks.push_back(make_inequality("rho(T \\ E) <= exp(-Omega)", s.residual, exp(-omega)));
        c.measured.push_back({"capacity", exp(logcap)});
        c.measured.push_back({"log capacity", logcap});
        c.measured.push_back({"residual", s.residual});
        return c;
    }

    c.kind = "capacity_B";
    if (!arcs || arcs->empty()) throw PreconditionError("direction B needs the arc set");
    const ArcSet& E = *arcs;
    c.arcs = E;
    const auto K = capacity_constants(n);
    if (K.enlarged)
        c.notes.push_back("n < 14: constants enlarged to C = " + std::to_string(K.C) + ", C1 = " + std::to_string(K.C1));
    const Real logcap(log_capacity(E));
    const Real residual = mass_outside(rho, E);
    c.hypotheses.push_back(make_inequality("cap(E) <= exp(-Omega / n)", exp(logcap), exp(-omega / n)));
    c.hypotheses.push_back(make_inequality("rho(T \\ E) <= exp(-Omega)", residual, exp(-omega)));
    c.hypotheses.push_back(make_inequality("C1 n <= Omega", Real(K.C1) * n, omega));
    c.hypotheses.push_back(make_inequality("p <= n", Real(static_cast<int>(E.size())), Real(n)));
    c.measured.push_back({"C", Real(K.C)});
    c.measured.push_back({"C1", Real(K.C1)});
    c.measured.push_back({"log capacity", logcap});
    c.measured.push_back({"residual", residual});
    if (static_cast<int>(E.size()) > n) return c;

    const auto D = discretization_polynomial(E, n);
    const int N = D.N;
    c.degree = 2 * N;
    const Real log4 = rlog(4.0);
    // max_E |P|^2 from the grid, max_T |P|^2 <= 4^{2N}
    const Real log_maxE2 = Real(2 * D.max_log_abs_on_E);
    const Real log_maxT2 = Real(2 * N) * log4;
    const Real certified = exp(log_maxE2) + exp(log_maxT2) * residual;
    const Real proof = exp(-2 * omega + Real(3 * N) * log4) + exp(Real(2 * N) * log4 - omega);
    c.measured.push_back({"pieces N", Real(N)});
    c.measured.push_back({"max_E |P|^2", exp(log_maxE2)});
    c.measured.push_back({"max_E |P|^2 + 4^{2N} residual", certified});
    c.measured.push_back({"exp(-2 Omega) 4^{3N} + 4^{2N} exp(-Omega)", proof});
    c.measured.push_back({"discretization grid excess", Real(D.max_excess)});
    c.checks.push_back(make_inequality("2N <= C n", Real(2 * N), Real(K.C * n)));
    c.checks.push_back(make_inequality("log|P| - U - 3N log 2 <= 0 on E", Real(D.max_excess), Real(0)));
    c.checks.push_back(make_inequality("max_E |P|^2 + 4^{2N} residual <= exp(-Omega/2)", certified, exp(-omega / 2)));
    c.checks.push_back(make_inequality("exp(-2 Omega) 4^{3N} + 4^{2N} exp(-Omega) <= exp(-Omega/2)", proof,
                                       exp(-omega / 2)));
    // the true e_{Cn} sits below any certificate
    const auto sz = szego_en(rho, K.C * n, ctx);
    c.measured.push_back({"e_{Cn}", sz.e_n});
    c.checks.push_back(make_inequality("e_{Cn}^2 <= certified bound", sz.e_n_squared, certified));
    return c;
}

}  // namespace szego
