#include <doctest.h>

#include "szego/constructions.hpp"

#include <cmath>

using namespace szego;

namespace {

constexpr double kPi = 3.14159265358979323846;

Real tail_sum(const TailSequence& a, int from, int to)
{
    Real s = 0;
    for (int k = to; k >= from; --k) s += Real(a.a(k));
    return s;
}

}  // namespace

TEST_CASE("tail sequences")
{
    auto a = TailSequence::geometric(0.5, 40);
    CHECK(a.size() == 40);
    CHECK(std::fabs(a.tail(0) - 1) <= 1e-15);
    for (int k = 0; k < 40; ++k) CHECK(a.tail(k + 1) < a.tail(k));
    CHECK(a.tail(40) == 0);
    CHECK(a.monotone());
    CHECK_FALSE(TailSequence::normalized({0.1, 0.5, 0.4}).monotone());
    CHECK_THROWS_AS(TailSequence::normalized({0.5, 0.0}), PreconditionError);
    CHECK_THROWS_AS(TailSequence::normalized({}), PreconditionError);
}

TEST_CASE("dyadic level one sits on the fourth roots that are not square roots")
{
    PrecisionScope ps(256);
    auto a = TailSequence::normalized({0.75, 0.25});
    auto rho = dyadic_root_measure(a, 1);
    auto atoms = rho.all_atoms();
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].angle.num == 1);
    CHECK(atoms[0].angle.den == 4);
    CHECK(atoms[1].angle.num == 3);
    CHECK(atoms[1].angle.den == 4);
    for (const auto& at : atoms) CHECK(at.mass == doctest::Approx(a.a(1) / 2));
}

TEST_CASE("each dyadic level is 2^-k invariant")
{
    PrecisionScope ps(256);
    auto a = TailSequence::geometric(0.5, 8);
    auto rho = dyadic_root_measure(a, 8);
    REQUIRE(rho.components.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        Measure level;
        level.add(rho.components[k - 1].component);
        auto c = moments(level, 4 << k, PrecisionContext{256});
        CAPTURE(k);
        CHECK(invariance_order(c, 1 << k, 1e-30) == (1 << k));
        CHECK(abs(c.values[0] - Cplx(Real(1))) <= Real(1e-60));
    }
}

TEST_CASE("dyadic sandwich for n <= 6 and K = 12")
{
    PrecisionScope ps(256);
    auto a = TailSequence::geometric(0.5, 12);
    auto rho = dyadic_root_measure(a, 12);
    auto prof = en_profile(rho, 64, PrecisionContext{256});
    for (int n = 1; n <= 6; ++n) {
        const Real e2 = prof[1 << n].e_n_squared;
        CAPTURE(n);
        CHECK(tail_sum(a, n + 1, 12) < e2);
        CHECK(e2 < 4 * tail_sum(a, n, 12));
    }
}

TEST_CASE("monotone tail measure lower bound")
{
    PrecisionScope ps(256);
    auto a = TailSequence::geometric(0.5, 200);
    for (int n = 0; n <= 8; ++n) {
        auto M = monotone_tail_measure(a, n);
        auto s = szego_en(M.rho, n, PrecisionContext{256});
        CAPTURE(n);
        CHECK(s.e_n_squared >= M.lower_bound);
        CHECK(M.lower_bound >= Real(n + 1) * Real(a.a(n + 1)));
        // closed form of (n+1) sum_j 2^{-j(n+1)} for the infinite sequence
        const double closed = (n + 1) / (std::ldexp(1.0, n + 1) - 1);
        CHECK(to_double(M.lower_bound) == doctest::Approx(closed).epsilon(1e-14));
    }
    auto zero = monotone_tail_measure(a, 0);
    REQUIRE(zero.rho.all_atoms().size() == 1);
    CHECK(zero.rho.all_atoms()[0].angle.num == 0);
    CHECK(to_double(szego_en(zero.rho, 0).e_n) == doctest::Approx(1.0).epsilon(1e-15));
    // two atoms at 1 and -1 with masses 1/3 and 2/3: e_1^2 = 1 - (1/3)^2
    auto one = monotone_tail_measure(a, 1);
    CHECK(to_double(szego_en(one.rho, 1).e_n_squared) == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
    CHECK_THROWS_AS(monotone_tail_measure(TailSequence::normalized({0.2, 0.8}), 1), PreconditionError);
}

TEST_CASE("anti-Nevai pair with H = 0 has weight at least one")
{
    AntiNevaiSpec spec;
    spec.h = HFamily::zero;
    auto R = anti_nevai_pair(spec, 5);
    CHECK(R.weight_at_least_one);
    for (double t = 0.001; t < 2 * kPi; t += 0.01) CHECK(R.w(t) >= 1);
    // on a piece the weight is 1 plus the level sum
    REQUIRE_FALSE(R.w.pieces.empty());
    const auto& P = R.w.pieces.front();
    CHECK(R.w(0.5 * (P.lo + P.hi)) == doctest::Approx(1 + P.value));
    CHECK(R.ok());
}

TEST_CASE("anti-Nevai pair: chain, integrability and invariance at K = 6")
{
    AntiNevaiSpec spec;
    auto R = anti_nevai_pair(spec, 6);
    CHECK(R.eta_decreasing);
    CHECK(R.disjoint_within_levels);
    CHECK(R.invariance_ok);
    REQUIRE(R.chain.size() == 6);
    // e_4(w mu)^2 >= sum_{k >= 3} a_k
    CHECK(R.chain[2].n == 2);
    CHECK(R.chain[2].pass);
    CHECK(R.chain[2].e_sq >= R.chain[2].tail);
    REQUIRE(R.integrability.size() == 3);
    for (const auto& c : R.integrability) {
        CAPTURE(c.p);
        CHECK(c.pass);
        CHECK(c.h_integral <= c.h_bound);
        CHECK(c.log_integral <= c.log_bound);
        CHECK(std::isfinite(c.log_series));
    }
    // the two weights differ only by the spread part, which lives away from theta = 0
    CHECK(R.w(0.0) == 1);
    CHECK(R.ok());
    REQUIRE(R.ratios.size() == 6);
    for (const auto& r : R.ratios) CHECK(r.ratio >= 1);
}

TEST_CASE("anti-Nevai pair rejects eta that is too large")
{
    AntiNevaiSpec spec;
    spec.h = HFamily::zero;
    spec.eta = std::vector<double>{0.1, 0.05, 0.02, 0.01, 0.005, 0.004, 0.003, 0.002, 0.001, 0.0009};
    try {
        anti_nevai_pair(spec, 4);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("eta_") != std::string::npos);
    }
}

TEST_CASE("proN pair at the scaled schedule")
{
    PrecisionScope ps(256);
    auto R = pron_pair(ProNSpec::scaled(3), 3);
    CHECK(R.mu_max < 1);
    CHECK(R.mu_min_positive > 0);
    CHECK(R.w_max <= 1);
    CHECK(R.w_min > 0);
    // two evaluation paths for the integral of log(1/w)
    CHECK(std::fabs(R.log_integral_closed - R.log_integral_quadrature) <= 1e-10);
    // alpha_k log(alpha_k / beta_k) = 4 alpha_k here
    CHECK(R.log_integral_closed == doctest::Approx(4 * (0.4 + 0.1 + 0.025)).epsilon(1e-14));
    REQUIRE(R.invariance.size() == 3);
    for (const auto& b : R.invariance) {
        CAPTURE(b.level);
        CHECK(b.pass);
    }
    CHECK(R.invariance[1].N == 16);
    CHECK(R.ok());
    CHECK(R.ratios.size() == 65);
}

TEST_CASE("proN schedules are validated")
{
    auto bad = ProNSpec::scaled(2);
    bad.beta[1] = bad.alpha[1] * 2;
    CHECK_THROWS_AS(pron_pair(bad, 2), PreconditionError);
    auto flat = ProNSpec::scaled(2);
    flat.N[1] = flat.N[0];
    CHECK_THROWS_AS(pron_pair(flat, 2), PreconditionError);
    CHECK(ProNSpec::literal_schedule(2).front() == 65536);
    CHECK_THROWS_AS(ProNSpec::literal_schedule(3), PreconditionError);
}

TEST_CASE("riesz single factor 1 + cos")
{
    PrecisionScope ps(256);
    auto r = riesz_measure({1.0}, {1}, 0);
    CHECK(r.N == 1);
    auto c = moments(r.rho, 2, PrecisionContext{256});
    CHECK(abs(c.values[1] - Cplx(Real(1) / 2)) <= Real(1e-70));
    CHECK(abs(c.values[2]) <= Real(1e-70));
    auto chk = riesz_check(r);
    CHECK(abs(chk.e_sq - Real(3) / 4) <= Real(1e-25));
    CHECK(chk.sandwich);
}

TEST_CASE("riesz sandwich and test polynomial identity")
{
    PrecisionScope ps(256);
    const std::vector<std::int64_t> ells{1, 3, 9, 27, 81};
    for (double al : {0.3, 0.5, 1.0})
        for (int n = 0; n <= 3; ++n) {
            auto r = riesz_measure(std::vector<double>(5, al), ells, n);
            auto c = riesz_check(r);
            CAPTURE(al);
            CAPTURE(n);
            CHECK(c.sandwich);
            CHECK(abs(c.test_l2 - c.upper) <= Real(1e-70));
            CHECK(std::fabs(c.log_integral_closed - c.log_integral_quadrature) <= 1e-10);
            CHECK(c.quadrature_used == (al != 1.0));
        }
    auto r4 = riesz_measure(std::vector<double>(5, 0.5), ells, 4);
    CHECK(r4.N == 121);
    // moments are valid to order 121 and identically zero past the span
    auto c = moments(r4.rho, 125, PrecisionContext{256});
    CHECK(abs(c.values[121]) > Real(0));
    CHECK(abs(c.values[122]) == 0);
}

TEST_CASE("riesz Levinson matches the dense route")
{
    PrecisionScope ps(256);
    auto r = riesz_measure({0.7, 0.4, 0.9}, {1, 3, 10}, 2);
    auto a = szego_en(r.rho, 14, PrecisionContext{256});
    auto b = brute_force_en(r.rho, 14, PrecisionContext{256});
    CHECK(abs(a.e_n_squared - b.e_n_squared) <= Real(1e-50));
}

TEST_CASE("riesz classification and lacunarity")
{
    CHECK(riesz_measure({0.5, 0.5}, {1, 3}, 1).singular);
    CHECK_FALSE(riesz_measure({0.5, 0.5}, {1, 3}, 1, RieszTail{1.0, 1.0}).singular);
    CHECK(riesz_measure({0.5, 0.5}, {1, 3}, 1, RieszTail{1.0, 0.5}).singular);
    CHECK_THROWS_AS(riesz_measure({0.5, 0.5}, {1, 2}, 1), PreconditionError);
    CHECK_THROWS_AS(riesz_measure({0.5}, {1}, 1), PreconditionError);
}

TEST_CASE("superexp arc instances satisfy the metric hypotheses by construction")
{
    PrecisionScope ps(512);
    for (int p = 1; p <= 3; ++p) {
        const int n = 8;
        const Real omega(8 * n);
        auto s = superexp_arc_instance(p, n, omega);
        CHECK(static_cast<int>(s.arcs.size()) == p);
        CHECK(s.arcs.harmonic_sum() <= n / (2 * 64.0));
        // arc densities are doubles, so the mass is 1 to double precision
        CHECK(abs(s.rho.total_mass() - 1) <= Real(1e-15));
        const Real outside = exp(-omega) * (1 - s.arcs.total_length_real() / two_pi());
        CHECK(abs(mass_outside(s.rho, s.arcs) / outside - 1) <= Real(1e-12));
    }
}

TEST_CASE("superexp atomic family decays fast")
{
    PrecisionScope ps(512);
    auto rho = superexp_atomic_measure(16);
    auto prof = en_profile(rho, 10, PrecisionContext{512});
    // e_n^2 <= 4^n rho(atoms past the n-th)
    for (int n = 1; n <= 10; ++n) {
        Real tail = 0;
        auto atoms = rho.all_atoms();
        for (std::size_t j = n; j < atoms.size(); ++j) tail += Real(atoms[j].mass);
        CHECK(prof[n].e_n_squared <= pow(Real(4), n) * tail);
    }
}
