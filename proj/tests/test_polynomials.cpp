#include <doctest.h>

#include "szego/polynomials.hpp"

#include <cmath>
#include <random>

using namespace szego;

namespace {

constexpr double kPi = 3.14159265358979323846;

double cabs(const Cplx& z) { return std::abs(to_std(z)); }

}  // namespace

TEST_CASE("halasz polynomial of degree 1 is 1 - z")
{
    auto H = halasz_polynomial(1);
    REQUIRE(H.poly.degree() == 1);
    CHECK(H.poly.coeffs()[0].re == 1);
    CHECK(H.poly.coeffs()[1].re == -1);
    CHECK(H.sup_norm == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("halasz polynomials stay under 1 + 2/d")
{
    for (int d : {2, 3, 4, 8, 16, 32}) {
        CAPTURE(d);
        auto H = halasz_polynomial(d);
        CHECK(H.poly.degree() <= d);
        CHECK(cabs(H.poly(Cplx(Real(0))) - Cplx(Real(1))) <= 1e-10);
        CHECK(cabs(H.poly(Cplx(Real(1)))) <= 1e-10);
        CHECK(H.sup_norm <= 1 + 2.0 / d + 1e-6);
        // a finer grid cannot reveal a much larger value
        CHECK(grid_sup(H.poly, 1 << 16) <= 1 + 2.0 / d + 1e-6);
    }
    CHECK(halasz_polynomial(2).sup_norm <= 2.0);
}

TEST_CASE("halasz product examples")
{
    auto single = halasz_product({0.0}, 2);
    CHECK(single.d == 2);
    CHECK(cabs(single.poly(Cplx(Real(1)))) <= 1e-10);

    auto anti = halasz_product({0.0, kPi}, 8);
    CHECK(anti.poly.degree() <= 8);
    CHECK(anti.sup_norm <= std::exp(2.0) * (1 + 1e-6));
    CHECK(cabs(anti.poly(Cplx(Real(0))) - Cplx(Real(1))) <= 1e-10);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0, 2 * kPi);
    std::vector<double> pts{U(rng), U(rng), U(rng)};
    auto P = halasz_product(pts, 30);
    CHECK(P.poly.degree() <= 30);
    CHECK(P.max_abs_at_points <= 1e-9);
    CHECK(P.sup_norm <= std::exp(4.0 * 9 / 30) * (1 + 1e-6));

    CHECK_THROWS_AS(halasz_product({0.0, 1.0, 2.0}, 5), PreconditionError);
}

TEST_CASE("concentrated kernel")
{
    auto q = concentrated_kernel({64, 0.5, 1 << 14});
    CHECK(q.coeffs[0] == 1.0);
    CHECK(q.coeffs.size() == 64);
    // direct quadrature at two resolutions
    auto l1 = [&](int G) {
        double s = 0;
        for (int i = 0; i < G; ++i) s += std::fabs(q.value(-kPi + 2 * kPi * i / G));
        return s / G;
    };
    double a = l1(1 << 13), b = l1(1 << 16);
    CHECK(std::isfinite(a));
    CHECK(std::fabs(a - b) < 1e-5 * b);
    CHECK(q.l1_norm / (2 * kPi) == doctest::Approx(b).epsilon(1e-5));
    CHECK(q.l1_norm <= q.constant);
    CHECK(q.tails[32] < q.tails[1]);
    for (std::size_t s = 1; s + 1 < q.tails.size(); ++s) CHECK(q.tails[s + 1] <= q.tails[s] + 1e-15);
    // qhat decreasing toward the edge, and even: mean of q equals qhat(0)
    CHECK(std::fabs(q.coeffs.back()) < 1e-3);

    CHECK_THROWS_AS(concentrated_kernel({3, 0.5}), PreconditionError);
    CHECK_THROWS_AS(concentrated_kernel({64, 1.0}), PreconditionError);
}

TEST_CASE("outer function properties")
{
    // single arc: m(E + eps) = 1/4
    ArcSet E({Arc{1.0, kPi / 2 - 0.2}});
    auto F = outer_function(E, 0.1);
    CHECK(F.m_expanded == doctest::Approx(0.25).epsilon(0.01));
    CHECK(F.sup_abs <= 1 + 1e-9);
    CHECK(F.sup_on_expanded == doctest::Approx(std::exp(-1 / F.m_expanded)).epsilon(1e-9));
    CHECK(std::abs(F.f0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));

    ArcSet three({Arc{0.2, 0.05}, Arc{2.0, 0.3}, Arc{4.0, 0.01}});
    auto G = outer_function(three, 0.02);
    CHECK(std::abs(G.f0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    CHECK(G.sup_abs <= 1 + 1e-9);

    CHECK_THROWS_AS(outer_function(ArcSet(), 0.1), PreconditionError);
    CHECK_THROWS_AS(outer_function(ArcSet({Arc{0.0, 1e-5}}), 0.0), PreconditionError);
}

TEST_CASE("denisov polynomial")
{
    const int k = 3;
    ArcSet E({Arc{0.5, 1e-4}, Arc{2.5, 1e-4}, Arc{4.5, 1e-4}});
    const double eps = 1.0 / (k * std::fabs(std::log(1e-4)));
    const int n = 512;
    auto D = denisov_polynomial(E, eps, n, 0.5);
    CHECK(D.highest_degree < n);
    CHECK(std::abs(D.p0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    CHECK(D.sup_circle <= D.kernel_constant);
    CHECK(D.sup_on_E <= D.bound_direct);
    CHECK(D.sup_on_E <= D.bound_two_exp);
    CHECK(D.sup_on_E < std::abs(D.p0));

    CHECK_THROWS_AS(denisov_polynomial(E, 0.001, 100, 0.5), PreconditionError);
}

TEST_CASE("vanishing power polynomials")
{
    auto p = vanishing_power_polynomial({Real(0)}, {0});
    REQUIRE(p.degree() == 1);
    CHECK(p.coeffs()[0].re == -1);
    CHECK(p.coeffs()[1].re == 1);

    auto q = vanishing_power_polynomial({Real(0), real_pi()}, {1, 1});
    REQUIRE(q.degree() == 4);
    // (z^2 - 1)^2 = 1 - 2 z^2 + z^4
    const double expect[5] = {1, 0, -2, 0, 1};
    for (int j = 0; j <= 4; ++j) CHECK(cabs(q.coeffs()[j] - Cplx(Real(expect[j]))) < 1e-30);

    // one center with m = 2 inside a degree-6 product
    std::vector<Real> c{Real(0), Real(2), Real(4)};
    std::vector<int> m{2, 1, 0};
    double L = std::exp(-3.0);
    CHECK(vanishing_power_arc_excess(c, m, {L, L, L}) <= 0);
    auto P = vanishing_power_polynomial(c, m);
    CHECK(P.degree() == 6);
    double worst = 0;
    for (int i = 0; i <= 2000; ++i) worst = std::max(worst, P.abs_on_circle(L * (i / 2000.0 - 0.5)));
    CHECK(worst <= std::pow(2.0, 6) * std::exp(-9.0));
    CHECK_THROWS_AS(vanishing_power_polynomial(c, m, 5), PreconditionError);
}

TEST_CASE("monic polynomial small off an arc")
{
    auto one = small_off_arc_monic(1, Arc{-0.3, 0.6});
    CHECK(one.poly.monic());
    CHECK(cabs(one.poly.coeffs()[0]) <= 1 + 1e-15);
    CHECK(one.sup_off <= 2);

    auto r = small_off_arc_monic(16, Arc{-kPi / 8, kPi / 4});
    CHECK(r.poly.monic());
    CHECK(r.poly.degree() == 16);
    CHECK(r.sup_off <= 2 * std::pow(std::cos(kPi / 16), 16) * (1 + 1e-6));
    CHECK(r.sup_off >= r.capacity_floor * (1 - 1e-6));
    // no monic polynomial reaches the literal 2 cos^n(|J|/2) form
    CHECK(r.literal_target < r.capacity_floor);
    // Remez-type growth on J stays moderate
    CHECK(r.sup_on >= r.sup_off);
    CHECK(std::isfinite(r.growth_constant));
}

TEST_CASE("sublevel arcs")
{
    PrecisionScope s(128);
    auto zn = CirclePolynomial::from_roots({Cplx(Real(0)), Cplx(Real(0)), Cplx(Real(0))});
    auto r0 = sublevel_arcs(zn, Real(0.5));
    CHECK(r0.empty);
    CHECK(r0.arcs.empty());
    CHECK(sublevel_arcs(zn, Real(2)).full_circle);

    auto p1 = CirclePolynomial({Cplx(Real(-1)), Cplx(Real(1))});
    auto r1 = sublevel_arcs(p1, Real(1));
    REQUIRE(r1.arcs.size() == 1);
    const Arc& a = r1.arcs.arcs()[0];
    CHECK(a.length == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
    CHECK(std::fabs(angle_diff(a.start, -kPi / 3)) < 1e-10);

    auto p2 = CirclePolynomial({Cplx(Real(-1)), Cplx(Real(0)), Cplx(Real(1))});
    auto r2 = sublevel_arcs(p2, Real(1));
    REQUIRE(r2.arcs.size() == 2);
    for (const auto& arc : r2.arcs.arcs()) CHECK(arc.length == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(r2.arcs.contains(0.0));
    CHECK(r2.arcs.contains(kPi));
    CHECK_FALSE(r2.arcs.contains(kPi / 2));

    CHECK_THROWS_AS(sublevel_arcs(p1, Real(0)), PreconditionError);
}

TEST_CASE("sublevel arcs agree with a dense scan")
{
    PrecisionScope s(128);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> N(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::complex<double>> c(7);
        for (auto& x : c) x = {N(rng), N(rng)};
        auto P = CirclePolynomial::from_double(c);
        double tau = 0.5 * grid_sup(P, 4096);
        auto r = sublevel_arcs(P, Real(tau));
        CHECK(r.arcs.size() <= 6);
        int bad = 0;
        for (int i = 0; i < 4096; ++i) {
            double t = 2 * kPi * (i + 0.37) / 4096;
            double v = P.abs_on_circle(t);
            if (std::fabs(v - tau) < 1e-6 * tau) continue;
            if ((v <= tau) != r.arcs.contains(t)) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("cartan cover check")
{
    PrecisionScope s(128);
    auto zn = CirclePolynomial::from_roots(std::vector<Cplx>(5, Cplx(Real(0))));
    auto c0 = cartan_cover_check(zn, 0.3);
    CHECK(c0.cover.empty());
    CHECK(c0.pass);

    const int n = 6;
    auto p = CirclePolynomial::from_roots(std::vector<Cplx>(n, Cplx(Real(1))));
    auto c1 = cartan_cover_check(p, 0.1);
    REQUIRE(c1.cover.size() == 1);
    // 2 |sin(t/2)| < 0.1 on the arc
    CHECK(c1.radii_sum == doctest::Approx(2 * std::asin(0.05)).epsilon(1e-9));
    CHECK(c1.radii_sum <= 2 * std::exp(1.0) * 0.1);
    CHECK(c1.pass);

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    int passes = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Cplx> roots;
        for (int j = 0; j < 8; ++j) roots.push_back(Cplx(Real(U(rng)), Real(U(rng))));
        auto c = cartan_cover_check(CirclePolynomial::from_roots(roots), 0.05);
        passes += c.pass;
    }
    CHECK(passes == 100);
    CHECK_THROWS_AS(cartan_cover_check(CirclePolynomial({Cplx(Real(1)), Cplx(Real(2))}), 0.1), PreconditionError);
}
