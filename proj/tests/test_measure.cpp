#include <doctest.h>

#include "szego/measure.hpp"

#include <complex>
#include <random>

using namespace szego;

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

std::complex<long double> direct_atomic_moment(const std::vector<std::pair<long double, long double>>& atoms, int m)
{
    std::complex<long double> s = 0;
    for (auto [turns, mass] : atoms) s += mass * std::polar(1.0L, -m * kTwoPiL * turns);
    return s;
}

// composite Simpson on [a, a+len] of f(t) exp(-i m t) / 2pi
template <class F>
std::complex<long double> simpson_moment(F f, long double a, long double len, int m, int panels = 20000)
{
    long double h = len / panels;
    std::complex<long double> s = 0;
    for (int i = 0; i <= panels; ++i) {
        long double t = a + i * h;
        long double w = (i == 0 || i == panels) ? 1 : (i % 2 ? 4 : 2);
        s += w * f(t) * std::polar(1.0L, -m * t);
    }
    return s * h / 3.0L / kTwoPiL;
}

double cdist(const Cplx& a, std::complex<long double> b)
{
    return std::abs(std::complex<long double>(to_double(a.re), to_double(a.im)) - b);
}

}  // namespace

TEST_CASE("dyadic turns are kept as exact rationals")
{
    Angle a = Angle::from_turns(0.125);
    CHECK(a.exact());
    CHECK(a.num == 1);
    CHECK(a.den == 8);
    Angle b = Angle::from_turns(0.1);
    CHECK_FALSE(b.exact());
    Angle c = Angle::rational(-3, 12);
    CHECK(c.num == 3);
    CHECK(c.den == 4);
    Cplx p = c.power(1);
    CHECK(p.re == 0);
    CHECK(p.im == -1);
}

TEST_CASE("atomic moments match a direct sum")
{
    PrecisionScope s(128);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0, 1);
    std::vector<std::pair<long double, long double>> raw;
    AtomicComponent a;
    for (int i = 0; i < 12; ++i) {
        double t = U(rng), m = U(rng);
        a.atoms.push_back({Angle::from_turns(t), m});
        raw.push_back({t, m});
    }
    Measure rho;
    rho.add(a);
    auto c = moments(rho, 20);
    for (int m = 0; m <= 20; ++m) CHECK(cdist(c.values[m], direct_atomic_moment(raw, m)) < 1e-15);
}

TEST_CASE("uniform mass on the 4th roots")
{
    AtomicComponent a;
    for (int j = 0; j < 4; ++j) a.atoms.push_back({Angle::rational(j, 4), 0.25});
    Measure rho;
    rho.add(a);
    auto c = moments(rho, 8);
    CHECK(c.values[0].re == 1);
    CHECK(abs(c.values[1]) == 0);
    CHECK(abs(c.values[2]) == 0);
    CHECK(c.values[4].re == 1);
    CHECK(invariance_order(c, 4, 1e-30) == 4);
    CHECK(invariance_order(c, 8, 1e-30) == 4);
}

TEST_CASE("closed-form density moments agree with Simpson quadrature")
{
    PrecisionScope s(128);
    const double a0 = 0.7, len = 1.9;
    DensityComponent d;
    d.pieces.push_back({make_arc(a0, len), ConstantDensity{2.5}});
    d.pieces.push_back({make_arc(3.0, 0.8), ExpLinearDensity{0.3, -1.7}});
    d.pieces.push_back({make_arc(4.5, 1.2), CosineDensity{1.0, 0.6, 3}});
    d.pieces.push_back({make_arc(5.9, 0.3), ReciprocalExpDensity{0.1, 1.0, -1.0, 0.0}});
    Measure rho;
    rho.add(d, Real(0.5));
    auto c = moments(rho, 12, 1e-13);
    for (int m = 0; m <= 12; ++m) {
        std::complex<long double> ref = 0;
        ref += simpson_moment([](long double) { return 2.5L; }, a0, len, m);
        ref += simpson_moment([](long double t) { return std::exp(0.3L - 1.7L * (t - 3.0L)); }, 3.0L, 0.8L, m);
        ref += simpson_moment([](long double t) { return 1.0L + 0.6L * std::cos(3 * t); }, 4.5L, 1.2L, m);
        ref += simpson_moment(
            [](long double t) {
                long double dd = std::fabs(std::remainder(t, kTwoPiL));
                return 0.1L + std::exp(-1.0L / dd);
            },
            5.9L, 0.3L, m);
        CHECK(cdist(c.values[m], ref * 0.5L) < 1e-12);
    }
}

TEST_CASE("moments of a tiny arc keep full relative precision")
{
    PrecisionScope s(256);
    const double L = 1e-21, start = 1.25;
    DensityComponent d;
    d.pieces.push_back({Arc{start, L}, ConstantDensity{1.0}});
    Measure rho;
    rho.add(d);
    auto c = moments(rho, 5);
    for (int m = 0; m <= 5; ++m) {
        // (L/2pi) e^{-i m s} (1 - i m L / 2 - (mL)^2/6 + ...)
        Cplx lead = unit(-Real(m) * Real(start)) * (Real(L) / two_pi());
        Cplx corr = lead * Cplx(Real(1) - Real(m * m) * Real(L) * Real(L) / 6, -Real(m) * Real(L) / 2);
        CHECK(abs(c.values[m] - corr) / abs(lead) < Real(1e-55));
    }
}

TEST_CASE("greedy signed representation")
{
    std::vector<std::int64_t> ells{1, 3, 9};
    auto e4 = greedy_signed_representation(4, ells);
    REQUIRE(e4);
    CHECK(*e4 == std::vector<int>{1, 1, 0});
    auto e2 = greedy_signed_representation(2, ells);
    REQUIRE(e2);
    CHECK(*e2 == std::vector<int>{-1, 1, 0});
    CHECK_FALSE(greedy_signed_representation(14, ells));
    CHECK_THROWS_AS(greedy_signed_representation(1, {1, 2}), PreconditionError);
}

TEST_CASE("greedy representation agrees with exhaustive search")
{
    std::vector<std::int64_t> ells{2, 7, 21, 70};
    std::int64_t span = 2 + 7 + 21 + 70;
    for (std::int64_t m = -span - 3; m <= span + 3; ++m) {
        int found = 0;
        std::vector<int> hit;
        for (int code = 0; code < 81; ++code) {
            int c = code;
            std::vector<int> e(4);
            std::int64_t sum = 0;
            for (int j = 0; j < 4; ++j) {
                e[j] = c % 3 - 1;
                c /= 3;
                sum += e[j] * ells[j];
            }
            if (sum == m) {
                ++found;
                hit = e;
            }
        }
        auto g = greedy_signed_representation(m, ells);
        CHECK(found <= 1);
        CHECK(static_cast<bool>(g) == (found == 1));
        if (g && found == 1) CHECK(*g == hit);
    }
}

TEST_CASE("riesz moments match trapezoid sums of the product")
{
    RieszProductComponent r{{0.3, 0.8, 1.0}, {1, 4, 13}};
    Measure rho;
    rho.add(r);
    auto c = moments(rho, 18);
    const int G = 256;
    for (int m = 0; m <= 18; ++m) {
        std::complex<long double> s = 0;
        for (int i = 0; i < G; ++i) {
            long double t = kTwoPiL * i / G;
            long double v = (1 + 0.3L * std::cos(t)) * (1 + 0.8L * std::cos(4 * t)) * (1 + std::cos(13 * t));
            s += v * std::polar(1.0L, -m * t);
        }
        CHECK(cdist(c.values[m], s / static_cast<long double>(G)) < 1e-15);
    }
    CHECK_THROWS_AS(riesz_moments(r, 19), PreconditionError);
    CHECK(abs(moments(rho, 20).values[19]) == 0);
}

TEST_CASE("riesz single factor moments")
{
    RieszProductComponent r{{1.0}, {1}};
    Measure rho;
    rho.add(r);
    auto c = moments(rho, 1);
    CHECK(c.values[0].re == 1);
    CHECK(c.values[1].re == Real(0.5));
}

TEST_CASE("invariance order")
{
    Measure leb;
    leb.add(DensityComponent{{{ArcSet::full_circle().arcs()[0], ConstantDensity{1.0}}}});
    auto c = moments(leb, 12);
    CHECK(invariance_order(c, 6, 1e-30) == 6);

    AtomicComponent a;
    for (int j = 0; j < 6; ++j) a.atoms.push_back({Angle::rational(j, 6), 1.0 / 6});
    a.atoms.push_back({Angle::rational(1, 4), 0.01});
    Measure rho;
    rho.add(a);
    CHECK(invariance_order(moments(rho, 12), 6, 1e-20) == 1);
}

TEST_CASE("mass outside arcs is computed without cancellation")
{
    PrecisionScope s(256);
    Real tiny = boost::multiprecision::exp(Real(-300));
    Measure rho;
    rho.add(DensityComponent{{{Arc{2.0, 1e-9}, ConstantDensity{1.0}}}});
    rho.add(DensityComponent{{{ArcSet::full_circle().arcs()[0], ConstantDensity{1.0}}}}, tiny);
    rho.add(AtomicComponent{{{Angle::from_radians(2.0 + 5e-10), 3.0}}});
    ArcSet E({Arc{2.0, 1e-9}});
    Real out = mass_outside(rho, E);
    Real expect = tiny * (two_pi() - Real(1e-9)) / two_pi();
    CHECK(boost::multiprecision::abs(out - expect) / expect < Real(1e-60));
    CHECK(mass_outside(rho, ArcSet::full_circle()) == 0);
}

TEST_CASE("arc sets merge overlaps including across zero")
{
    ArcSet s({Arc{6.0, 0.5}, Arc{0.1, 0.2}, Arc{1.0, 0.5}, Arc{1.2, 0.1}});
    REQUIRE(s.size() == 2);
    CHECK(s.arcs()[0].start == doctest::Approx(1.0));
    CHECK(s.arcs()[0].length == doctest::Approx(0.5));
    CHECK(s.arcs()[1].start == doctest::Approx(6.0));
    CHECK(s.arcs()[1].length == doctest::Approx(0.5 + 0.2 + (0.1 - (6.5 - 6.283185307179586))));
    CHECK(s.contains(0.05));
    CHECK_FALSE(s.contains(0.5));
    CHECK(ArcSet({Arc{0.0, 3.0}}).expanded(2.0).is_full_circle());
}

TEST_CASE("measure JSON round trip and diagnostics")
{
    std::string text = R"({
  "total_mass": 1.5,
  "components": [
    {"kind": "atomic", "weight": 0.5, "atoms": [["1/8", 1.0], [0.25, 1.0]]},
    {"kind": "density", "weight": 1, "pieces": [{"start": 0, "length": 1, "family": "constant", "value": 0.5}]},
    {"kind": "riesz", "weight": 0.0, "alphas": [1.0, 0.5], "ells": [1, 3]}
  ]
})";
    Measure rho = parse_measure_json(text);
    CHECK(rho.components.size() == 3);
    CHECK(boost::multiprecision::abs(rho.total_mass() - Real(1.5)) < Real(1e-30));
    Measure again = parse_measure_json(measure_to_json(rho));
    auto c1 = moments(rho, 5), c2 = moments(again, 5);
    for (int m = 0; m <= 5; ++m) CHECK(abs(c1.values[m] - c2.values[m]) < Real(1e-30));

    try {
        parse_measure_json("{\n  \"components\": [\n  }");
        FAIL("expected a parse error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_measure_json(R"({"components":[{"kind":"riesz","alphas":[1,1],"ells":[3,8]}]})");
        FAIL("expected a lacunarity error");
    } catch (const PreconditionError& e) {
        std::string msg = e.what();
        CHECK(msg.find("components[0].ells") != std::string::npos);
        CHECK(msg.find("3, 8") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_measure_json(R"({"total_mass": 2, "components":[{"kind":"atomic","atoms":[[0,1]]}]})"),
                    PreconditionError);
}
