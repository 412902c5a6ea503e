#include <doctest.h>

#include "szego/szego_solver.hpp"

#include <Eigen/Dense>

#include <random>

using namespace szego;
using boost::multiprecision::abs;

namespace {

Measure lebesgue()
{
    Measure m;
    m.add(DensityComponent{{{ArcSet::full_circle().arcs()[0], ConstantDensity{1.0}}}});
    return m;
}

Measure roots_of_unity(int k)
{
    AtomicComponent a;
    for (int j = 0; j < k; ++j) a.atoms.push_back({Angle::rational(j, k), 1.0 / k});
    Measure m;
    m.add(a);
    return m;
}

Measure random_mixture(std::mt19937_64& rng, int atoms, int pieces)
{
    std::uniform_real_distribution<double> U(0, 1);
    AtomicComponent a;
    for (int i = 0; i < atoms; ++i) a.atoms.push_back({Angle::from_turns(U(rng)), 0.05 + U(rng)});
    DensityComponent d;
    for (int i = 0; i < pieces; ++i) d.pieces.push_back({make_arc(6.2 * U(rng), 0.1 + 2 * U(rng)), ConstantDensity{0.2 + U(rng)}});
    Measure m;
    if (atoms) m.add(a);
    if (pieces) m.add(d);
    return m;
}

// Independent double-precision oracle: minimize over q directly via least
// squares on a fine trapezoid discretization of the measure.
double oracle_en2_double(const Measure& rho, int n)
{
    std::vector<std::complex<double>> pts;
    std::vector<double> w;
    for (const auto& wc : rho.components) {
        double wt = to_double(wc.weight);
        if (const auto* a = std::get_if<AtomicComponent>(&wc.component)) {
            for (const auto& at : a->atoms) {
                pts.push_back(std::polar(1.0, at.angle.radians_double()));
                w.push_back(wt * at.mass);
            }
        } else if (const auto* d = std::get_if<DensityComponent>(&wc.component)) {
            for (const auto& p : d->pieces) {
                const int G = 4000;
                // Gauss-Legendre would be sharper; midpoint is exact enough for trig degree << G
                for (int i = 0; i < G; ++i) {
                    double t = p.arc.start + (i + 0.5) * p.arc.length / G;
                    pts.push_back(std::polar(1.0, t));
                    w.push_back(wt * density_value(p.family, p.arc, t) * p.arc.length / G / (2 * M_PI));
                }
            }
        }
    }
    const int M = static_cast<int>(pts.size());
    Eigen::MatrixXcd A(M, n);
    Eigen::VectorXcd b(M);
    for (int i = 0; i < M; ++i) {
        double s = std::sqrt(w[i]);
        for (int j = 0; j < n; ++j) A(i, j) = s * std::pow(pts[i], j);
        b(i) = -s * std::pow(pts[i], n);
    }
    if (n == 0) return b.squaredNorm();
    Eigen::VectorXcd q = A.colPivHouseholderQr().solve(b);
    return (A * q - b).squaredNorm();
}

}  // namespace

TEST_CASE("lebesgue measure has e_n = 1 with extremal z^n")
{
    auto prof = en_profile(lebesgue(), 6);
    for (const auto& r : prof) {
        CHECK(abs(r.e_n - 1) < Real(1e-60));
        CHECK(r.extremal.monic());
        for (int j = 0; j < r.n; ++j) CHECK(abs(r.extremal.coeffs()[j]) < Real(1e-60));
    }
}

TEST_CASE("roots of unity: flat profile then degeneracy")
{
    auto prof = en_profile(roots_of_unity(8), 8);
    for (int s = 0; s < 8; ++s) {
        CHECK_FALSE(prof[s].degenerate);
        CHECK(abs(prof[s].e_n_squared - 1) < Real(1e-60));
    }
    CHECK(prof[8].degenerate);
    CHECK(prof[8].first_singular_index == 8);
    CHECK(prof[8].e_n == 0);
    // the annihilator is z^8 - 1
    CHECK(abs(prof[8].extremal.coeffs()[0] + Cplx(Real(1))) < Real(1e-60));
}

TEST_CASE("brute force examples")
{
    AtomicComponent pm;
    pm.atoms = {{Angle::rational(0, 1), 0.5}, {Angle::rational(1, 2), 0.5}};
    Measure rho;
    rho.add(pm);
    auto r = brute_force_en(rho, 1);
    CHECK(abs(r.e_n_squared - 1) < Real(1e-60));
    CHECK(abs(szego_en(rho, 1).e_n_squared - 1) < Real(1e-60));

    Measure single;
    single.add(AtomicComponent{{{Angle::rational(0, 1), 1.0}}});
    CHECK(brute_force_en(single, 1).degenerate);
    CHECK(brute_force_en(single, 1).e_n == 0);
    CHECK(szego_en(single, 1).degenerate);
}

TEST_CASE("riesz single factor gives 3/4")
{
    Measure rho;
    rho.add(RieszProductComponent{{1.0}, {1}});
    auto r = szego_en(rho, 1);
    CHECK(abs(r.e_n_squared - Real(0.75)) < Real(1e-60));
}

TEST_CASE("recursion agrees with dense routes and the double oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        int atoms = trial % 4 == 0 ? 0 : 3 + static_cast<int>(rng() % 10);
        int pieces = trial % 3 == 0 ? 0 : 1 + static_cast<int>(rng() % 2);
        if (atoms == 0 && pieces == 0) pieces = 1;
        Measure rho = random_mixture(rng, atoms, pieces);
        PrecisionContext ctx{256};
        PrecisionScope scope(ctx);
        int nmax = 10;
        auto c = moments(rho, nmax);
        auto prof = en_profile(c, nmax);
        Real prev = prof[0].e_n_squared;
        for (int n = 0; n <= nmax; ++n) {
            const auto& r = prof[n];
            auto bf = brute_force_en(rho, n, ctx);
            CHECK(r.degenerate == bf.degenerate);
            CHECK(abs(r.e_n - bf.e_n) < Real(1e-20) * prof[0].e_n);
            CHECK(r.e_n_squared <= prev);
            prev = r.e_n_squared;
            if (r.degenerate) continue;
            // quadratic form, Verblunsky product, determinant ratio
            CHECK(abs(l2_norm_squared(c, r.extremal) - r.e_n_squared) < Real(1e-50) * c.values[0].re);
            Real prod = c.values[0].re;
            for (const auto& a : r.recursion_coeffs) {
                CHECK(norm(a) <= 1);
                prod *= Real(1) - norm(a);
            }
            CHECK(abs(prod - r.e_n_squared) < Real(1e-50) * c.values[0].re);
            Real dn = toeplitz_determinant(c, n), dn1 = toeplitz_determinant(c, n + 1);
            CHECK(abs(r.e_n_squared * dn - dn1) <= Real(1e-40) * dn * c.values[0].re);
            if (n <= 6) {
                double o = oracle_en2_double(rho, n);
                CHECK(std::fabs(to_double(r.e_n_squared) - o) < 1e-6 * to_double(c.values[0].re));
            }
        }
    }
}

TEST_CASE("precision is preserved from the moments")
{
    PrecisionScope s(512);
    auto c = moments(roots_of_unity(5), 4);
    auto r = szego_en(c, 4);
    CHECK(r.e_n_squared.precision() >= 150);
}

TEST_CASE("extended precision resolves tiny e_n")
{
    // e_1^2 for two atoms at distance d with masses 1/2 is d^2/4 style tiny
    PrecisionScope s(512);
    AtomicComponent a;
    a.atoms = {{Angle::from_radians(0.0), 0.5}, {Angle::from_radians(1e-30), 0.5}};
    Measure rho;
    rho.add(a);
    auto r = szego_en(rho, 1, {512});
    // exact: |e^{i d} - 1|^2 / 4
    Real d = a.atoms[1].angle.radians();
    Real chord2 = 4 * boost::multiprecision::pow(boost::multiprecision::sin(d / 2), 2);
    CHECK(abs(r.e_n_squared - chord2 / 4) / (chord2 / 4) < Real(1e-40));
    auto bf = brute_force_en(rho, 1, {512});
    CHECK(abs(bf.e_n_squared - chord2 / 4) / (chord2 / 4) < Real(1e-40));
}
