#include "szego/polynomials.hpp"

#include <algorithm>

namespace szego {

using boost::multiprecision::ldexp;

std::vector<Cplx> polynomial_roots(const std::vector<Cplx>& coeffs, int max_iter)
{
    const int bits = current_precision_bits();
    Real big(0);
    for (const auto& c : coeffs) big = rmax(big, abs(c));
    if (big == 0) throw PreconditionError("zero polynomial has no isolated roots");
    const Real negligible = ldexp(Real(1), -bits) * big;

    int hi = static_cast<int>(coeffs.size()) - 1;
    while (hi > 0 && abs(coeffs[hi]) <= negligible) --hi;
    int lo = 0;
    while (lo < hi && abs(coeffs[lo]) <= negligible) ++lo;

    std::vector<Cplx> roots(lo, Cplx(Real(0)));
    const int d = hi - lo;
    if (d == 0) return roots;
    std::vector<Cplx> a(coeffs.begin() + lo, coeffs.begin() + hi + 1);
    std::vector<Cplx> da(d);
    for (int j = 1; j <= d; ++j) da[j - 1] = a[j] * Real(j);

    // start on a circle of the geometric-mean root radius
    Real r = boost::multiprecision::pow(abs(a[0]) / abs(a[d]), Real(1) / Real(d));
    if (!(r > 0)) r = 1;
    std::vector<Cplx> z(d);
    for (int k = 0; k < d; ++k) z[k] = unit(two_pi() * Real(k) / Real(d) + Real(0.4)) * r;

    const Real stop = ldexp(Real(1), -bits + 16);
    auto horner = [](const std::vector<Cplx>& c, const Cplx& x) {
        Cplx acc(Real(0));
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    // running-error bound of Horner: |p(x)| below it is indistinguishable from 0
    const Real round_bound = ldexp(Real(1), -bits + 8);
    auto abs_horner = [&](const Real& rx) {
        Real acc(0);
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * rx + abs(a[i]);
        return acc;
    };
    std::vector<bool> done(d, false);
    for (int it = 0; it < max_iter; ++it) {
        Real worst(0);
        int active = 0;
        for (int k = 0; k < d; ++k) {
            if (done[k]) continue;
            Cplx p = horner(a, z[k]);
            if (norm(p) <= norm(Cplx(abs_horner(abs(z[k])) * round_bound))) {
                done[k] = true;
                continue;
            }
            ++active;
            Cplx dp = horner(da, z[k]);
            Cplx ratio = p / dp;
            Cplx s(Real(0));
            for (int j = 0; j < d; ++j)
                if (j != k) s += Cplx(Real(1)) / (z[k] - z[j]);
            Cplx w = ratio / (Cplx(Real(1)) - ratio * s);
            z[k] -= w;
            Real scale = rmax(Real(1), abs(z[k]));
            worst = rmax(worst, abs(w) / scale);
        }
        if (active == 0 || worst < stop) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
    }
    // clustered roots converge linearly; accept when residuals are tiny
    Real worst(0);
    for (const auto& x : z) worst = rmax(worst, abs(horner(a, x)));
    if (worst > ldexp(Real(1), -bits / 2) * big)
        throw ConvergenceError("root finder did not converge (residual " + to_decimal(worst, 6) + ")");
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace szego
