#include "szego/szego_solver.hpp"

#include <algorithm>

namespace szego {

using boost::multiprecision::ldexp;
using boost::multiprecision::sqrt;

// ---------------------------------------------------------------- polynomial

CirclePolynomial::CirclePolynomial(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) coeffs_.push_back(Cplx(Real(0)));
    refresh();
}

void CirclePolynomial::refresh()
{
    dcoeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) dcoeffs_[i] = to_std(coeffs_[i]);
}

CirclePolynomial CirclePolynomial::from_roots(const std::vector<Cplx>& roots)
{
    std::vector<Cplx> c{Cplx(Real(1))};
    for (const auto& r : roots) {
        std::vector<Cplx> next(c.size() + 1, Cplx(Real(0)));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return CirclePolynomial(std::move(c));
}

CirclePolynomial CirclePolynomial::from_unit_roots(const std::vector<Real>& angles)
{
    std::vector<Cplx> roots;
    roots.reserve(angles.size());
    for (const auto& a : angles) roots.push_back(unit(a));
    CirclePolynomial p = from_roots(roots);
    p.unit_roots_ = angles;
    return p;
}

CirclePolynomial CirclePolynomial::from_double(const std::vector<std::complex<double>>& c)
{
    std::vector<Cplx> v;
    v.reserve(c.size());
    for (const auto& x : c) v.push_back(from_std(x));
    return CirclePolynomial(std::move(v));
}

bool CirclePolynomial::monic() const
{
    const Cplx& lead = coeffs_.back();
    return lead.re == 1 && lead.im == 0;
}

Cplx CirclePolynomial::operator()(const Cplx& z) const
{
    Cplx acc(Real(0));
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

Cplx CirclePolynomial::on_circle(const Real& theta) const { return (*this)(unit(theta)); }

std::complex<double> CirclePolynomial::eval(double theta) const
{
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> acc = 0.0;
    for (std::size_t i = dcoeffs_.size(); i-- > 0;) acc = acc * z + dcoeffs_[i];
    return acc;
}

CirclePolynomial CirclePolynomial::operator*(const CirclePolynomial& o) const
{
    std::vector<Cplx> c(coeffs_.size() + o.coeffs_.size() - 1, Cplx(Real(0)));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    CirclePolynomial p(std::move(c));
    if (!unit_roots_.empty() && !o.unit_roots_.empty() && unit_roots_.size() == static_cast<std::size_t>(degree()) &&
        o.unit_roots_.size() == static_cast<std::size_t>(o.degree())) {
        p.unit_roots_ = unit_roots_;
        p.unit_roots_.insert(p.unit_roots_.end(), o.unit_roots_.begin(), o.unit_roots_.end());
    }
    return p;
}

CirclePolynomial CirclePolynomial::rotated(const Real& phi) const
{
    const int n = degree();
    std::vector<Cplx> c(coeffs_.size());
    for (int j = 0; j <= n; ++j) c[j] = coeffs_[j] * unit(Real(n - j) * phi);
    CirclePolynomial p(std::move(c));
    for (const auto& a : unit_roots_) p.unit_roots_.push_back(a + phi);
    return p;
}

// ---------------------------------------------------------------- helpers

Real degeneracy_threshold(const Real& c0, int bits) { return ldexp(Real(1), -bits / 2) * c0; }

std::vector<std::vector<Cplx>> gram_toeplitz(const MomentSequence& c, int n)
{
    if (n > c.order() + 1) throw PreconditionError("gram matrix larger than the available moments");
    std::vector<std::vector<Cplx>> g(n, std::vector<Cplx>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) g[j][k] = c.at(k - j);
    return g;
}

Real l2_norm_squared(const MomentSequence& c, const CirclePolynomial& p)
{
    const auto& a = p.coeffs();
    const int d = p.degree();
    if (d > c.order()) throw PreconditionError("polynomial degree beyond available moments");
    Cplx acc(Real(0));
    for (int j = 0; j <= d; ++j) {
        Cplx row(Real(0));
        for (int k = 0; k <= d; ++k) row += conj(a[k]) * c.at(k - j);
        acc += a[j] * row;
    }
    return acc.re;
}

Real l2_norm_squared(const Measure& rho, const CirclePolynomial& p)
{
    return l2_norm_squared(moments(rho, p.degree()), p);
}

namespace {

void require_moments(const MomentSequence& c, int n)
{
    if (n < 0) throw PreconditionError("degree n must be nonnegative");
    if (c.order() < n) throw PreconditionError("need moments up to order " + std::to_string(n));
    if (!(c.values[0].re > 0)) throw PreconditionError("measure has zero total mass");
}

SzegoResult degenerate_result(int n, const CirclePolynomial& annihilator, int singular, const std::vector<Cplx>& alphas,
                              const Real& c0, int bits)
{
    SzegoResult r;
    r.n = n;
    r.e_n = 0;
    r.e_n_squared = 0;
    std::vector<Cplx> shifted(n - annihilator.degree(), Cplx(Real(0)));
    shifted.insert(shifted.end(), annihilator.coeffs().begin(), annihilator.coeffs().end());
    r.extremal = CirclePolynomial(std::move(shifted));
    r.recursion_coeffs = alphas;
    r.degenerate = true;
    r.first_singular_index = singular;
    r.condition_estimate = c0 / degeneracy_threshold(c0, bits);
    return r;
}

// Gaussian elimination with partial pivoting; returns false on a tiny pivot.
bool solve_dense(std::vector<std::vector<Cplx>> a, std::vector<Cplx> b, std::vector<Cplx>& x, const Real& pivot_floor)
{
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        Real best = norm(a[col][col]);
        for (int r = col + 1; r < n; ++r) {
            Real v = norm(a[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= pivot_floor * pivot_floor) return false;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            Cplx f = a[r][col] / a[col][col];
            if (f.re == 0 && f.im == 0) continue;
            for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Cplx(Real(0)));
    for (int r = n - 1; r >= 0; --r) {
        Cplx s = b[r];
        for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return true;
}

SzegoResult finish(int n, std::vector<Cplx> p, const Real& e2, const Real& c0, int bits)
{
    SzegoResult r;
    r.n = n;
    r.extremal = CirclePolynomial(std::move(p));
    if (e2 < degeneracy_threshold(c0, bits)) {
        r.e_n = 0;
        r.e_n_squared = 0;
        r.degenerate = true;
        r.first_singular_index = n;
        r.condition_estimate = c0 / degeneracy_threshold(c0, bits);
        return r;
    }
    r.e_n_squared = e2;
    r.e_n = sqrt(e2);
    r.condition_estimate = c0 / e2;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- recursion

std::vector<SzegoResult> en_profile(const MomentSequence& c, int n)
{
    require_moments(c, n);
    const int bits = c.precision_bits;
    PrecisionScope scope(bits);
    const Real c0 = c.values[0].re;
    const Real thresh = degeneracy_threshold(c0, bits);

    std::vector<SzegoResult> out;
    std::vector<Cplx> phi{Cplx(Real(1))};
    std::vector<Cplx> alphas;
    Real E = c0;

    SzegoResult r0;
    r0.n = 0;
    r0.e_n_squared = c0;
    r0.e_n = sqrt(c0);
    r0.extremal = CirclePolynomial(phi);
    r0.condition_estimate = 1;
    out.push_back(r0);

    for (int k = 0; k < n; ++k) {
        // gamma = <z Phi_k, 1> / E
        Cplx g(Real(0));
        for (int j = 0; j <= k; ++j) g += phi[j] * conj(c.values[j + 1]);
        g /= E;
        std::vector<Cplx> next(k + 2, Cplx(Real(0)));
        for (int j = 0; j <= k; ++j) next[j + 1] += phi[j];
        for (int j = 0; j <= k; ++j) next[j] -= g * conj(phi[k - j]);
        phi = std::move(next);
        alphas.push_back(conj(g));
        Real E_next = E * (Real(1) - norm(g));
        if (E_next < thresh) {
            CirclePolynomial annihilator(phi);
            for (int m = k + 1; m <= n; ++m) out.push_back(degenerate_result(m, annihilator, k + 1, alphas, c0, bits));
            return out;
        }
        E = E_next;
        SzegoResult r;
        r.n = k + 1;
        r.e_n_squared = E;
        r.e_n = sqrt(E);
        r.extremal = CirclePolynomial(phi);
        r.recursion_coeffs = alphas;
        r.condition_estimate = c0 / E;
        out.push_back(std::move(r));
    }
    return out;
}

SzegoResult szego_en(const MomentSequence& c, int n) { return en_profile(c, n).back(); }

SzegoResult szego_en(const Measure& rho, int n, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    return szego_en(moments(rho, n), n);
}

std::vector<SzegoResult> en_profile(const Measure& rho, int n, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    return en_profile(moments(rho, n), n);
}

// ---------------------------------------------------------------- dense routes

SzegoResult brute_force_en(const MomentSequence& c, int n)
{
    require_moments(c, n);
    const int bits = c.precision_bits;
    PrecisionScope scope(bits);
    const Real c0 = c.values[0].re;
    if (n == 0) return finish(0, {Cplx(Real(1))}, c0, c0, bits);
    // sum_j G_{jk} q_j = -G_{nk},  G_{jk} = c_{k-j}
    std::vector<std::vector<Cplx>> a(n, std::vector<Cplx>(n));
    std::vector<Cplx> b(n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) a[k][j] = c.at(k - j);
        b[k] = -c.at(k - n);
    }
    std::vector<Cplx> q;
    Real floor = ldexp(Real(1), -bits + 8) * c0;
    if (!solve_dense(a, b, q, floor)) {
        SzegoResult r = finish(n, std::vector<Cplx>(n + 1, Cplx(Real(0))), Real(0), c0, bits);
        return r;
    }
    q.push_back(Cplx(Real(1)));
    // <P, P> = <P, z^n> since P is orthogonal to lower powers
    Cplx e(Real(0));
    for (int j = 0; j <= n; ++j) e += q[j] * c.at(n - j);
    return finish(n, std::move(q), e.re, c0, bits);
}

SzegoResult brute_force_en(const Measure& rho, int n, const PrecisionContext& ctx)
{
    PrecisionScope scope(ctx);
    if (!rho.purely_atomic()) return brute_force_en(moments(rho, n), n);

    const int bits = ctx.mantissa_bits;
    // masses kept as Real: weights may lie far below double range
    std::vector<Atom> atoms;
    std::vector<Real> w;
    for (const auto& wc : rho.components) {
        for (const auto& at : std::get<AtomicComponent>(wc.component).atoms) {
            if (at.mass <= 0) continue;
            atoms.push_back(at);
            w.push_back(Real(at.mass) * wc.weight);
        }
    }
    Real c0(0);
    for (const auto& x : w) c0 += x;
    if (!(c0 > 0)) throw PreconditionError("measure has zero total mass");
    if (n == 0) return finish(0, {Cplx(Real(1))}, c0, c0, bits);
    const int M = static_cast<int>(atoms.size());
    if (M <= n) {
        // interpolating polynomial through all atoms annihilates the support
        std::vector<Cplx> roots;
        for (const auto& a : atoms) roots.push_back(a.angle.power(1));
        while (static_cast<int>(roots.size()) < n) roots.push_back(Cplx(Real(0)));
        SzegoResult r = finish(n, CirclePolynomial::from_roots(roots).coeffs(), Real(0), c0, bits);
        r.first_singular_index = M;
        return r;
    }
    // columns 0..n-1 are sqrt(w) lambda^j, column n is the right-hand side sqrt(w) lambda^n
    std::vector<std::vector<Cplx>> A(M, std::vector<Cplx>(n + 1));
    for (int i = 0; i < M; ++i) {
        Real s = sqrt(w[i]);
        Cplx lam = atoms[i].angle.power(1);
        Cplx p(s);
        for (int j = 0; j <= n; ++j) {
            A[i][j] = p;
            p *= lam;
        }
    }
    for (int j = 0; j < n; ++j) {
        Real nx(0);
        for (int i = j; i < M; ++i) nx += norm(A[i][j]);
        nx = sqrt(nx);
        if (nx == 0) continue;
        Real a0 = abs(A[j][j]);
        Cplx phase = a0 > 0 ? A[j][j] / a0 : Cplx(Real(1));
        Cplx alpha = -(phase * nx);
        std::vector<Cplx> v(M - j);
        for (int i = j; i < M; ++i) v[i - j] = A[i][j];
        v[0] -= alpha;
        Real vv(0);
        for (const auto& x : v) vv += norm(x);
        if (vv == 0) continue;
        for (int k = j; k <= n; ++k) {
            Cplx dot(Real(0));
            for (int i = j; i < M; ++i) dot += conj(v[i - j]) * A[i][k];
            Cplx f = dot * (Real(2) / vv);
            for (int i = j; i < M; ++i) A[i][k] -= v[i - j] * f;
        }
    }
    Real e2(0);
    for (int i = n; i < M; ++i) e2 += norm(A[i][n]);
    // R q = -(Q^H b)[0..n)
    std::vector<Cplx> q(n + 1, Cplx(Real(0)));
    q[n] = Cplx(Real(1));
    bool singular = false;
    for (int r = n - 1; r >= 0; --r) {
        Cplx s = -A[r][n];
        for (int k = r + 1; k < n; ++k) s -= A[r][k] * q[k];
        if (norm(A[r][r]) == 0) {
            singular = true;
            break;
        }
        q[r] = s / A[r][r];
    }
    if (singular) return finish(n, std::move(q), Real(0), c0, bits);
    return finish(n, std::move(q), e2, c0, bits);
}

Real toeplitz_determinant(const MomentSequence& c, int size)
{
    if (size == 0) return Real(1);
    auto a = gram_toeplitz(c, size);
    Cplx det(Real(1));
    for (int col = 0; col < size; ++col) {
        int piv = col;
        for (int r = col + 1; r < size; ++r)
            if (norm(a[r][col]) > norm(a[piv][col])) piv = r;
        if (norm(a[piv][col]) == 0) return Real(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < size; ++r) {
            Cplx f = a[r][col] / a[col][col];
            for (int k = col; k < size; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det.re;
}

}  // namespace szego
