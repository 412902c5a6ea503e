#pragma once

#include "szego/measure.hpp"

#include <complex>
#include <vector>

namespace szego {

// Polynomial with Real complex coefficients, ascending powers.
class CirclePolynomial {
public:
    CirclePolynomial() : coeffs_{Cplx(Real(1))} {}
    explicit CirclePolynomial(std::vector<Cplx> coeffs);

    static CirclePolynomial from_roots(const std::vector<Cplx>& roots);
    static CirclePolynomial from_unit_roots(const std::vector<Real>& angles);
    static CirclePolynomial from_double(const std::vector<std::complex<double>>& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Cplx>& coeffs() const { return coeffs_; }
    bool monic() const;

    Cplx operator()(const Cplx& z) const;
    Cplx on_circle(const Real& theta) const;
    std::complex<double> eval(double theta) const;      // double-precision Horner
    double abs_on_circle(double theta) const { return std::abs(eval(theta)); }

    CirclePolynomial operator*(const CirclePolynomial& o) const;
    CirclePolynomial rotated(const Real& phi) const;     // z -> P(z e^{-i phi}) scaled to stay monic

    // Known unimodular roots (angles), when constructed from them.
    const std::vector<Real>& unit_root_angles() const { return unit_roots_; }

private:
    std::vector<Cplx> coeffs_;
    std::vector<std::complex<double>> dcoeffs_;
    std::vector<Real> unit_roots_;
    void refresh();
};

// Gram matrix entry (j,k) = <z^j, z^k> = c_{k-j}
std::vector<std::vector<Cplx>> gram_toeplitz(const MomentSequence& c, int n);

struct SzegoResult {
    int n = 0;
    Real e_n;
    Real e_n_squared;
    CirclePolynomial extremal;
    std::vector<Cplx> recursion_coeffs;   // alpha_k, k < n (or up to degeneracy)
    bool degenerate = false;
    int first_singular_index = -1;
    Real condition_estimate;              // c_0 / e_n^2
};

// Profile e_0..e_n from a single recursion pass.
std::vector<SzegoResult> en_profile(const MomentSequence& c, int n);
SzegoResult szego_en(const MomentSequence& c, int n);
SzegoResult szego_en(const Measure& rho, int n, const PrecisionContext& ctx = {});
std::vector<SzegoResult> en_profile(const Measure& rho, int n, const PrecisionContext& ctx = {});

// Independent dense route: QR least squares on atoms, normal equations otherwise.
SzegoResult brute_force_en(const Measure& rho, int n, const PrecisionContext& ctx = {});
SzegoResult brute_force_en(const MomentSequence& c, int n);

// det of the Toeplitz section of size `size` (size 0 gives 1)
Real toeplitz_determinant(const MomentSequence& c, int size);

// integral |P|^2 d rho from moments
Real l2_norm_squared(const MomentSequence& c, const CirclePolynomial& p);
Real l2_norm_squared(const Measure& rho, const CirclePolynomial& p);

// residual threshold 2^{-bits/2} c_0
Real degeneracy_threshold(const Real& c0, int bits);

}  // namespace szego
