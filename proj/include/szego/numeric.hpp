#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace szego {

// Expression templates off so `auto` and temporaries behave like plain values.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrecisionContext {
    int mantissa_bits = 256;
};

// Sets the working precision for Real values created inside the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.mantissa_bits) {}
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

int current_precision_bits();

// pi at the current working precision (cached per precision)
const Real& real_pi();
Real two_pi();

template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o)
    {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const T& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const T& s) { re /= s; im /= s; return *this; }
    Complex& operator/=(const Complex& o)
    {
        T d = o.re * o.re + o.im * o.im;
        T r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex operator-() const { return {-re, -im}; }
};

template <class T> Complex<T> operator+(Complex<T> a, const Complex<T>& b) { return a += b; }
template <class T> Complex<T> operator-(Complex<T> a, const Complex<T>& b) { return a -= b; }
template <class T> Complex<T> operator*(Complex<T> a, const Complex<T>& b) { return a *= b; }
template <class T> Complex<T> operator/(Complex<T> a, const Complex<T>& b) { return a /= b; }
template <class T> Complex<T> operator*(Complex<T> a, const T& s) { return a *= s; }
template <class T> Complex<T> operator*(const T& s, Complex<T> a) { return a *= s; }
template <class T> Complex<T> operator/(Complex<T> a, const T& s) { return a /= s; }

template <class T> Complex<T> conj(const Complex<T>& z) { return {z.re, -z.im}; }
template <class T> T norm(const Complex<T>& z) { return z.re * z.re + z.im * z.im; }

using Cplx = Complex<Real>;

inline Real abs(const Cplx& z) { return boost::multiprecision::sqrt(norm(z)); }

inline Cplx unit(const Real& theta)
{
    return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

inline std::complex<double> to_std(const Cplx& z)
{
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

inline Cplx from_std(const std::complex<double>& z) { return {Real(z.real()), Real(z.imag())}; }

inline const Real& rmax(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& rmin(const Real& a, const Real& b) { return b < a ? b : a; }

inline double to_double(const Real& x) { return x.convert_to<double>(); }

// Natural log of a positive Real as double; works far outside double range.
inline double log_double(const Real& x) { return to_double(boost::multiprecision::log(x)); }

// Round-trippable decimal representation.
std::string to_decimal(const Real& x, int digits = 0);
Real from_decimal(const std::string& s);

}  // namespace szego
