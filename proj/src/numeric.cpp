#include "szego/numeric.hpp"

#include <map>

namespace szego {

namespace {

thread_local int g_bits = 256;

unsigned digits_for_bits(int bits)
{
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct BitsInit {
    BitsInit() { Real::default_precision(digits_for_bits(g_bits)); }
} g_bits_init;

}  // namespace

PrecisionScope::PrecisionScope(int bits) : saved_(static_cast<unsigned>(g_bits))
{
    if (bits < 64) throw PreconditionError("precision below 64 bits: " + std::to_string(bits));
    g_bits = bits;
    Real::default_precision(digits_for_bits(bits));
}

PrecisionScope::~PrecisionScope()
{
    g_bits = static_cast<int>(saved_);
    Real::default_precision(digits_for_bits(g_bits));
}

int current_precision_bits() { return g_bits; }

const Real& real_pi()
{
    thread_local std::map<int, Real> cache;
    auto it = cache.find(g_bits);
    if (it == cache.end()) {
        Real pi = boost::multiprecision::acos(Real(-1));
        it = cache.emplace(g_bits, pi).first;
    }
    return it->second;
}

Real two_pi() { return 2 * real_pi(); }

std::string to_decimal(const Real& x, int digits)
{
    if (digits <= 0) digits = static_cast<int>(x.precision()) + 2;
    return x.str(digits, std::ios_base::scientific);
}

Real from_decimal(const std::string& s)
{
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw PreconditionError("not a decimal number: '" + s + "'");
    }
}

}  // namespace szego
