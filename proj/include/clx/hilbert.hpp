#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clx/ideal.hpp"

namespace clx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A numerical polynomial in one variable z, stored by rational coefficients
// in ascending degree with no trailing zeros.
class HilbertPoly {
public:
    HilbertPoly() = default; // zero
    explicit HilbertPoly(std::vector<Rat> coeffs);
    static HilbertPoly constant(Rat c);
    // C(z + shift, r) as a polynomial in z; r >= 0.
    static HilbertPoly binomial(const Int& shift, int r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    Rat eval(const Int& z) const;
    Int eval_int(const Int& z) const; // throws if the value is not an integer

    // p(z + a)
    HilbertPoly compose_shift(const Int& a) const;

    HilbertPoly operator+(const HilbertPoly& o) const;
    HilbertPoly operator-(const HilbertPoly& o) const;
    HilbertPoly operator*(const Rat& s) const;
    bool operator==(const HilbertPoly&) const = default;

    // "3*z + 5", "1/2*z^2 + 3/2*z + 1", "0"
    std::string str() const;
    static HilbertPoly parse(std::string_view text);

private:
    void normalize();
    std::vector<Rat> c_;
};

// Numerator K(t) of the Hilbert series of R/I over (1-t)^m, m = variable
// count; coefficients ascending in t, no trailing zeros.
std::vector<Int> series_numerator(const MonomialIdeal& I);

HilbertPoly hilbert_polynomial(const MonomialIdeal& I);
inline HilbertPoly ring_hp(const CLRing& r) {
    return hilbert_polynomial(MonomialIdeal::zero(r));
}

// Least j0 >= 0 with HF(R/I, j) = HP(R/I)(j) for every j >= j0.
int hf_hp_threshold(const MonomialIdeal& I);

// p precedes q: q - p is a nonnegative constant.
bool precedes(const HilbertPoly& p, const HilbertPoly& q);
// q - p when it is a constant integer.
std::optional<Int> difference_constant(const HilbertPoly& p, const HilbertPoly& q);

// Length r of the greedy decomposition p(z) = sum_{i=1..r} C(z + a_i - i + 1, a_i)
// with a_1 >= .. >= a_r >= 0; empty when no such decomposition exists.
std::optional<int> gotzmann_number(const HilbertPoly& p);

} // namespace clx
