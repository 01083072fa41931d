#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clx/monomial.hpp"

namespace clx {

// A monomial ideal of a CLRing, stored by its minimal generators in the
// canonical order: degree ascending, descending lex within each degree.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(CLRing ring) : ring_(std::move(ring)) {}
    MonomialIdeal(CLRing ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(CLRing ring) { return MonomialIdeal(std::move(ring)); }
    static MonomialIdeal unit(CLRing ring);

    const CLRing& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
    int maxgendeg() const; // 0 for the zero ideal

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;

    // Degree-j slice of the ideal, descending lex.
    std::vector<Monomial> slice(int j) const;

    // dim_k (R/I)_j
    long long quotient_hf(int j) const;
    // dim_k [I]_j
    long long ideal_hf(int j) const;

    bool operator==(const MonomialIdeal&) const = default;

    std::string str() const; // "(x1*x2, x1*x3^5)" / "(0)" / "(1)"

private:
    CLRing ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal add_gen(const MonomialIdeal& a, const Monomial& m);

// I : x_i  (1-based variable index)
MonomialIdeal colon_var(const MonomialIdeal& a, int i);
// I : x_m^inf, x_m the last variable (requires it free); strips x_m from gens
MonomialIdeal saturate(const MonomialIdeal& a);

// (x_1..x_n)^delta where n = varcount-1 (requires projective ring); delta >= 0
MonomialIdeal irrelevant_power(const CLRing& r, int delta);

// --- predicates ----------------------------------------------------------

// No minimal generator involves the last variable (requires projective ring).
bool is_saturated(const MonomialIdeal& I);

// Closed under x_h -> x_k for k < h, treating annihilated swaps as contained.
bool is_strongly_stable(const MonomialIdeal& I);

// Every graded slice is an initial segment in descending lex, checked through
// maxgendeg()+1.
bool is_lex(const MonomialIdeal& I);

// Saturated, and the image in the ring without the last variable is lex.
bool is_almost_lex(const MonomialIdeal& I);

struct IdealClass {
    bool saturated = false;
    bool strongly_stable = false;
    bool lex = false;
    bool almost_lex = false;
};
IdealClass classify(const MonomialIdeal& I);

// --- ring moves -----------------------------------------------------------

// Image in tilde(ring()); requires no generator to involve the last variable.
MonomialIdeal tilde_image(const MonomialIdeal& I);
// Extension K*R of an ideal K of tilde(r) to r.
MonomialIdeal extend_from_tilde(const MonomialIdeal& K, const CLRing& r);
// Preimage in the ambient polynomial ring: gens of I together with the pure
// powers x_i^{d_i} for each finite d_i.
MonomialIdeal preimage_in_ambient(const MonomialIdeal& I);

// --- decomposition along x_n (next-to-last variable) -----------------------

// I = sum_l x_n^l * (component l), components living in bar(ring()) and
// forming a non-decreasing chain.  When d_n = inf the chain stabilizes at
// index l0 = max x_n-exponent among the generators and `components` has
// l0+1 entries, the last being the stable tail; when d_n = q is finite,
// `components` has exactly q entries.
struct Decomposition {
    CLRing bar;
    std::vector<MonomialIdeal> components;
    const MonomialIdeal& at(int l) const {
        size_t idx = std::min<size_t>(static_cast<size_t>(l), components.size() - 1);
        return components[idx];
    }
};

Decomposition decompose(const MonomialIdeal& I);
// Inverse of decompose (components must be a chain in bar(r)).
MonomialIdeal assemble(const CLRing& r, const std::vector<MonomialIdeal>& components);

} // namespace clx
