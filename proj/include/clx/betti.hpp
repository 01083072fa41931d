#pragma once

#include <map>
#include <string>
#include <vector>

#include "clx/hilbert.hpp"
#include "clx/linalg.hpp"

namespace clx {

struct FieldSpec {
    long long characteristic = 0; // 0 or a prime
};

// Graded Betti numbers.  `quotient_module` distinguishes tables of R/I (with
// beta_{0,0} = 1) from tables of the ideal itself; `over_quotient_ring`
// records whether the base ring is the Clements-Lindstrom quotient or its
// ambient polynomial ring.  Entries with i <= imax and j <= jmax are exact.
struct BettiTable {
    bool quotient_module = true;
    bool over_quotient_ring = false;
    int imax = 0;
    int jmax = 0;
    std::map<std::pair<int, int>, Int> entries;

    void add(int i, int j, const Int& b);
    Int total(int i) const;
    std::vector<Int> totals() const; // index i = 0..imax
    // Ideal-side totals of a quotient-module table: drops homological slot 0.
    std::vector<Int> ideal_totals() const;
    bool operator==(const BettiTable&) const = default;
};

// Table of S/M over the ambient polynomial ring via multidegree-by-multidegree
// simplicial homology, M = preimage of I.  Complete (finite resolution).
// Throws BudgetExceeded beyond 22 preimage generators.
BettiTable betti_ambient(const MonomialIdeal& I, const FieldSpec& f = {});

// Ideal-side table of a strongly stable ideal in a polynomial ring.
BettiTable betti_eliahou_kervaire(const MonomialIdeal& J);

enum class ResolutionBase { Ambient, Quotient };

// Table of R/I (or S/M) by explicit minimal resolution up to (imax, jmax).
BettiTable betti_resolution_oracle(const MonomialIdeal& I, ResolutionBase over,
                                   const FieldSpec& f = {}, int imax = 6, int jmax = -1);

// Total Betti numbers of R/I over R, all degrees in {2, INF}; entries 0..imax.
std::vector<Int> betti_quadratic_recursion(const MonomialIdeal& I, int imax);

// The point of Hilb^p(Proj R) with componentwise-maximal ambient Betti numbers.
// This is the expansive point, except when the last modulus is infinite and the
// expansive point's slot-0 component is not itself extremal in the smaller
// ring; in that case the slot-0 component is replaced by the extremal one
// whenever the swap still yields a strongly stable point with Hilbert
// polynomial p.
MonomialIdeal syzygy_extremal_point(const HilbertPoly& p, const CLRing& r);

struct BoundsReport {
    BettiTable table;      // ambient table of the extremal point
    std::string provenance; // UNCONDITIONAL | PROVED-CI | CONDITIONAL-LPP
};

BoundsReport bounds_report(const HilbertPoly& p, const CLRing& r, const FieldSpec& f = {});

} // namespace clx
