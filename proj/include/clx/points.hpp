#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clx/errors.hpp"
#include "clx/hilbert.hpp"

namespace clx {

// One link of a generator-replacement chain: `ideal` is the current member,
// `replaced` the generator of the previous member that was replaced to reach
// it (absent for the first member).
struct ChainStep {
    MonomialIdeal ideal;
    std::optional<Monomial> replaced;
};

struct Chain {
    std::vector<ChainStep> steps; // steps.front() = starting ideal, back() = the point
    const MonomialIdeal& point() const { return steps.back().ideal; }
    int length() const { return static_cast<int>(steps.size()) - 1; }
};

enum class SelectionRule {
    Lex, // lex-min generator of the maximal occupied degree
    Exp  // opp-min among the lex-min generators of each occupied degree
};

// Throws DomainError when p is not the Hilbert polynomial of any point of
// Hilb(Proj r) (c not a nonnegative constant integer, or a chain step fails
// to raise the quotient Hilbert polynomial by exactly 1).
Chain point_chain(const HilbertPoly& p, const CLRing& r, SelectionRule rule);

inline Chain lex_chain(const HilbertPoly& p, const CLRing& r) {
    return point_chain(p, r, SelectionRule::Lex);
}
inline Chain exp_chain(const HilbertPoly& p, const CLRing& r) {
    return point_chain(p, r, SelectionRule::Exp);
}
MonomialIdeal lex_point(const HilbertPoly& p, const CLRing& r);
MonomialIdeal exp_point(const HilbertPoly& p, const CLRing& r);

bool hilb_nonempty(const HilbertPoly& p, const CLRing& r);

// I saturated; true iff I is the expansive point for its Hilbert polynomial.
bool is_expansive(const MonomialIdeal& I);

// --- axiom checks ----------------------------------------------------------

struct AxiomResult {
    std::string axiom; // "A1".."A7"
    bool pass = false;
    std::vector<std::string> failures; // deterministic order
};

// which in 1..7.  A3 uses `offsets` (constant bumps b >= 1 of p, skipped when
// the bumped scheme is empty); A6/A7 compare against `witnesses`, which must
// be strongly stable points with quotient Hilbert polynomial p.
AxiomResult check_axiom(int which, const HilbertPoly& p, const CLRing& r,
                        const std::vector<MonomialIdeal>& witnesses = {},
                        const std::vector<int>& offsets = {1, 2, 3});

std::vector<AxiomResult> check_all_axioms(const HilbertPoly& p, const CLRing& r,
                                          const std::vector<MonomialIdeal>& witnesses = {},
                                          const std::vector<int>& offsets = {1, 2, 3});

// HP(Exp(p)+(x_n^h)) precedes HP(J+(x_n^h)) (both ideal-side).
bool hyperplane_check(const HilbertPoly& p, const CLRing& r, const MonomialIdeal& J, int h);

// Every degree-1 generator of Exp(p) lies in J.
bool linear_forms_check(const HilbertPoly& p, const CLRing& r, const MonomialIdeal& J);

// Classification of when the lex point and the expansive point coincide,
// by the length of the replacement chain: CASE1 = the degenerate member
// already is the point, CASE2/CASE3 = one/two replacements through
// single-degree members, CASE4 = three or more.  NONE when the points differ.
enum class LexExpCase { CASE1, CASE2, CASE3, CASE4, NONE };
LexExpCase lex_eq_exp_case(const HilbertPoly& p, const CLRing& r);
std::string to_string(LexExpCase c);

// Closed form of the expansive point for a constant polynomial c.
MonomialIdeal exp_zero_dimensional(const Int& c, const CLRing& r);

} // namespace clx
