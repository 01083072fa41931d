#pragma once

#include <optional>
#include <vector>

#include "clx/errors.hpp"
#include "clx/hilbert.hpp"

namespace clx {

struct EnumerationBudget {
    // Largest generator degree explored; defaults to
    // max(gotzmann_number(p), largest finite d_i) when unset.
    std::optional<int> max_gen_degree;
    // DFS node cutoff; exceeding it throws BudgetExceeded.
    long long max_candidates = 1000000;
};

// All saturated strongly stable ideals I of r with HP(r/I) = p, sorted
// canonically (generator count, then generator sequences).
std::vector<MonomialIdeal> strongly_stable_points(const HilbertPoly& p, const CLRing& r,
                                                  const EnumerationBudget& budget = {});

std::vector<MonomialIdeal> almost_lex_points(const HilbertPoly& p, const CLRing& r,
                                             const EnumerationBudget& budget = {});

} // namespace clx
