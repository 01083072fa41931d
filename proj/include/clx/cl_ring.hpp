#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clx/ext_nat.hpp"

namespace clx {

// A Clements-Lindstrom ring k[x_1..x_m]/(x_1^{d_1},..,x_m^{d_m}) described by
// its degree sequence d_1 <= .. <= d_m, where d_i = inf means the power is
// absent.  Finite degrees must be >= 2, so the infinite entries form a suffix.
//
// The default-constructed ring has zero variables and stands for the field k;
// it only ever appears as the bottom of the tilde recursion.
class CLRing {
public:
    CLRing() = default;
    explicit CLRing(std::vector<ExtNat> degrees);

    int varcount() const { return static_cast<int>(degrees_.size()); }
    const std::vector<ExtNat>& degrees() const { return degrees_; }

    // 1-based, matching x_1..x_m.
    ExtNat degree_bound(int i) const { return degrees_.at(static_cast<size_t>(i - 1)); }

    // Number of finite entries (the codimension of the defining intersection).
    int finite_count() const;

    // d_m = inf, i.e. Proj is nonempty and dim > 0.
    bool projective() const { return varcount() > 0 && degrees_.back().is_inf(); }
    bool artinian() const { return !projective(); }

    // Drop x_n (the next-to-last variable slot), keep the free last variable:
    // variables x_1..x_{n-1}, x_{n+1}.  Requires projective with >= 2 variables.
    CLRing bar() const;

    // Drop the last (free) variable: variables x_1..x_n.  Requires projective.
    // May be Artinian, or the zero-variable ring k.
    CLRing tilde() const;

    // The polynomial ring on the same variables.
    CLRing ambient() const;

    bool operator==(const CLRing&) const = default;

    // "2,3,inf,inf"
    std::string str() const;
    static CLRing parse(std::string_view text);

private:
    std::vector<ExtNat> degrees_;
};

} // namespace clx
