#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace clx {

// Extended natural number: a nonnegative integer or infinity.
// Infinity compares above every finite value and absorbs subtraction.
class ExtNat {
public:
    ExtNat() : v_(0) {}
    ExtNat(int v) : v_(v) {
        if (v < 0) throw std::invalid_argument("ExtNat: negative value");
    }

    static ExtNat inf() {
        ExtNat e;
        e.v_ = kInf;
        return e;
    }

    bool is_inf() const { return v_ == kInf; }
    bool is_finite() const { return v_ != kInf; }

    int finite() const {
        if (is_inf()) throw std::logic_error("ExtNat: finite() on infinity");
        return v_;
    }

    friend auto operator<=>(const ExtNat&, const ExtNat&) = default;

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();
    int v_;
};

} // namespace clx
