#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clx/cl_ring.hpp"

namespace clx {

// A nonzero monomial of a CLRing: an exponent vector with e_i < d_i for every
// finite d_i.  The zero element of the ring is never a Monomial; operations
// that can annihilate return an empty optional instead.
class Monomial {
public:
    Monomial(CLRing ring, std::vector<int> exps);
    static Monomial one(CLRing ring);
    static Monomial variable(CLRing ring, int i); // 1-based
    static Monomial variable_power(CLRing ring, int i, int e);

    const CLRing& ring() const { return ring_; }
    const std::vector<int>& exps() const { return exps_; }
    int exp(int i) const { return exps_.at(static_cast<size_t>(i - 1)); } // 1-based
    int degree() const;
    bool is_one() const;

    // Largest variable index with positive exponent, 0 for the monomial 1.
    int max_var() const;

    bool divides(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

    std::string str() const; // "x1^2*x3"

private:
    CLRing ring_;
    std::vector<int> exps_;
};

enum class Order { Lex, Opp };

// Pure lexicographic comparison of exponent vectors, Lex with variable
// priority x_1 > .. > x_m, Opp with x_m > .. > x_1.  Total on distinct
// monomials of the same ring regardless of degree.
std::strong_ordering compare(const Monomial& a, const Monomial& b, Order order);

inline bool lex_less(const Monomial& a, const Monomial& b) {
    return compare(a, b, Order::Lex) < 0;
}
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    return compare(a, b, Order::Lex) > 0;
}
inline bool opp_less(const Monomial& a, const Monomial& b) {
    return compare(a, b, Order::Opp) < 0;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);
std::optional<Monomial> multiply_by_var(const Monomial& m, int i); // 1-based

// pre: a.divides(b)
Monomial exact_divide(const Monomial& b, const Monomial& a);

// Exponentwise max; empty when some exponent reaches its finite bound.
std::optional<Monomial> lcm(const Monomial& a, const Monomial& b);

// All nonzero monomials of degree j, descending lex order.
std::vector<Monomial> monomials_of_degree(const CLRing& r, int j);

// Accepts "x1^2*x3", "1", and the tuple form "[2,0,1,0]".
Monomial parse_monomial(const CLRing& r, std::string_view text);

} // namespace clx
