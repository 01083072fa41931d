#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "clx/cl_ring.hpp"
#include "clx/ideal.hpp"
#include "clx/monomial.hpp"

using namespace clx;

namespace {

MonomialIdeal parse_ideal(const CLRing& r, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(parse_monomial(r, g));
    return MonomialIdeal(r, std::move(ms));
}

} // namespace

TEST_CASE("ring parsing and structure maps") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    CHECK(r.str() == "2,3,inf,inf");
    CHECK(r.varcount() == 4);
    CHECK(r.finite_count() == 2);
    CHECK(r.projective());
    CHECK(r.degree_bound(1) == ExtNat(2));
    CHECK(r.degree_bound(3).is_inf());

    CHECK(r.bar().str() == "2,3,inf");   // drops x3, keeps the free x4
    CHECK(r.tilde().str() == "2,3,inf"); // drops x4
    CHECK(r.ambient().str() == "inf,inf,inf,inf");

    // tilde may bottom out in an Artinian ring and eventually in k
    CLRing t = CLRing::parse("2,inf").tilde();
    CHECK(t.str() == "2");
    CHECK(t.artinian());
    CHECK(CLRing::parse("inf").tilde().varcount() == 0);

    CHECK_THROWS(CLRing::parse("3,2,inf")); // degrees must be non-decreasing
    CHECK_THROWS(CLRing::parse("1,inf"));   // finite degrees start at 2
    CHECK_THROWS(CLRing::parse("2,inf,3")); // infinite entries form a suffix
    CHECK_THROWS((void)CLRing::parse("2,3").bar());
}

TEST_CASE("monomials respect the pure-power relations") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    Monomial xy = parse_monomial(r, "x1*x2");
    CHECK(xy.degree() == 2);
    CHECK(xy.max_var() == 2);
    CHECK(xy.str() == "x1*x2");
    CHECK(parse_monomial(r, "[1,1,0,0]") == xy);
    CHECK(parse_monomial(r, "1").is_one());

    CHECK_THROWS(parse_monomial(r, "x1^2")); // x1^2 = 0 in this ring

    // multiplication annihilates instead of overflowing a bound
    CHECK_FALSE(multiply_by_var(xy, 1).has_value());
    auto xyz = multiply_by_var(xy, 3);
    REQUIRE(xyz.has_value());
    CHECK(xyz->str() == "x1*x2*x3");
    CHECK(xy.divides(*xyz));
    CHECK(exact_divide(*xyz, xy).str() == "x3");

    auto l = lcm(parse_monomial(r, "x2^2"), parse_monomial(r, "x1*x2"));
    REQUIRE(l.has_value());
    CHECK(l->str() == "x1*x2^2");
}

TEST_CASE("monomial orders: lex and opposite lex") {
    CLRing r = CLRing::parse("inf,inf,inf");
    Monomial a = parse_monomial(r, "x1*x3");
    Monomial b = parse_monomial(r, "x2^2");
    CHECK(lex_greater(a, b)); // x1 beats x2 under x1 > x2 > x3
    CHECK(opp_less(b, a));    // x3 beats x2 under x3 > x2 > x1

    // both orders are total on the degree slice and agree with the slice order
    auto slice = monomials_of_degree(r, 3);
    CHECK(slice.size() == 10);
    CHECK(std::is_sorted(slice.begin(), slice.end(),
                         [](const Monomial& x, const Monomial& y) { return lex_greater(x, y); }));

    // counting oracle against the finite ring
    CLRing q = CLRing::parse("2,3,inf");
    CHECK(monomials_of_degree(q, 0).size() == 1);
    CHECK(monomials_of_degree(q, 1).size() == 3);
    CHECK(monomials_of_degree(q, 2).size() == 5); // x3^2,x2*x3,x2^2,x1*x3,x1*x2
    CHECK(monomials_of_degree(q, 3).size() == 6);
}

TEST_CASE("ideal normal form: minimal generators in canonical order") {
    CLRing r = CLRing::parse("inf,inf,inf,inf");
    // redundant and shuffled input
    MonomialIdeal I = parse_ideal(r, {"x1^2*x2", "x1", "x2^3", "x2^4"});
    CHECK(I.gens().size() == 2);
    CHECK(I.str() == "(x1, x2^3)");
    CHECK(I.maxgendeg() == 3);
    CHECK(I.contains(parse_monomial(r, "x1*x4^7")));
    CHECK_FALSE(I.contains(parse_monomial(r, "x2^2*x3")));

    CHECK(MonomialIdeal::zero(r).is_zero());
    CHECK(MonomialIdeal::unit(r).is_unit());
    CHECK(add_gen(MonomialIdeal::zero(r), Monomial::one(r)).is_unit());
}

TEST_CASE("sum and intersection satisfy inclusion-exclusion degreewise") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal I = parse_ideal(r, {"x1*x2", "x2^2*x3"});
    MonomialIdeal J = parse_ideal(r, {"x1*x3", "x2^2"});
    MonomialIdeal S = sum(I, J);
    MonomialIdeal M = intersect(I, J);
    for (int j = 0; j <= 12; ++j)
        CHECK(I.ideal_hf(j) + J.ideal_hf(j) == S.ideal_hf(j) + M.ideal_hf(j));
    CHECK(S.contains(I));
    CHECK(S.contains(J));
    CHECK(I.contains(M));
    CHECK(J.contains(M));
    CHECK(I.contains(multiply(I, J)));
    CHECK(M.contains(multiply(I, J)));
}

TEST_CASE("colon and saturation") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal I = parse_ideal(r, {"x1*x2", "x1*x3^5", "x2^2*x4^2"});
    MonomialIdeal C = colon_var(I, 4);
    CHECK(C.str() == "(x1*x2, x2^2*x4, x1*x3^5)");
    MonomialIdeal S = saturate(I);
    CHECK(S.str() == "(x1*x2, x2^2, x1*x3^5)");
    CHECK(is_saturated(S));
    CHECK_FALSE(is_saturated(I));
    // saturation is idempotent and only grows the ideal
    CHECK(saturate(S) == S);
    CHECK(S.contains(I));
}

TEST_CASE("predicate classification on hand-picked ideals") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal lexi = parse_ideal(r, {"x1*x2", "x1*x3^5"});
    CHECK(is_saturated(lexi));
    CHECK(is_strongly_stable(lexi)); // swap x3 -> x1 lands on 0 = contained
    CHECK(is_lex(lexi));
    CHECK(is_almost_lex(lexi));

    MonomialIdeal ss = parse_ideal(r, {"x1*x2", "x1*x3", "x2^2*x3"});
    CHECK(is_strongly_stable(ss));
    CHECK_FALSE(is_lex(ss));
    CHECK(classify(ss).saturated);

    MonomialIdeal not_ss = parse_ideal(r, {"x2*x3"}); // x2*x3 -> x1*x3 missing
    CHECK_FALSE(is_strongly_stable(not_ss));
    CHECK_FALSE(classify(not_ss).almost_lex);
}

TEST_CASE("preimage in the ambient polynomial ring adds the pure powers") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal I = parse_ideal(r, {"x1*x2", "x2^2*x3"});
    MonomialIdeal M = preimage_in_ambient(I);
    CHECK(M.ring().str() == "inf,inf,inf,inf");
    CHECK(M.str() == "(x1^2, x1*x2, x2^3, x2^2*x3)");
    // graded dimensions agree: R/I and S/M are the same vector space
    for (int j = 0; j <= 10; ++j) CHECK(I.quotient_hf(j) == M.quotient_hf(j));
}

TEST_CASE("decomposition along the next-to-last variable") {
    // finite bound on x3: exactly d_3 = 4 components forming a chain
    CLRing r = CLRing::parse("3,3,4,inf");
    MonomialIdeal I =
        parse_ideal(r, {"x1^2", "x1*x2^2*x3", "x1*x2*x3^2", "x1*x3^3", "x2^2*x3^2"});
    Decomposition d = decompose(I);
    CHECK(d.bar.str() == "3,3,inf");
    REQUIRE(d.components.size() == 4);
    CHECK(d.at(0).str() == "(x1^2)");
    CHECK(d.at(1).str() == "(x1^2, x1*x2^2)");
    CHECK(d.at(2).str() == "(x1^2, x1*x2, x2^2)");
    CHECK(d.at(3).str() == "(x1, x2^2)");
    for (size_t l = 1; l < d.components.size(); ++l)
        CHECK(d.components[l].contains(d.components[l - 1]));
    CHECK(assemble(r, d.components) == I);

    // infinite bound on x3: chain stabilizes at the largest x3-exponent
    CLRing s = CLRing::parse("2,3,inf,inf");
    MonomialIdeal J = parse_ideal(s, {"x1*x2", "x1*x3^2", "x2^2*x3"});
    Decomposition e = decompose(J);
    REQUIRE(e.components.size() == 3);
    CHECK(e.at(0).str() == "(x1*x2)");
    CHECK(e.at(1).str() == "(x1*x2, x2^2)");
    CHECK(e.at(2).str() == "(x1, x2^2)");
    CHECK(e.at(7) == e.at(2)); // reading past the tail returns the tail
    CHECK(assemble(s, e.components) == J);

    // degreewise dimension count: dim I_j = sum_l dim (component l)_{j-l}
    for (int j = 0; j <= 10; ++j) {
        long long total = 0;
        for (int l = 0; l <= j; ++l) total += e.at(l).ideal_hf(j - l);
        CHECK(total == J.ideal_hf(j));
    }
}

TEST_CASE("tilde image and extension are inverse on saturated ideals") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal I = parse_ideal(r, {"x1*x2", "x1*x3^2", "x2^2*x3"});
    MonomialIdeal K = tilde_image(I);
    CHECK(K.ring().str() == "2,3,inf");
    CHECK(extend_from_tilde(K, r) == I);
    // extension preserves graded dimensions of the ideal up to the free variable
    for (int j = 0; j <= 8; ++j) {
        long long total = 0;
        for (int i = 0; i <= j; ++i) total += K.ideal_hf(i);
        CHECK(total == I.ideal_hf(j));
    }
}

TEST_CASE("irrelevant powers") {
    CLRing r = CLRing::parse("2,3,inf,inf");
    MonomialIdeal m2 = irrelevant_power(r, 2);
    CHECK(m2.str() == "(x1*x2, x1*x3, x2^2, x2*x3, x3^2)"); // x1^2 = 0 drops out
    CHECK(irrelevant_power(r, 0).is_unit());
    // the quotient keeps exactly the monomials of x1..x3-degree <= 1
    for (int j = 2; j <= 6; ++j) CHECK(m2.quotient_hf(j) == 4);
}
