#include "clx/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clx {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_greater(a, b);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out) {
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(CLRing ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens)
        if (!(g.ring() == ring_))
            throw std::invalid_argument("MonomialIdeal: generator from a different ring");
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(CLRing ring) {
    Monomial one = Monomial::one(ring);
    return MonomialIdeal(std::move(ring), {one});
}

int MonomialIdeal::maxgendeg() const {
    return gens_.empty() ? 0 : gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::vector<Monomial> MonomialIdeal::slice(int j) const {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(ring_, j))
        if (contains(m)) out.push_back(std::move(m));
    return out;
}

long long MonomialIdeal::quotient_hf(int j) const {
    if (j < 0) return 0;
    long long c = 0;
    for (const auto& m : monomials_of_degree(ring_, j))
        if (!contains(m)) ++c;
    return c;
}

long long MonomialIdeal::ideal_hf(int j) const {
    if (j < 0) return 0;
    long long c = 0;
    for (const auto& m : monomials_of_degree(ring_, j))
        if (contains(m)) ++c;
    return c;
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ')';
    return os.str();
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("sum: different rings");
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("intersect: different rings");
    std::vector<Monomial> gens;
    for (const auto& u : a.gens())
        for (const auto& v : b.gens())
            if (auto w = lcm(u, v)) gens.push_back(std::move(*w));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("multiply: different rings");
    std::vector<Monomial> gens;
    for (const auto& u : a.gens())
        for (const auto& v : b.gens())
            if (auto w = multiply(u, v)) gens.push_back(std::move(*w));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal add_gen(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens = a.gens();
    gens.push_back(m);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon_var(const MonomialIdeal& a, int i) {
    const CLRing& r = a.ring();
    if (i < 1 || i > r.varcount()) throw std::invalid_argument("colon_var: bad index");
    std::vector<Monomial> gens;
    for (const auto& u : a.gens()) {
        if (u.exp(i) > 0)
            gens.push_back(exact_divide(u, Monomial::variable(r, i)));
        else
            gens.push_back(u);
    }
    ExtNat d = r.degree_bound(i);
    if (d.is_finite()) gens.push_back(Monomial::variable_power(r, i, d.finite() - 1));
    return MonomialIdeal(r, std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& a) {
    const CLRing& r = a.ring();
    if (!r.projective()) throw std::logic_error("saturate: last variable must be free");
    int m = r.varcount();
    std::vector<Monomial> gens;
    for (const auto& u : a.gens()) {
        std::vector<int> e(u.exps());
        e[static_cast<size_t>(m - 1)] = 0;
        gens.emplace_back(r, std::move(e));
    }
    return MonomialIdeal(r, std::move(gens));
}

MonomialIdeal irrelevant_power(const CLRing& r, int delta) {
    if (!r.projective()) throw std::logic_error("irrelevant_power: needs a projective ring");
    if (delta < 0) throw std::invalid_argument("irrelevant_power: negative exponent");
    if (delta == 0) return MonomialIdeal::unit(r);
    int m = r.varcount();
    std::vector<Monomial> gens;
    for (const auto& u : monomials_of_degree(r, delta))
        if (u.exp(m) == 0) gens.push_back(u);
    return MonomialIdeal(r, std::move(gens));
}

bool is_saturated(const MonomialIdeal& I) {
    const CLRing& r = I.ring();
    if (!r.projective()) throw std::logic_error("is_saturated: needs a projective ring");
    int m = r.varcount();
    for (const auto& g : I.gens())
        if (g.exp(m) > 0) return false;
    return true;
}

bool is_strongly_stable(const MonomialIdeal& I) {
    const CLRing& r = I.ring();
    for (const auto& u : I.gens()) {
        for (int h = 2; h <= r.varcount(); ++h) {
            if (u.exp(h) == 0) continue;
            Monomial base = exact_divide(u, Monomial::variable(r, h));
            for (int k = 1; k < h; ++k) {
                auto v = multiply_by_var(base, k);
                if (v && !I.contains(*v)) return false;
            }
        }
    }
    return true;
}

bool is_lex(const MonomialIdeal& I) {
    if (I.is_zero()) return true;
    for (int j = 1; j <= I.maxgendeg() + 1; ++j) {
        bool seen_out = false;
        for (const auto& m : monomials_of_degree(I.ring(), j)) {
            bool in = I.contains(m);
            if (in && seen_out) return false;
            if (!in) seen_out = true;
        }
    }
    return true;
}

MonomialIdeal tilde_image(const MonomialIdeal& I) {
    const CLRing& r = I.ring();
    CLRing rt = r.tilde();
    int m = r.varcount();
    std::vector<Monomial> gens;
    for (const auto& u : I.gens()) {
        if (u.exp(m) > 0)
            throw std::logic_error("tilde_image: generator involves the last variable");
        std::vector<int> e(u.exps().begin(), u.exps().end() - 1);
        gens.emplace_back(rt, std::move(e));
    }
    return MonomialIdeal(std::move(rt), std::move(gens));
}

MonomialIdeal extend_from_tilde(const MonomialIdeal& K, const CLRing& r) {
    if (!(r.tilde() == K.ring()))
        throw std::invalid_argument("extend_from_tilde: ring mismatch");
    std::vector<Monomial> gens;
    for (const auto& u : K.gens()) {
        std::vector<int> e(u.exps());
        e.push_back(0);
        gens.emplace_back(r, std::move(e));
    }
    return MonomialIdeal(r, std::move(gens));
}

bool is_almost_lex(const MonomialIdeal& I) {
    if (!is_saturated(I)) return false;
    return is_lex(tilde_image(I));
}

IdealClass classify(const MonomialIdeal& I) {
    IdealClass c;
    c.strongly_stable = is_strongly_stable(I);
    c.lex = is_lex(I);
    if (I.ring().projective()) {
        c.saturated = is_saturated(I);
        c.almost_lex = c.saturated && is_almost_lex(I);
    }
    return c;
}

MonomialIdeal preimage_in_ambient(const MonomialIdeal& I) {
    const CLRing& r = I.ring();
    CLRing amb = r.ambient();
    std::vector<Monomial> gens;
    for (const auto& u : I.gens()) gens.emplace_back(amb, u.exps());
    for (int i = 1; i <= r.varcount(); ++i) {
        ExtNat d = r.degree_bound(i);
        if (d.is_finite()) gens.push_back(Monomial::variable_power(amb, i, d.finite()));
    }
    return MonomialIdeal(std::move(amb), std::move(gens));
}

Decomposition decompose(const MonomialIdeal& I) {
    const CLRing& r = I.ring();
    if (!r.projective() || r.varcount() < 2)
        throw std::logic_error("decompose: needs a projective ring with >= 2 variables");
    int m = r.varcount();
    int n = m - 1; // the pivot variable x_n
    CLRing barr = r.bar();
    ExtNat dn = r.degree_bound(n);

    int count;
    if (dn.is_finite()) {
        count = dn.finite();
    } else {
        int l0 = 0;
        for (const auto& g : I.gens()) l0 = std::max(l0, g.exp(n));
        count = l0 + 1;
    }

    Decomposition dec{barr, {}};
    dec.components.reserve(static_cast<size_t>(count));
    for (int l = 0; l < count; ++l) {
        std::vector<Monomial> gens;
        for (const auto& g : I.gens()) {
            if (g.exp(n) > l) continue;
            std::vector<int> e;
            e.reserve(static_cast<size_t>(m - 1));
            for (int i = 1; i <= m; ++i)
                if (i != n) e.push_back(g.exp(i));
            gens.emplace_back(barr, std::move(e));
        }
        dec.components.emplace_back(barr, std::move(gens));
    }
    return dec;
}

MonomialIdeal assemble(const CLRing& r, const std::vector<MonomialIdeal>& components) {
    if (!r.projective() || r.varcount() < 2)
        throw std::logic_error("assemble: needs a projective ring with >= 2 variables");
    int m = r.varcount();
    int n = m - 1;
    CLRing barr = r.bar();
    ExtNat dn = r.degree_bound(n);
    if (dn.is_finite() && static_cast<int>(components.size()) > dn.finite())
        throw std::invalid_argument("assemble: too many components for x_n's bound");
    std::vector<Monomial> gens;
    for (size_t l = 0; l < components.size(); ++l) {
        if (!(components[l].ring() == barr))
            throw std::invalid_argument("assemble: component from the wrong ring");
        if (l > 0 && !components[l].contains(components[l - 1]))
            throw std::invalid_argument("assemble: components must form a chain");
        for (const auto& g : components[l].gens()) {
            std::vector<int> e;
            e.reserve(static_cast<size_t>(m));
            for (int i = 0; i < m - 2; ++i) e.push_back(g.exps()[static_cast<size_t>(i)]);
            e.push_back(static_cast<int>(l));
            e.push_back(g.exps().back());
            gens.emplace_back(r, std::move(e));
        }
    }
    return MonomialIdeal(r, std::move(gens));
}

} // namespace clx
