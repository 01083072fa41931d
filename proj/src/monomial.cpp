#include "clx/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace clx {

Monomial::Monomial(CLRing ring, std::vector<int> exps)
    : ring_(std::move(ring)), exps_(std::move(exps)) {
    if (static_cast<int>(exps_.size()) != ring_.varcount())
        throw std::invalid_argument("Monomial: exponent count != variable count");
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        ExtNat d = ring_.degrees()[i];
        if (d.is_finite() && exps_[i] >= d.finite())
            throw std::invalid_argument("Monomial: exponent at or above its bound (zero in the ring)");
    }
}

Monomial Monomial::one(CLRing ring) {
    std::vector<int> e(static_cast<size_t>(ring.varcount()), 0);
    return Monomial(std::move(ring), std::move(e));
}

Monomial Monomial::variable(CLRing ring, int i) { return variable_power(std::move(ring), i, 1); }

Monomial Monomial::variable_power(CLRing ring, int i, int e) {
    std::vector<int> exps(static_cast<size_t>(ring.varcount()), 0);
    if (i < 1 || i > ring.varcount())
        throw std::invalid_argument("Monomial: variable index out of range");
    exps[static_cast<size_t>(i - 1)] = e;
    return Monomial(std::move(ring), std::move(exps));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::max_var() const {
    for (int i = static_cast<int>(exps_.size()); i >= 1; --i)
        if (exps_[static_cast<size_t>(i - 1)] > 0) return i;
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (exps_[i] > 1) os << '^' << exps_[i];
    }
    return os.str();
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, Order order) {
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    if (ea.size() != eb.size())
        throw std::invalid_argument("compare: monomials of different rings");
    size_t m = ea.size();
    if (order == Order::Lex) {
        for (size_t i = 0; i < m; ++i)
            if (ea[i] != eb[i]) return ea[i] <=> eb[i];
    } else {
        for (size_t i = m; i-- > 0;)
            if (ea[i] != eb[i]) return ea[i] <=> eb[i];
    }
    return std::strong_ordering::equal;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
    const CLRing& r = a.ring();
    if (!(r == b.ring()))
        throw std::invalid_argument("multiply: monomials of different rings");
    std::vector<int> e(a.exps());
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] += b.exps()[i];
        ExtNat d = r.degrees()[i];
        if (d.is_finite() && e[i] >= d.finite()) return std::nullopt;
    }
    return Monomial(r, std::move(e));
}

std::optional<Monomial> multiply_by_var(const Monomial& m, int i) {
    const CLRing& r = m.ring();
    if (i < 1 || i > r.varcount())
        throw std::invalid_argument("multiply_by_var: variable index out of range");
    std::vector<int> e(m.exps());
    e[static_cast<size_t>(i - 1)] += 1;
    ExtNat d = r.degrees()[static_cast<size_t>(i - 1)];
    if (d.is_finite() && e[static_cast<size_t>(i - 1)] >= d.finite()) return std::nullopt;
    return Monomial(r, std::move(e));
}

Monomial exact_divide(const Monomial& b, const Monomial& a) {
    if (!a.divides(b)) throw std::invalid_argument("exact_divide: not divisible");
    std::vector<int> e(b.exps());
    for (size_t i = 0; i < e.size(); ++i) e[i] -= a.exps()[i];
    return Monomial(b.ring(), std::move(e));
}

std::optional<Monomial> lcm(const Monomial& a, const Monomial& b) {
    const CLRing& r = a.ring();
    std::vector<int> e(a.exps());
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] = std::max(e[i], b.exps()[i]);
        ExtNat d = r.degrees()[i];
        if (d.is_finite() && e[i] >= d.finite()) return std::nullopt;
    }
    return Monomial(r, std::move(e));
}

namespace {

void enumerate_rec(const CLRing& r, int var, int remaining, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
    int m = r.varcount();
    if (var > m) {
        if (remaining == 0) out.emplace_back(r, cur);
        return;
    }
    ExtNat d = r.degree_bound(var);
    int hi = remaining;
    if (d.is_finite()) hi = std::min(hi, d.finite() - 1);
    // descending lex: largest exponent on the earliest variable first
    for (int e = hi; e >= 0; --e) {
        cur[static_cast<size_t>(var - 1)] = e;
        enumerate_rec(r, var + 1, remaining - e, cur, out);
    }
    cur[static_cast<size_t>(var - 1)] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const CLRing& r, int j) {
    std::vector<Monomial> out;
    if (j < 0) return out;
    std::vector<int> cur(static_cast<size_t>(r.varcount()), 0);
    enumerate_rec(r, 1, j, cur, out);
    return out;
}

Monomial parse_monomial(const CLRing& r, std::string_view text) {
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("parse_monomial: empty input");

    std::vector<int> exps(static_cast<size_t>(r.varcount()), 0);

    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("parse_monomial: unterminated tuple");
        std::string_view body = text.substr(1, text.size() - 2);
        size_t idx = 0, pos = 0;
        while (true) {
            size_t comma = body.find(',', pos);
            std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw std::invalid_argument("parse_monomial: bad tuple entry");
            if (idx >= exps.size()) throw std::invalid_argument("parse_monomial: too many entries");
            exps[idx++] = v;
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (idx != exps.size()) throw std::invalid_argument("parse_monomial: too few entries");
        return Monomial(r, std::move(exps));
    }

    if (text == "1") return Monomial::one(r);

    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*') {
            ++pos;
            continue;
        }
        if (text[pos] != 'x') throw std::invalid_argument("parse_monomial: expected variable");
        ++pos;
        int idx = 0;
        auto [p1, ec1] = std::from_chars(text.data() + pos, text.data() + text.size(), idx);
        if (ec1 != std::errc{} || idx < 1 || idx > r.varcount())
            throw std::invalid_argument("parse_monomial: bad variable index");
        pos = static_cast<size_t>(p1 - text.data());
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), e);
            if (ec2 != std::errc{} || e < 1)
                throw std::invalid_argument("parse_monomial: bad exponent");
            pos = static_cast<size_t>(p2 - text.data());
        }
        exps[static_cast<size_t>(idx - 1)] += e;
    }
    return Monomial(r, std::move(exps));
}

} // namespace clx
