#include "clx/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace clx {

// --- HilbertPoly -----------------------------------------------------------

HilbertPoly::HilbertPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void HilbertPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

HilbertPoly HilbertPoly::constant(Rat c) {
    HilbertPoly p;
    if (c != 0) p.c_ = {std::move(c)};
    return p;
}

HilbertPoly HilbertPoly::binomial(const Int& shift, int r) {
    if (r < 0) throw std::invalid_argument("HilbertPoly::binomial: negative r");
    HilbertPoly p = constant(1);
    for (int t = 0; t < r; ++t) {
        // multiply by (z + shift - t)
        std::vector<Rat> next(p.c_.size() + 1, Rat(0));
        Rat a = Rat(shift - t);
        for (size_t i = 0; i < p.c_.size(); ++i) {
            next[i] += p.c_[i] * a;
            next[i + 1] += p.c_[i];
        }
        p.c_ = std::move(next);
    }
    Int fact = 1;
    for (int t = 2; t <= r; ++t) fact *= t;
    for (auto& c : p.c_) c /= Rat(fact);
    p.normalize();
    return p;
}

Rat HilbertPoly::leading() const {
    if (c_.empty()) throw std::logic_error("HilbertPoly::leading: zero polynomial");
    return c_.back();
}

Rat HilbertPoly::eval(const Int& z) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * Rat(z) + c_[i];
    return acc;
}

Int HilbertPoly::eval_int(const Int& z) const {
    Rat v = eval(z);
    if (denominator(v) != 1)
        throw std::logic_error("HilbertPoly::eval_int: non-integer value");
    return numerator(v);
}

HilbertPoly HilbertPoly::compose_shift(const Int& a) const {
    std::vector<Rat> out(c_.size(), Rat(0));
    std::vector<Rat> pw = {Rat(1)}; // (z + a)^i
    for (size_t i = 0; i < c_.size(); ++i) {
        for (size_t j = 0; j < pw.size(); ++j) out[j] += c_[i] * pw[j];
        std::vector<Rat> next(pw.size() + 1, Rat(0));
        for (size_t j = 0; j < pw.size(); ++j) {
            next[j] += pw[j] * Rat(a);
            next[j + 1] += pw[j];
        }
        pw = std::move(next);
    }
    return HilbertPoly(std::move(out));
}

HilbertPoly HilbertPoly::operator+(const HilbertPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return HilbertPoly(std::move(c));
}

HilbertPoly HilbertPoly::operator-(const HilbertPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return HilbertPoly(std::move(c));
}

HilbertPoly HilbertPoly::operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= s;
    return HilbertPoly(std::move(c));
}

std::string HilbertPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

HilbertPoly HilbertPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("HilbertPoly::parse: empty input");

    std::vector<Rat> coeffs;
    auto bump = [&](int k, const Rat& c) {
        if (static_cast<size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<size_t>(k) + 1, Rat(0));
        coeffs[static_cast<size_t>(k)] += c;
    };

    size_t pos = 0;
    auto parse_uint = [&](bool required) -> Int {
        size_t start = pos;
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        if (pos == start && required)
            throw std::invalid_argument("HilbertPoly::parse: expected a number");
        return v;
    };

    bool any = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (any) {
            throw std::invalid_argument("HilbertPoly::parse: expected '+' or '-'");
        }
        if (pos >= s.size()) throw std::invalid_argument("HilbertPoly::parse: dangling sign");

        Int num = 1;
        Int den = 1;
        bool have_num = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            num = parse_uint(true);
            have_num = true;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = parse_uint(true);
                if (den == 0) throw std::invalid_argument("HilbertPoly::parse: division by zero");
            }
        }
        if (pos < s.size() && s[pos] == '*') {
            if (!have_num) throw std::invalid_argument("HilbertPoly::parse: '*' without coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 'z')
                throw std::invalid_argument("HilbertPoly::parse: expected 'z' after '*'");
        }
        int k = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            k = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                Int kk = parse_uint(true);
                if (kk > 64) throw std::invalid_argument("HilbertPoly::parse: exponent too large");
                k = static_cast<int>(kk);
            }
        } else if (!have_num) {
            throw std::invalid_argument("HilbertPoly::parse: empty term");
        }
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Int d2 = parse_uint(true);
            if (d2 == 0) throw std::invalid_argument("HilbertPoly::parse: division by zero");
            den *= d2;
        }
        bump(k, Rat(sign * num, den));
        any = true;
    }
    return HilbertPoly(std::move(coeffs));
}

// --- Hilbert series numerator ----------------------------------------------

namespace {

void trim_poly(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim_poly(c);
    return c;
}

std::vector<Int> poly_add(std::vector<Int> a, const std::vector<Int>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim_poly(a);
    return a;
}

bool is_pure_power(const Monomial& m) {
    int seen = 0;
    for (int e : m.exps())
        if (e > 0) ++seen;
    return seen <= 1;
}

std::vector<Int> numerator_rec(const MonomialIdeal& I) {
    if (I.is_unit()) return {};
    const CLRing& r = I.ring();
    int m = r.varcount();

    // pick a pivot variable appearing in a generator with >= 2 distinct
    // variables; without one, the ideal is generated by pure powers
    std::vector<int> freq(static_cast<size_t>(m) + 1, 0);
    bool pure = true;
    for (const auto& g : I.gens()) {
        if (is_pure_power(g)) continue;
        pure = false;
        for (int i = 1; i <= m; ++i)
            if (g.exp(i) > 0) ++freq[static_cast<size_t>(i)];
    }

    if (pure) {
        std::vector<ExtNat> bounds(r.degrees());
        for (const auto& g : I.gens()) {
            int v = g.max_var();
            ExtNat e(g.exp(v));
            if (e < bounds[static_cast<size_t>(v - 1)]) bounds[static_cast<size_t>(v - 1)] = e;
        }
        std::vector<Int> k = {Int(1)};
        for (const auto& b : bounds) {
            if (b.is_inf()) continue;
            std::vector<Int> factor(static_cast<size_t>(b.finite()) + 1, Int(0));
            factor.front() = 1;
            factor.back() = -1; // 1 - t^b
            k = poly_mul(k, factor);
        }
        return k;
    }

    int p = 1;
    for (int i = 2; i <= m; ++i)
        if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(p)]) p = i;

    std::vector<Int> kc = numerator_rec(colon_var(I, p));
    std::vector<Int> ks = numerator_rec(add_gen(I, Monomial::variable(r, p)));
    kc.insert(kc.begin(), Int(0)); // multiply by t: the degree shift in the exact sequence
    return poly_add(std::move(kc), ks);
}

} // namespace

std::vector<Int> series_numerator(const MonomialIdeal& I) { return numerator_rec(I); }

HilbertPoly hilbert_polynomial(const MonomialIdeal& I) {
    std::vector<Int> k = series_numerator(I);
    int m = I.ring().varcount();
    int s = 0;
    auto value_at_one = [&]() {
        Int v = 0;
        for (const auto& c : k) v += c;
        return v;
    };
    while (!k.empty() && value_at_one() == 0) {
        // divide by (1 - t)
        std::vector<Int> q(k.size() - 1, Int(0));
        Int carry = 0;
        for (size_t i = 0; i + 1 < k.size(); ++i) {
            carry += k[i];
            q[i] = carry;
        }
        k = std::move(q);
        trim_poly(k);
        ++s;
    }
    if (k.empty()) return HilbertPoly();
    int mm = m - s;
    if (mm <= 0) return HilbertPoly();
    HilbertPoly hp;
    for (size_t i = 0; i < k.size(); ++i)
        hp = hp + HilbertPoly::binomial(Int(mm - 1) - Int(i), mm - 1) * Rat(k[i]);
    return hp;
}

int hf_hp_threshold(const MonomialIdeal& I) {
    std::vector<Int> k = series_numerator(I);
    int m = I.ring().varcount();
    int degk = static_cast<int>(k.size()) - 1; // -1 for zero numerator
    if (m == 0) return degk + 1;
    return std::max(0, degk - (m - 1));
}

bool precedes(const HilbertPoly& p, const HilbertPoly& q) {
    HilbertPoly d = q - p;
    return d.degree() <= 0 && (d.is_zero() || d.coeffs()[0] >= 0);
}

std::optional<Int> difference_constant(const HilbertPoly& p, const HilbertPoly& q) {
    HilbertPoly d = q - p;
    if (d.degree() > 0) return std::nullopt;
    if (d.is_zero()) return Int(0);
    Rat c = d.coeffs()[0];
    if (denominator(c) != 1) return std::nullopt;
    return numerator(c);
}

std::optional<int> gotzmann_number(const HilbertPoly& p) {
    HilbertPoly f = p;
    Int r = 0;
    int i = 1;
    constexpr int kMaxTerms = 1000000;
    while (!f.is_zero()) {
        if (f.leading() <= 0) return std::nullopt;
        int a = f.degree();
        if (a == 0) {
            Rat c = f.coeffs()[0];
            if (denominator(c) != 1) return std::nullopt;
            r += numerator(c);
            break;
        }
        f = f - HilbertPoly::binomial(Int(a) - Int(i) + 1, a);
        r += 1;
        ++i;
        if (i > kMaxTerms) return std::nullopt;
    }
    if (r > kMaxTerms) return std::nullopt;
    return static_cast<int>(r);
}

} // namespace clx
