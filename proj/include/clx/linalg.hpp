#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clx/errors.hpp"

namespace clx {

// Prime field with runtime modulus.  The modulus travels with the value; the
// default-constructed element is the zero of an unknown field and absorbs
// into any operand.
class Fp {
public:
    Fp() = default;
    Fp(long long v, long long p) : p_(p) {
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        long long p = a.p_ ? a.p_ : b.p_;
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        long long p = a.p_ ? a.p_ : b.p_;
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        long long p = a.p_ ? a.p_ : b.p_;
        return Fp(a.v_ * b.v_, p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(); }

    Fp inverse() const {
        if (v_ == 0) throw std::logic_error("Fp: inverse of zero");
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return Fp(t, p_);
    }

private:
    long long v_ = 0;
    long long p_ = 0;
};

using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline Rational field_inv(const Rational& x) { return 1 / x; }
inline Fp field_inv(const Fp& x) { return x.inverse(); }

// Sparse vector: (index, coefficient) pairs, strictly increasing indices,
// nonzero coefficients.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

// r = a + c*b
template <class F>
SparseVec<F> axpy(const SparseVec<F>& a, const F& c, const SparseVec<F>& b) {
    SparseVec<F> r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            F v = c * b[j].second;
            if (!is_zero(v)) r.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            F v = a[i].second + c * b[j].second;
            if (!is_zero(v)) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

template <class F>
SparseVec<F> scale(SparseVec<F> v, const F& c) {
    for (auto& [i, x] : v) x = x * c;
    return v;
}

// Incremental row space under leading-term elimination.
template <class F>
class RowSpan {
public:
    // Reduce v's leading entries against the stored rows.
    SparseVec<F> reduce(SparseVec<F> v) const {
        while (!v.empty()) {
            auto it = find_pivot(v.front().first);
            if (it < 0) break;
            F c = -v.front().second;
            v = axpy(v, c, rows_[static_cast<size_t>(it)]);
        }
        return v;
    }

    // Returns true when v enlarges the span.
    bool insert(SparseVec<F> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        v = scale(std::move(v), field_inv(v.front().second));
        leads_.push_back(v.front().first);
        rows_.push_back(std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int find_pivot(int lead) const {
        for (size_t k = 0; k < leads_.size(); ++k)
            if (leads_[k] == lead) return static_cast<int>(k);
        return -1;
    }
    std::vector<int> leads_;
    std::vector<SparseVec<F>> rows_;
};

template <class F>
int rank_of(const std::vector<SparseVec<F>>& cols) {
    RowSpan<F> span;
    int r = 0;
    for (const auto& c : cols)
        if (span.insert(c)) ++r;
    return r;
}

// Basis of { y : sum_k y_k * cols[k] = 0 }.  `one` fixes the field.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const std::vector<SparseVec<F>>& cols, const F& one) {
    std::vector<SparseVec<F>> rows, augs; // parallel; rows normalized by leading coeff
    std::vector<int> leads;
    std::vector<SparseVec<F>> kernel;

    for (size_t k = 0; k < cols.size(); ++k) {
        SparseVec<F> v = cols[k];
        SparseVec<F> aug = {{static_cast<int>(k), one}};
        bool progress = true;
        while (!v.empty() && progress) {
            progress = false;
            for (size_t t = 0; t < leads.size(); ++t) {
                if (leads[t] == v.front().first) {
                    F c = -v.front().second;
                    v = axpy(v, c, rows[t]);
                    aug = axpy(aug, c, augs[t]);
                    progress = true;
                    break;
                }
            }
        }
        if (v.empty()) {
            kernel.push_back(std::move(aug));
        } else {
            F inv = field_inv(v.front().second);
            leads.push_back(v.front().first);
            rows.push_back(scale(std::move(v), inv));
            augs.push_back(scale(std::move(aug), inv));
        }
    }
    return kernel;
}

} // namespace clx
