#include "clx/betti.hpp"

#include <algorithm>
#include <set>

#include "clx/points.hpp"

namespace clx {

namespace {

Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long long t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

} // namespace

void BettiTable::add(int i, int j, const Int& b) {
    if (b == 0) return;
    entries[{i, j}] += b;
    imax = std::max(imax, i);
    jmax = std::max(jmax, j);
}

Int BettiTable::total(int i) const {
    Int t = 0;
    for (const auto& [ij, b] : entries)
        if (ij.first == i) t += b;
    return t;
}

std::vector<Int> BettiTable::totals() const {
    std::vector<Int> out(static_cast<size_t>(imax) + 1, Int(0));
    for (const auto& [ij, b] : entries) out[static_cast<size_t>(ij.first)] += b;
    return out;
}

std::vector<Int> BettiTable::ideal_totals() const {
    std::vector<Int> t = totals();
    if (!quotient_module) return t;
    return std::vector<Int>(t.begin() + 1, t.end());
}

// --- multidegree homology over the ambient polynomial ring ------------------

namespace {

// Reduced homology dimensions of the simplicial complex {sigma subset of
// supp(b) : x^b / x^sigma in M}; out[i] = dim of homology at faces of size i.
template <class F>
std::vector<Int> multidegree_homology(const MonomialIdeal& M, const std::vector<int>& b,
                                      const F& one) {
    const CLRing& S = M.ring();
    std::vector<int> supp;
    for (size_t v = 0; v < b.size(); ++v)
        if (b[v] > 0) supp.push_back(static_cast<int>(v));
    int s = static_cast<int>(supp.size());

    // faces grouped by cardinality, with index within the group
    std::vector<std::vector<unsigned>> faces(static_cast<size_t>(s) + 1);
    std::vector<int> face_index(static_cast<size_t>(1) << s, -1); // mask -> index in its group
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> e = b;
        for (int t = 0; t < s; ++t)
            if (mask & (1u << t)) e[static_cast<size_t>(supp[static_cast<size_t>(t)])] -= 1;
        if (M.contains(Monomial(S, e))) {
            size_t card = static_cast<size_t>(__builtin_popcount(mask));
            face_index[mask] = static_cast<int>(faces[card].size());
            faces[card].push_back(mask);
        }
    }

    // boundary_k : faces of size k -> size k-1, alternating signs
    std::vector<int> ranks(static_cast<size_t>(s) + 2, 0);
    for (int k = 1; k <= s; ++k) {
        std::vector<SparseVec<F>> cols;
        for (unsigned mask : faces[static_cast<size_t>(k)]) {
            SparseVec<F> col;
            int sign = 0;
            for (int t = 0; t < s; ++t) {
                if (!(mask & (1u << t))) continue;
                unsigned sub = mask & ~(1u << t);
                int idx = face_index[sub];
                if (idx >= 0) {
                    F c = (sign % 2 == 0) ? one : -one;
                    col.emplace_back(idx, c);
                }
                ++sign;
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& c) { return a.first < c.first; });
            cols.push_back(std::move(col));
        }
        ranks[static_cast<size_t>(k)] = rank_of(cols);
    }

    std::vector<Int> out(static_cast<size_t>(s) + 1, Int(0));
    for (int i = 0; i <= s; ++i) {
        Int dim = Int(faces[static_cast<size_t>(i)].size());
        out[static_cast<size_t>(i)] =
            dim - ranks[static_cast<size_t>(i)] - ranks[static_cast<size_t>(i) + 1];
    }
    return out;
}

template <class F>
BettiTable betti_ambient_impl(const MonomialIdeal& I, const F& one) {
    MonomialIdeal M = preimage_in_ambient(I);
    BettiTable table;
    table.quotient_module = true;
    table.over_quotient_ring = false;
    table.add(0, 0, 1);
    if (M.is_zero()) return table;
    if (M.gens().size() > 22)
        throw BudgetExceeded("multidegree lattice method is limited to 22 generators");

    // join closure of the generator multidegrees
    std::set<std::vector<int>> closure;
    std::vector<std::vector<int>> work;
    for (const auto& g : M.gens()) {
        if (closure.insert(g.exps()).second) work.push_back(g.exps());
    }
    while (!work.empty()) {
        std::vector<int> b = std::move(work.back());
        work.pop_back();
        for (const auto& g : M.gens()) {
            std::vector<int> j = b;
            for (size_t v = 0; v < j.size(); ++v) j[v] = std::max(j[v], g.exps()[v]);
            if (closure.insert(j).second) work.push_back(std::move(j));
        }
        if (closure.size() > 2000000)
            throw BudgetExceeded("multidegree lattice grew past 2e6 nodes");
    }

    for (const auto& b : closure) {
        int deg = 0;
        for (int e : b) deg += e;
        std::vector<Int> h = multidegree_homology(M, b, one);
        for (size_t i = 0; i < h.size(); ++i)
            if (h[i] > 0) table.add(static_cast<int>(i) + 1, deg, h[i]); // beta_{i+1}(S/M) = beta_i(M)
    }
    return table;
}

} // namespace

BettiTable betti_ambient(const MonomialIdeal& I, const FieldSpec& f) {
    if (f.characteristic == 0) return betti_ambient_impl(I, Rational(1));
    return betti_ambient_impl(I, Fp(1, f.characteristic));
}

BettiTable betti_eliahou_kervaire(const MonomialIdeal& J) {
    for (const auto& d : J.ring().degrees())
        if (d.is_finite())
            throw DomainError("betti_eliahou_kervaire: ring must be a polynomial ring");
    if (!is_strongly_stable(J))
        throw DomainError("betti_eliahou_kervaire: ideal is not strongly stable");
    BettiTable table;
    table.quotient_module = false;
    table.over_quotient_ring = false;
    for (const auto& u : J.gens()) {
        int d = u.degree();
        int m = std::max(u.max_var(), 1);
        for (int i = 0; i < m; ++i) table.add(i, d + i, binom(m - 1, i));
    }
    if (!J.gens().empty()) table.imax = std::max(table.imax, 0);
    return table;
}

// --- resolution oracle ------------------------------------------------------

namespace {

struct RingBasis {
    const CLRing& r;
    std::vector<std::vector<Monomial>> by_deg;
    std::vector<std::map<std::vector<int>, int>> index;

    explicit RingBasis(const CLRing& ring) : r(ring) {}

    void ensure(int d) {
        while (static_cast<int>(by_deg.size()) <= d) {
            int j = static_cast<int>(by_deg.size());
            by_deg.push_back(monomials_of_degree(r, j));
            std::map<std::vector<int>, int> idx;
            for (size_t t = 0; t < by_deg.back().size(); ++t)
                idx[by_deg.back()[t].exps()] = static_cast<int>(t);
            index.push_back(std::move(idx));
        }
    }
    int dim(int d) {
        if (d < 0) return 0;
        ensure(d);
        return static_cast<int>(by_deg[static_cast<size_t>(d)].size());
    }
    int find(const Monomial& m) {
        int d = m.degree();
        ensure(d);
        return index[static_cast<size_t>(d)].at(m.exps());
    }
};

// element of a free module: sum coeff * mono * e_basis
template <class F>
using ModElt = std::vector<std::tuple<int, Monomial, F>>;

template <class F>
BettiTable oracle_impl(const CLRing& R, const std::vector<Monomial>& gens, const F& one,
                       int imax, int jmax, bool over_quotient) {
    BettiTable table;
    table.quotient_module = true;
    table.over_quotient_ring = over_quotient;
    table.imax = imax;
    table.jmax = jmax;
    table.add(0, 0, 1);
    if (gens.empty() || imax < 1) return table;

    RingBasis basis(R);

    std::vector<int> prev_degs = {0}; // F_0 = R
    std::vector<int> cur_degs;
    std::vector<ModElt<F>> cur_cols; // images in F_{i-1}
    for (const auto& g : gens) {
        if (g.degree() > jmax) continue;
        cur_degs.push_back(g.degree());
        cur_cols.push_back({{0, g, one}});
        table.add(1, g.degree(), 1);
    }

    for (int i = 1; i < imax; ++i) {
        std::vector<int> next_degs;
        std::vector<ModElt<F>> next_cols;

        // flat index of (k, mono) in [F]_j given component degrees
        auto flatten = [&](const std::vector<int>& degs, int j, int k,
                           const Monomial& u) -> int {
            int off = 0;
            for (int t = 0; t < k; ++t) off += basis.dim(j - degs[static_cast<size_t>(t)]);
            return off + basis.find(u);
        };
        auto encode = [&](const std::vector<int>& degs, int j,
                          const ModElt<F>& e) -> SparseVec<F> {
            std::map<int, F> acc;
            for (const auto& [k, u, c] : e) {
                int id = flatten(degs, j, k, u);
                auto it = acc.find(id);
                if (it == acc.end())
                    acc.emplace(id, c);
                else
                    it->second = it->second + c;
            }
            SparseVec<F> v;
            for (auto& [id, c] : acc)
                if (!is_zero(c)) v.emplace_back(id, c);
            return v;
        };

        int jmin = *std::min_element(cur_degs.begin(), cur_degs.end()) + 1;
        std::vector<ModElt<F>> prev_kernel; // elements of F_i of degree j-1

        for (int j = jmin; j <= jmax; ++j) {
            // columns of phi_i restricted to degree j
            std::vector<SparseVec<F>> cols;
            std::vector<std::pair<int, Monomial>> col_basis; // (k, u)
            for (size_t k = 0; k < cur_degs.size(); ++k) {
                int d = j - cur_degs[k];
                if (d < 0) continue;
                basis.ensure(d);
                for (const auto& u : basis.by_deg[static_cast<size_t>(d)]) {
                    ModElt<F> img;
                    for (const auto& [b, w, c] : cur_cols[k]) {
                        auto uw = multiply(u, w);
                        if (uw) img.emplace_back(b, std::move(*uw), c);
                    }
                    cols.push_back(encode(prev_degs, j, img));
                    col_basis.emplace_back(static_cast<int>(k), u);
                }
            }

            std::vector<SparseVec<F>> kernel = kernel_basis(cols, one);

            auto decode = [&](const SparseVec<F>& v) {
                ModElt<F> e;
                for (const auto& [idx, c] : v)
                    e.emplace_back(col_basis[static_cast<size_t>(idx)].first,
                                   col_basis[static_cast<size_t>(idx)].second, c);
                return e;
            };

            RowSpan<F> span;
            for (const auto& s : prev_kernel) {
                for (int v = 1; v <= R.varcount(); ++v) {
                    ModElt<F> m;
                    for (const auto& [k, u, c] : s) {
                        auto uv = multiply_by_var(u, v);
                        if (uv) m.emplace_back(k, std::move(*uv), c);
                    }
                    // flatten over the F_i degree layout at degree j
                    std::map<int, F> acc;
                    for (const auto& [k, u, c] : m) {
                        int id = flatten(cur_degs, j, k, u);
                        auto it = acc.find(id);
                        if (it == acc.end())
                            acc.emplace(id, c);
                        else
                            it->second = it->second + c;
                    }
                    SparseVec<F> enc;
                    for (auto& [id, c] : acc)
                        if (!is_zero(c)) enc.emplace_back(id, c);
                    span.insert(std::move(enc));
                }
            }

            std::vector<ModElt<F>> this_kernel;
            for (const auto& kv : kernel) {
                this_kernel.push_back(decode(kv));
                if (span.insert(kv)) {
                    next_degs.push_back(j);
                    next_cols.push_back(this_kernel.back());
                    table.add(i + 1, j, 1);
                }
            }
            prev_kernel = std::move(this_kernel);
        }

        if (next_cols.empty()) break;
        prev_degs = cur_degs;
        cur_degs = std::move(next_degs);
        cur_cols = std::move(next_cols);
    }
    table.imax = imax;
    table.jmax = jmax;
    return table;
}

} // namespace

BettiTable betti_resolution_oracle(const MonomialIdeal& I, ResolutionBase over,
                                   const FieldSpec& f, int imax, int jmax) {
    CLRing R = over == ResolutionBase::Ambient ? I.ring().ambient() : I.ring();
    std::vector<Monomial> gens;
    if (over == ResolutionBase::Ambient) {
        MonomialIdeal pre = preimage_in_ambient(I);
        for (const auto& g : pre.gens()) gens.push_back(g);
    } else {
        gens = I.gens();
    }
    int maxgd = 0;
    for (const auto& g : gens) maxgd = std::max(maxgd, g.degree());
    if (jmax < 0) jmax = maxgd + imax + 2;
    if (imax < 0) throw DomainError("betti_resolution_oracle: negative window");
    bool quot = over == ResolutionBase::Quotient && I.ring().finite_count() > 0;
    if (f.characteristic == 0) return oracle_impl(R, gens, Rational(1), imax, jmax, quot);
    return oracle_impl(R, gens, Fp(1, f.characteristic), imax, jmax, quot);
}

// --- quadratic-case recursion ----------------------------------------------

namespace {

HilbertPoly ideal_hp(const MonomialIdeal& I) {
    return ring_hp(I.ring()) - hilbert_polynomial(I);
}

// Total ideal-side Betti numbers beta_0..beta_imax of I over its ring,
// degrees all in {2, inf}.
std::vector<Int> quad_ideal_beta(const MonomialIdeal& I, int imax);

// Quotient-side Betti numbers of r/(x_1..x_{n}) where x_n.. are the non-free
// variables of r, i.e. of the free tail k[last variable] as an r-module.
std::vector<Int> quad_tail_beta(const CLRing& r, int imax) {
    std::vector<Int> out(static_cast<size_t>(imax) + 1, Int(0));
    out[0] = 1;
    MonomialIdeal irr = irrelevant_power(r, 1);
    if (irr.is_zero()) return out;
    std::vector<Int> ib = quad_ideal_beta(irr, imax - 1 >= 0 ? imax - 1 : 0);
    for (int h = 1; h <= imax; ++h) out[static_cast<size_t>(h)] = ib[static_cast<size_t>(h - 1)];
    return out;
}

std::vector<Int> quad_ideal_beta(const MonomialIdeal& I, int imax) {
    std::vector<Int> out(static_cast<size_t>(imax) + 1, Int(0));
    const CLRing& r = I.ring();
    if (r.varcount() <= 1) {
        // saturated ideals here are 0 or the unit ideal
        if (!I.is_zero()) out[0] = 1;
        return out;
    }
    Decomposition dec = decompose(I);
    const MonomialIdeal& I0 = dec.components.front();
    ExtNat dn = r.degree_bound(r.varcount() - 1);
    const MonomialIdeal& Itop = dn.is_finite() ? dec.at(1) : dec.components.back();

    std::optional<Int> c1 = difference_constant(ideal_hp(I0), ideal_hp(Itop));
    if (!c1) throw DomainError("quadratic recursion: component gap is not constant");

    std::vector<Int> b0 = quad_ideal_beta(I0, imax);
    std::vector<Int> tail = quad_tail_beta(dec.bar, imax);

    for (int h = 0; h <= imax; ++h) {
        Int v = b0[static_cast<size_t>(h)];
        if (dn.is_finite()) {
            Int acc = 0;
            for (int t = 0; t <= h; ++t) acc += tail[static_cast<size_t>(t)];
            v += *c1 * acc;
        } else {
            v += *c1 * tail[static_cast<size_t>(h)];
        }
        out[static_cast<size_t>(h)] = v;
    }
    return out;
}

} // namespace

std::vector<Int> betti_quadratic_recursion(const MonomialIdeal& I, int imax) {
    for (const auto& d : I.ring().degrees())
        if (d.is_finite() && d.finite() != 2)
            throw DomainError("quadratic recursion: degrees must lie in {2, inf}");
    if (!I.ring().projective())
        throw DomainError("quadratic recursion: ring must be projective");
    if (!is_saturated(I) || !is_strongly_stable(I))
        throw DomainError("quadratic recursion: input must be saturated and strongly stable");
    std::vector<Int> out(static_cast<size_t>(imax) + 1, Int(0));
    out[0] = 1;
    if (imax >= 1) {
        std::vector<Int> ib = quad_ideal_beta(I, imax - 1);
        for (int h = 1; h <= imax; ++h)
            out[static_cast<size_t>(h)] = ib[static_cast<size_t>(h - 1)];
    }
    return out;
}

// --- bound reporting --------------------------------------------------------

MonomialIdeal syzygy_extremal_point(const HilbertPoly& p, const CLRing& r) {
    MonomialIdeal E = exp_point(p, r);
    if (r.varcount() < 2) return E;
    int n = r.varcount() - 1;
    if (r.degree_bound(n).is_finite()) return E;
    // When the last modulus is infinite, the ambient Betti numbers of a
    // strongly stable point depend only on its slot-0 component and on the
    // rank gap between slot 0 and the stable tail.  Swapping in the extremal
    // slot-0 component therefore raises the Betti numbers whenever the swap
    // still produces an ideal.
    Decomposition d = decompose(E);
    MonomialIdeal G0 = exp_point(hilbert_polynomial(d.at(0)), d.bar);
    if (G0 == d.at(0)) return E;
    std::vector<Monomial> gens;
    for (const auto& g : G0.gens()) {
        std::vector<int> e = g.exps();
        e.insert(e.begin() + (n - 1), 0); // re-insert the dropped variable
        gens.emplace_back(r, std::move(e));
    }
    MonomialIdeal shifted = colon_var(E, n);
    for (const auto& g : shifted.gens())
        if (auto w = multiply_by_var(g, n)) gens.push_back(std::move(*w));
    MonomialIdeal J(r, std::move(gens));
    if (hilbert_polynomial(J) == p && is_strongly_stable(J)) return J;
    return E; // extremal slot-0 does not fit under the higher components
}

BoundsReport bounds_report(const HilbertPoly& p, const CLRing& r, const FieldSpec& f) {
    MonomialIdeal E = syzygy_extremal_point(p, r);
    BoundsReport rep;
    try {
        rep.table = betti_ambient(E, f);
    } catch (const BudgetExceeded&) {
        if (r.finite_count() == 0) {
            // strongly stable in the polynomial ring: closed-formula route
            BettiTable ek = betti_eliahou_kervaire(E);
            BettiTable t;
            t.quotient_module = true;
            t.over_quotient_ring = false;
            t.add(0, 0, 1);
            for (const auto& [ij, b] : ek.entries) t.add(ij.first + 1, ij.second, b);
            rep.table = std::move(t);
        } else {
            MonomialIdeal M = preimage_in_ambient(E);
            auto l = M.gens().front();
            std::optional<Monomial> big = l;
            for (const auto& g : M.gens()) big = big ? lcm(*big, g) : g;
            int jm = big ? big->degree() : 0;
            rep.table = betti_resolution_oracle(E, ResolutionBase::Ambient, f,
                                               r.varcount(), jm);
        }
    }

    bool any_finite = false;
    bool ci_growth = true;
    long long acc = 0; // sum of (d_h - 1) over earlier finite entries
    int pos = 0;
    for (const auto& d : r.degrees()) {
        if (!d.is_finite()) continue;
        ++pos;
        any_finite = true;
        if (pos >= 3 && d.finite() <= acc) ci_growth = false;
        acc += d.finite() - 1;
    }
    if (!any_finite)
        rep.provenance = "UNCONDITIONAL";
    else if (f.characteristic == 0 && ci_growth)
        rep.provenance = "PROVED-CI";
    else
        rep.provenance = "CONDITIONAL-LPP";
    return rep;
}

} // namespace clx
