#include "clx/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clx/points.hpp"

namespace clx {

namespace {

// Immediate Borel parents of u: lower one variable occurrence by one index.
// Annihilated parents are skipped (the swap lands on 0, which needs no
// witness in the layer).
std::vector<Monomial> borel_parents(const Monomial& u) {
    std::vector<Monomial> out;
    const CLRing& r = u.ring();
    for (int h = 2; h <= r.varcount(); ++h) {
        if (u.exp(h) == 0) continue;
        Monomial base = exact_divide(u, Monomial::variable(r, h));
        if (auto v = multiply_by_var(base, h - 1)) out.push_back(std::move(*v));
    }
    return out;
}

struct Search {
    const CLRing& ring;          // the projective ring R
    CLRing tring;                // tilde ring, where layers live
    const HilbertPoly& p;
    int max_degree;
    long long budget;
    long long nodes = 0;

    int gotz = 0;                // HF(R/I, j) = p(j) is enforced for j >= gotz
    Int cap = 0;                 // p(gotz): monotone upper bound for earlier partial sums

    std::vector<std::vector<Monomial>> layer_monomials{}; // degree j, descending lex
    std::vector<std::vector<char>> chosen{};            // per layer, parallel to layer_monomials
    std::vector<Monomial> selected{};                   // union of chosen layer elements
    Int complement_sum = 0;                             // sum over j<=current of |[R~]_j \ B_j|

    std::vector<MonomialIdeal> results{};

    std::map<int, long long> dim_cache{};
    long long tilde_dim(int j) {
        auto it = dim_cache.find(j);
        if (it != dim_cache.end()) return it->second;
        long long d = static_cast<long long>(monomials_of_degree(tring, j).size());
        dim_cache.emplace(j, d);
        return d;
    }

    void tick() {
        if (++nodes > budget) throw BudgetExceeded("enumeration exceeded its node budget");
    }

    bool layer_ok_after(int j) {
        if (j >= gotz) return Rat(complement_sum) == p.eval(Int(j));
        if (complement_sum > cap) return false;
        // Layers j+1..gotz must contribute exactly cap - complement_sum more
        // complement; the contribution is largest when only the mandatory
        // shadow of B_j is taken, so iterated shadows give a reachability cut.
        Int needed = cap - complement_sum;
        std::set<std::vector<int>> front;
        const auto& mons = layer_monomials[static_cast<size_t>(j)];
        const auto& mark = chosen[static_cast<size_t>(j)];
        for (size_t i = 0; i < mons.size(); ++i)
            if (mark[i]) front.insert(mons[i].exps());
        Int avail = 0;
        for (int i = j + 1; i <= gotz && avail < needed; ++i) {
            std::set<std::vector<int>> next;
            for (const auto& e : front) {
                Monomial u(tring, e);
                for (int v = 1; v <= tring.varcount(); ++v)
                    if (auto w = multiply_by_var(u, v)) next.insert(w->exps());
            }
            avail += Int(tilde_dim(i)) - Int(next.size());
            front = std::move(next);
        }
        return avail >= needed;
    }

    void finish() {
        MonomialIdeal K(tring, selected);
        MonomialIdeal I = extend_from_tilde(K, ring);
        if (hilbert_polynomial(I) == p) results.push_back(std::move(I));
    }

    // Decide membership of layer_monomials[j][t..] given earlier decisions.
    void extend_layer(int j, size_t t, int taken) {
        tick();
        const auto& mons = layer_monomials[static_cast<size_t>(j)];
        auto& mark = chosen[static_cast<size_t>(j)];
        if (t == mons.size()) {
            complement_sum += Int(mons.size()) - taken;
            if (layer_ok_after(j)) {
                size_t base = selected.size();
                for (size_t i = 0; i < mons.size(); ++i)
                    if (mark[i]) selected.push_back(mons[i]);
                if (j == max_degree)
                    finish();
                else
                    start_layer(j + 1);
                selected.erase(selected.begin() + static_cast<long>(base), selected.end());
            }
            complement_sum -= Int(mons.size()) - taken;
            return;
        }

        const Monomial& u = mons[t];
        bool parents_in = true;
        for (const auto& v : borel_parents(u)) {
            // parents are lex-greater, hence already decided at index < t
            auto it = std::lower_bound(mons.begin(), mons.begin() + static_cast<long>(t), v,
                                       lex_greater);
            if (it == mons.begin() + static_cast<long>(t) || !(*it == v) ||
                !mark[static_cast<size_t>(it - mons.begin())]) {
                parents_in = false;
                break;
            }
        }

        bool forced = mark[t] != 0; // pre-seeded by the shadow of the previous layer
        if (parents_in) {
            mark[t] = 1;
            extend_layer(j, t + 1, taken + 1);
        }
        if (!forced) {
            mark[t] = 0;
            extend_layer(j, t + 1, taken);
            mark[t] = forced ? 1 : 0;
        }
        mark[t] = forced ? 1 : 0;
    }

    void start_layer(int j) {
        auto& mons = layer_monomials[static_cast<size_t>(j)];
        if (mons.empty()) {
            mons = monomials_of_degree(tring, j);
            chosen[static_cast<size_t>(j)].assign(mons.size(), 0);
        }
        auto& mark = chosen[static_cast<size_t>(j)];
        std::fill(mark.begin(), mark.end(), 0);

        // seed the mandatory shadow of the previous layer
        if (j > 1) {
            const auto& prev = layer_monomials[static_cast<size_t>(j - 1)];
            const auto& pmark = chosen[static_cast<size_t>(j - 1)];
            for (size_t i = 0; i < prev.size(); ++i) {
                if (!pmark[i]) continue;
                for (int v = 1; v <= tring.varcount(); ++v) {
                    auto w = multiply_by_var(prev[i], v);
                    if (!w) continue;
                    auto it = std::lower_bound(mons.begin(), mons.end(), *w, lex_greater);
                    mark[static_cast<size_t>(it - mons.begin())] = 1;
                }
            }
        }
        extend_layer(j, 0, 0);
        std::fill(mark.begin(), mark.end(), 0);
    }
};

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto& ga = a.gens();
    const auto& gb = b.gens();
    for (size_t i = 0; i < std::min(ga.size(), gb.size()); ++i) {
        int da = ga[i].degree(), db = gb[i].degree();
        if (da != db) return da < db;
        auto c = compare(ga[i], gb[i], Order::Lex);
        if (c != 0) return c > 0;
    }
    return ga.size() < gb.size();
}

} // namespace

std::vector<MonomialIdeal> strongly_stable_points(const HilbertPoly& p, const CLRing& r,
                                                  const EnumerationBudget& budget) {
    if (!r.projective()) throw DomainError("strongly_stable_points: ring is not projective");
    if (!hilb_nonempty(p, r)) throw DomainError("strongly_stable_points: empty Hilbert scheme");
    if (p.is_zero()) return {MonomialIdeal::unit(r)};

    auto gotz = gotzmann_number(p);
    if (!gotz) throw DomainError("strongly_stable_points: polynomial admits no Gotzmann bound");

    int maxd = *gotz;
    for (const auto& d : r.degrees())
        if (d.is_finite()) maxd = std::max(maxd, d.finite());
    if (budget.max_gen_degree) maxd = *budget.max_gen_degree;
    if (maxd < 1) maxd = 1;

    Search s{r, r.tilde(), p, maxd, budget.max_candidates};
    s.gotz = *gotz;
    s.complement_sum = 1; // the monomial 1 is never in a proper ideal
    {
        Rat capv = p.eval(Int(*gotz));
        if (denominator(capv) != 1 || capv < 0)
            throw DomainError("strongly_stable_points: polynomial is not admissible");
        s.cap = numerator(capv);
    }
    s.layer_monomials.resize(static_cast<size_t>(maxd) + 1);
    s.chosen.resize(static_cast<size_t>(maxd) + 1);
    s.start_layer(1);

    std::sort(s.results.begin(), s.results.end(), ideal_less);
    return s.results;
}

std::vector<MonomialIdeal> almost_lex_points(const HilbertPoly& p, const CLRing& r,
                                             const EnumerationBudget& budget) {
    std::vector<MonomialIdeal> out;
    for (auto& I : strongly_stable_points(p, r, budget))
        if (classify(I).almost_lex) out.push_back(std::move(I));
    return out;
}

} // namespace clx
