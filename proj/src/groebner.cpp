#include "rpr/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace rpr {

namespace {

struct Pair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;

    // Normal strategy: smallest lcm first, ties broken by index for determinism.
    friend bool operator<(const Pair& a, const Pair& b)
    {
        return std::tie(a.lcm, a.j, a.i) < std::tie(b.lcm, b.j, b.i);
    }
};

class PairQueue {
public:
    void push(const std::vector<MultiPoly>& g, std::size_t i, std::size_t j)
    {
        Monomial l = g[i].leading_monomial().lcm(g[j].leading_monomial());
        queue_.insert({l, i, j});
        index_.insert(key(i, j));
    }

    Pair pop()
    {
        Pair p = *queue_.begin();
        queue_.erase(queue_.begin());
        index_.erase(key(p.i, p.j));
        return p;
    }

    bool contains(std::size_t i, std::size_t j) const { return index_.count(key(i, j)) != 0; }
    bool empty() const { return queue_.empty(); }
    std::size_t size() const { return queue_.size(); }

private:
    static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j)
    {
        return i < j ? std::pair{i, j} : std::pair{j, i};
    }
    std::set<Pair> queue_;
    std::set<std::pair<std::size_t, std::size_t>> index_;
};

bool chain_criterion(const std::vector<MultiPoly>& g, const PairQueue& pending, const Pair& p)
{
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k == p.i || k == p.j) continue;
        if (!g[k].leading_monomial().divides(p.lcm)) continue;
        if (!pending.contains(p.i, k) && !pending.contains(p.j, k)) return true;
    }
    return false;
}

// Drops elements whose leading monomial is divisible by another's, then
// reduces every element against the rest.
std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g)
{
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i) continue;
            const Monomial& lk = g[k].leading_monomial();
            const Monomial& li = g[i].leading_monomial();
            if (lk.divides(li) && (lk != li || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.leading_monomial() > b.leading_monomial();
    });
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        minimal[i] = reduce(minimal[i], others).monic();
    }
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::span<const MultiPoly> generators, const BuchbergerOptions& opts)
{
    GroebnerBasis result;
    BuchbergerStats& stats = result.stats_;

    std::vector<MultiPoly> g;
    for (const auto& f : generators) {
        if (f.is_zero()) continue;
        MultiPoly m = f.monic();
        if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
    }
    if (g.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

    auto has_unit = [&] {
        return std::any_of(g.begin(), g.end(), [](const MultiPoly& p) { return p.is_constant(); });
    };
    if (has_unit()) {
        result.elements_ = {MultiPoly(1)};
        return result;
    }

    PairQueue pending;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.push(g, i, j);
    stats.pairs_total = pending.size();

    while (!pending.empty()) {
        Pair p = pending.pop();
        if (g[p.i].leading_monomial().coprime(g[p.j].leading_monomial())) {
            ++stats.pairs_coprime;
            continue;
        }
        if (chain_criterion(g, pending, p)) {
            ++stats.pairs_chain;
            continue;
        }
        if (stats.pairs_reduced >= opts.max_pair_reductions) {
            throw GroebnerLimitError("buchberger: pair reduction limit of " +
                                         std::to_string(opts.max_pair_reductions) +
                                         " exceeded (basis size " + std::to_string(g.size()) +
                                         ", pending pairs " + std::to_string(pending.size()) + ")",
                                     stats, pending.size());
        }
        ++stats.pairs_reduced;
        MultiPoly r = reduce(s_polynomial(g[p.i], g[p.j]), g);
        if (r.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        if (r.is_constant()) {
            result.elements_ = {MultiPoly(1)};
            return result;
        }
        g.push_back(r.monic());
        std::size_t n = g.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.push(g, k, n);
        stats.pairs_total += n;
        stats.peak_basis_size = std::max(stats.peak_basis_size, g.size());
    }
    stats.peak_basis_size = std::max(stats.peak_basis_size, g.size());

    result.elements_ = interreduce(std::move(g));
    return result;
}

bool is_groebner_basis(std::span<const MultiPoly> g)
{
    for (const auto& p : g)
        if (p.is_zero()) throw std::invalid_argument("is_groebner_basis: zero element");
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!multi_divide(s_polynomial(g[i], g[j]), g).remainder.is_zero()) return false;
    return true;
}

bool is_reduced(std::span<const MultiPoly> g)
{
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Monomial& lead = g[j].leading_monomial();
            for (const auto& t : g[i].terms())
                if (lead.divides(t.mono)) return false;
        }
    }
    return true;
}

EliminationView elimination_basis(const GroebnerBasis& g, int level)
{
    if (level < 0 || level > kNumVars) throw std::out_of_range("elimination level must be in 0..8");
    EliminationView view;
    view.level = level;
    for (const auto& p : g.elements())
        if (p.uses_only_vars_from(level)) view.elements.push_back(p);
    return view;
}

}  // namespace rpr
