#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpr/multipoly.hpp"

namespace rpr {

struct BuchbergerOptions {
    /// Maximum number of S-polynomial reductions before giving up.
    std::size_t max_pair_reductions = 100000;
};

struct BuchbergerStats {
    std::size_t pairs_total = 0;
    std::size_t pairs_reduced = 0;
    std::size_t pairs_coprime = 0;
    std::size_t pairs_chain = 0;
    std::size_t zero_reductions = 0;
    std::size_t peak_basis_size = 0;
};

class GroebnerLimitError : public std::runtime_error {
public:
    GroebnerLimitError(const std::string& what, BuchbergerStats stats, std::size_t pending)
        : std::runtime_error(what), stats_(stats), pending_(pending)
    {
    }
    const BuchbergerStats& stats() const { return stats_; }
    std::size_t pending_pairs() const { return pending_; }

private:
    BuchbergerStats stats_;
    std::size_t pending_;
};

/// Reduced monic lex Groebner basis, elements sorted by descending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    std::span<const MultiPoly> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const MultiPoly& operator[](std::size_t i) const { return elements_[i]; }
    const BuchbergerStats& stats() const { return stats_; }

    /// Normal form of f modulo the basis.
    MultiPoly normal_form(const MultiPoly& f) const { return reduce(f, elements_); }
    bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b)
    {
        return a.elements_ == b.elements_;
    }

private:
    friend GroebnerBasis buchberger(std::span<const MultiPoly>, const BuchbergerOptions&);
    std::vector<MultiPoly> elements_;
    BuchbergerStats stats_;
};

/// Buchberger's algorithm with the normal selection strategy and the coprime and
/// chain criteria, followed by full inter-reduction. Zero generators are ignored.
GroebnerBasis buchberger(std::span<const MultiPoly> generators, const BuchbergerOptions& opts = {});

/// True iff every pairwise S-polynomial reduces to zero modulo `g`.
bool is_groebner_basis(std::span<const MultiPoly> g);

/// True iff no monomial of any element is divisible by the leading monomial of another.
bool is_reduced(std::span<const MultiPoly> g);

struct EliminationView {
    int level = 0;
    std::vector<MultiPoly> elements;
};

/// Elements of the basis lying in the ring of the last 8 - level variables.
EliminationView elimination_basis(const GroebnerBasis& g, int level);

}  // namespace rpr
