#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace covtree {

/// Element subset of a poset, one bit per element index.
using Mask = std::uint64_t;

/// Largest supported poset size: one 64-bit word per relation row.
inline constexpr int kMaxElements = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Multiset of element heights as sorted (height, multiplicity) pairs.
/// Isomorphism invariant: equal profiles are necessary for isomorphism.
using HeightProfile = std::vector<std::pair<int, int>>;

/// A finite strict partial order on elements 0..size-1, stored as the
/// transitive closure. Row b of `below` holds the set {a : a < b}; the
/// transpose `above` is kept alongside. Immutable after construction.
class Poset {
public:
    Poset() = default;

    /// Builds the transitive closure of an acyclic relation given as
    /// (lower, upper) pairs. The pairs need not be a minimal cover set.
    /// Throws std::invalid_argument on bad indices or on a cycle (the
    /// message names a cycle).
    static Poset from_cover_relations(int size,
                                      const std::vector<std::pair<int, int>>& covers);

    /// Unchecked construction from closed strict-order rows. The caller
    /// guarantees irreflexivity, antisymmetry and transitivity; the
    /// axioms are re-asserted in debug builds.
    static Poset from_closed_rows(std::vector<Mask> below);

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// a < b in the strict order.
    bool less(int a, int b) const { return (below_[b] >> a) & 1; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    /// {x : x < b} and {y : a < y}.
    Mask strictly_below(int b) const { return below_[b]; }
    Mask strictly_above(int a) const { return above_[a]; }

    /// {x : x <= b} as a mask.
    Mask down_closure(int b) const { return below_[b] | bit(b); }

    Mask all_mask() const { return low_bits(size_); }
    Mask maximal_elements() const;
    Mask minimal_elements() const;

    /// Cover pairs (a, b): a < b with nothing strictly between, sorted.
    std::vector<std::pair<int, int>> covers() const;

    /// Heights per element; minimal elements have height 1.
    std::vector<int> heights() const;
    int height() const;
    HeightProfile height_profile() const;

    /// Number of connected components of the comparability graph.
    int component_count() const;
    bool connected() const { return size_ <= 1 || component_count() == 1; }

    bool identical(const Poset& other) const { return below_ == other.below_; }

    const std::vector<Mask>& rows() const { return below_; }

private:
    int size_ = 0;
    std::vector<Mask> below_;
    std::vector<Mask> above_;

    void rebuild_above();
    void check_axioms() const;
};

/// Result of restricting a poset to a subset: the restricted order on
/// compacted indices plus the original index of each new element.
struct InducedSubposet {
    Poset poset;
    std::vector<int> elements;  // new index -> original index, ascending
};

/// Restriction of `p` to the elements of `subset`.
InducedSubposet induced_subposet(const Poset& p, Mask subset);

/// Disjoint union; elements of `r` are reindexed above `p`'s.
Poset disjoint_union(const Poset& p, const Poset& r);

/// Ordinal sum: every element of `upper` strictly above every element of
/// `lower`. Lower keeps indices 0..|lower|-1.
Poset stack_above(const Poset& upper, const Poset& lower);

/// Extends `p` with one new maximal element whose strict past is exactly
/// the downset `d`. Throws if `d` is not downward closed.
Poset add_maximal_above(const Poset& p, Mask d);

/// True iff `m` is downward closed in `p`.
bool is_downset(const Poset& p, Mask m);

Poset chain(int n);
Poset antichain(int n);

}  // namespace covtree
