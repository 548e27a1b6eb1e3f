#pragma once

#include <map>
#include <vector>

#include "covtree/canonical.hpp"
#include "covtree/poset.hpp"

namespace covtree {

/// A set of pairwise non-isomorphic posets of one common size, kept as
/// canonical representatives sorted by key. This is a candidate covtree
/// node when the posets arise as the size-n downsets of some witness.
class GammaSet {
public:
    GammaSet() = default;

    /// Canonicalizes, deduplicates and sorts the given members.
    /// Throws if any member's size differs from `n`.
    GammaSet(int n, const std::vector<Poset>& members);

    int n() const { return n_; }
    int k() const { return static_cast<int>(classes_.size()); }
    const std::vector<Poset>& classes() const { return classes_; }
    const std::vector<IsoKey>& keys() const { return keys_; }
    bool contains(const IsoKey& key) const;

    /// Hex of the concatenated class keys; a compact node identifier.
    std::string key_hex() const;

    friend bool operator==(const GammaSet& a, const GammaSet& b) {
        return a.n_ == b.n_ && a.keys_ == b.keys_;
    }
    friend bool operator!=(const GammaSet& a, const GammaSet& b) { return !(a == b); }
    friend bool operator<(const GammaSet& a, const GammaSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.keys_ < b.keys_;
    }

private:
    int n_ = 0;
    std::vector<Poset> classes_;
    std::vector<IsoKey> keys_;
};

/// All downward-closed subsets of `p` with exactly `n` elements, as masks
/// in increasing numeric order. n > |p| yields an empty list.
std::vector<Mask> downsets_of_size(const Poset& p, int n);

/// All downward-closed subsets of any size, including the empty one,
/// in increasing numeric order.
std::vector<Mask> all_downset_masks(const Poset& p);

/// D_n(p): the size-n downsets up to isomorphism. d_n(p) is its k().
GammaSet distinct_downsets(const Poset& p, int n);
int d_n(const Poset& p, int n);

/// D(p): non-empty downsets up to isomorphism, grouped by size.
/// Every size 1..|p| is present (each has at least one downset).
std::map<int, GammaSet> all_distinct_downsets(const Poset& p);

/// |D(p)| summed over sizes 1..|p|.
int total_distinct_downsets(const Poset& p);

/// C(P0 R0) = |D(P0)| + |D(R0)| - |D(P0) ∩ D(R0)|, the inclusion-exclusion
/// count of downset classes of the two seeds.
int c_constant(const Poset& p0, const Poset& r0);

/// |I_{s,i}| for seeds of equal size m extended by ladders of length i:
/// ordered pairs (p, r) of downset classes of P_i x R_i with |p|+|r| = s,
/// |p| >= s/2, p and r non-isomorphic, and both classes occurring as
/// downsets of both P_i and R_i. Computed by direct enumeration.
int duplicate_count(const Poset& p0, const Poset& r0, int ladder_len, int s);

}  // namespace covtree
