#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "covtree/poset.hpp"

namespace covtree {

/// Canonical, permutation-invariant fingerprint of a poset.
/// Two posets have equal keys if and only if they are isomorphic; the
/// byte layout (size, then the canonical relation matrix packed row-major)
/// is stable across runs and platforms.
struct IsoKey {
    std::string bytes;

    friend bool operator==(const IsoKey& a, const IsoKey& b) { return a.bytes == b.bytes; }
    friend bool operator!=(const IsoKey& a, const IsoKey& b) { return a.bytes != b.bytes; }
    friend bool operator<(const IsoKey& a, const IsoKey& b) { return a.bytes < b.bytes; }

    std::string hex() const;
};

struct IsoKeyHash {
    std::size_t operator()(const IsoKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

/// The canonical fingerprint of `p`.
IsoKey canonical_key(const Poset& p);

/// The canonical representative of `p`'s isomorphism class: the poset
/// whose relation matrix realizes the key. canonical_key(canonical_form(p))
/// equals canonical_key(p) and the matrix is a pure function of the class.
Poset canonical_form(const Poset& p);

/// Rebuilds the representative poset encoded in a key.
Poset poset_from_key(const IsoKey& key);

inline bool is_isomorphic(const Poset& p, const Poset& r) {
    return canonical_key(p) == canonical_key(r);
}

}  // namespace covtree
