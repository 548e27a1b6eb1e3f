#include "covtree/poset.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace covtree {

namespace {

[[noreturn]] void throw_cycle(const std::vector<std::vector<int>>& up, int start) {
    // Walk forward until a vertex repeats, then report the loop.
    std::vector<int> order;
    std::vector<int> seen_at(up.size(), -1);
    int v = start;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(order.size());
        order.push_back(v);
        v = up[v].front();
    }
    std::ostringstream msg;
    msg << "cover relations contain a cycle:";
    for (std::size_t i = seen_at[v]; i < order.size(); ++i) msg << " " << order[i] << " <";
    msg << " " << v;
    throw std::invalid_argument(msg.str());
}

}  // namespace

Poset Poset::from_cover_relations(int size, const std::vector<std::pair<int, int>>& covers) {
    if (size < 0 || size > kMaxElements)
        throw std::invalid_argument("poset size must be between 0 and 64, got " +
                                    std::to_string(size));
    std::vector<std::vector<int>> up(size);
    std::vector<int> indegree(size, 0);
    for (auto [a, b] : covers) {
        if (a < 0 || a >= size || b < 0 || b >= size)
            throw std::invalid_argument("cover pair (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") out of range for size " +
                                        std::to_string(size));
        if (a == b)
            throw std::invalid_argument("cover pair relates element " + std::to_string(a) +
                                        " to itself");
        up[a].push_back(b);
        ++indegree[b];
    }

    // Kahn's algorithm; rows accumulate closed lower sets in topological order.
    std::vector<Mask> below(size, 0);
    std::vector<int> queue;
    queue.reserve(size);
    for (int v = 0; v < size; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : up[v]) {
            below[w] |= below[v] | bit(v);
            if (--indegree[w] == 0) queue.push_back(w);
        }
    }
    if (queue.size() != static_cast<std::size_t>(size)) {
        for (int v = 0; v < size; ++v)
            if (indegree[v] > 0) throw_cycle(up, v);
    }
    return from_closed_rows(std::move(below));
}

Poset Poset::from_closed_rows(std::vector<Mask> below) {
    Poset p;
    p.size_ = static_cast<int>(below.size());
    if (p.size_ > kMaxElements) throw std::invalid_argument("poset size exceeds 64");
    p.below_ = std::move(below);
    p.rebuild_above();
#ifndef NDEBUG
    p.check_axioms();
#endif
    return p;
}

void Poset::rebuild_above() {
    above_.assign(size_, 0);
    for (int b = 0; b < size_; ++b) {
        Mask m = below_[b];
        while (m) {
            int a = __builtin_ctzll(m);
            m &= m - 1;
            above_[a] |= bit(b);
        }
    }
}

void Poset::check_axioms() const {
    for (int b = 0; b < size_; ++b) {
        assert(!less(b, b) && "irreflexivity");
        assert((below_[b] & ~all_mask()) == 0 && "row within range");
        Mask m = below_[b];
        while (m) {
            int a = __builtin_ctzll(m);
            m &= m - 1;
            assert(!less(b, a) && "antisymmetry");
            assert((below_[a] & ~below_[b]) == 0 && "transitivity");
        }
    }
}

Mask Poset::maximal_elements() const {
    Mask out = 0;
    for (int v = 0; v < size_; ++v)
        if (above_[v] == 0) out |= bit(v);
    return out;
}

Mask Poset::minimal_elements() const {
    Mask out = 0;
    for (int v = 0; v < size_; ++v)
        if (below_[v] == 0) out |= bit(v);
    return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < size_; ++b) {
        Mask m = below_[b];
        while (m) {
            int a = __builtin_ctzll(m);
            m &= m - 1;
            // a covered by b iff nothing lies strictly between them.
            if ((below_[b] & above_[a]) == 0) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Poset::heights() const {
    std::vector<int> h(size_, 1);
    // Process by increasing |below|: every strict predecessor has a
    // strictly smaller lower set, so it is finished first.
    std::vector<int> order(size_);
    for (int i = 0; i < size_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return popcount(below_[x]) < popcount(below_[y]);
    });
    for (int v : order) {
        Mask m = below_[v];
        while (m) {
            int a = __builtin_ctzll(m);
            m &= m - 1;
            h[v] = std::max(h[v], h[a] + 1);
        }
    }
    return h;
}

int Poset::height() const {
    if (size_ == 0) return 0;
    auto h = heights();
    return *std::max_element(h.begin(), h.end());
}

HeightProfile Poset::height_profile() const {
    auto h = heights();
    std::sort(h.begin(), h.end());
    HeightProfile profile;
    for (int v : h) {
        if (!profile.empty() && profile.back().first == v)
            ++profile.back().second;
        else
            profile.emplace_back(v, 1);
    }
    return profile;
}

int Poset::component_count() const {
    int count = 0;
    Mask unseen = all_mask();
    while (unseen) {
        ++count;
        Mask frontier = bit(__builtin_ctzll(unseen));
        Mask comp = 0;
        while (frontier) {
            comp |= frontier;
            Mask next = 0;
            Mask m = frontier;
            while (m) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                next |= below_[v] | above_[v];
            }
            frontier = next & ~comp;
        }
        unseen &= ~comp;
    }
    return count;
}

InducedSubposet induced_subposet(const Poset& p, Mask subset) {
    if (subset & ~p.all_mask()) throw std::invalid_argument("subset not within poset elements");
    InducedSubposet out;
    out.elements.reserve(popcount(subset));
    Mask m = subset;
    while (m) {
        out.elements.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    std::vector<Mask> rows(out.elements.size(), 0);
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
        Mask src = p.strictly_below(out.elements[j]) & subset;
        // Compact source bits to the new index space.
        for (std::size_t i = 0; i < out.elements.size(); ++i)
            if (src & bit(out.elements[i])) rows[j] |= bit(static_cast<int>(i));
    }
    out.poset = Poset::from_closed_rows(std::move(rows));
    return out;
}

Poset disjoint_union(const Poset& p, const Poset& r) {
    int total = p.size() + r.size();
    if (total > kMaxElements)
        throw std::invalid_argument("disjoint union of " + std::to_string(p.size()) + " and " +
                                    std::to_string(r.size()) + " elements exceeds 64");
    std::vector<Mask> rows(total, 0);
    for (int v = 0; v < p.size(); ++v) rows[v] = p.strictly_below(v);
    for (int v = 0; v < r.size(); ++v) rows[p.size() + v] = r.strictly_below(v) << p.size();
    return Poset::from_closed_rows(std::move(rows));
}

Poset stack_above(const Poset& upper, const Poset& lower) {
    int total = upper.size() + lower.size();
    if (total > kMaxElements)
        throw std::invalid_argument("ordinal sum of " + std::to_string(upper.size()) + " and " +
                                    std::to_string(lower.size()) + " elements exceeds 64");
    std::vector<Mask> rows(total, 0);
    Mask lower_all = lower.all_mask();
    for (int v = 0; v < lower.size(); ++v) rows[v] = lower.strictly_below(v);
    for (int v = 0; v < upper.size(); ++v)
        rows[lower.size() + v] = (upper.strictly_below(v) << lower.size()) | lower_all;
    return Poset::from_closed_rows(std::move(rows));
}

Poset add_maximal_above(const Poset& p, Mask d) {
    if (!is_downset(p, d)) throw std::invalid_argument("strict past of a new element must be a downset");
    if (p.size() + 1 > kMaxElements) throw std::invalid_argument("poset would exceed 64 elements");
    std::vector<Mask> rows(p.rows());
    rows.push_back(d);
    return Poset::from_closed_rows(std::move(rows));
}

bool is_downset(const Poset& p, Mask m) {
    if (m & ~p.all_mask()) return false;
    Mask rest = m;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if (p.strictly_below(v) & ~m) return false;
    }
    return true;
}

Poset chain(int n) {
    std::vector<Mask> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = low_bits(v);
    return Poset::from_closed_rows(std::move(rows));
}

Poset antichain(int n) {
    return Poset::from_closed_rows(std::vector<Mask>(n, 0));
}

}  // namespace covtree
