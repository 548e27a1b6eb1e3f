#include "covtree/canonical.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace covtree {

namespace {

// One staircase step: the relation bits between the element placed at
// position p and the p elements placed before it, packed so that integer
// comparison matches bit-sequence comparison (earlier positions are more
// significant). `to` holds "new < placed[q]" bits, `from` the reverse.
struct Extension {
    Mask to = 0;
    Mask from = 0;

    friend bool operator<(const Extension& a, const Extension& b) {
        if (a.to != b.to) return a.to < b.to;
        return a.from < b.from;
    }
    friend bool operator==(const Extension& a, const Extension& b) {
        return a.to == b.to && a.from == b.from;
    }
};

// Iterated partition refinement on the cover digraph. Color ids are
// assigned by sorting signature content, so isomorphic posets receive
// identical colorings regardless of labeling.
std::vector<int> refined_colors(const Poset& p) {
    int n = p.size();
    std::vector<Mask> cover_up(n, 0), cover_down(n, 0);
    for (auto [a, b] : p.covers()) {
        cover_up[a] |= bit(b);
        cover_down[b] |= bit(a);
    }
    auto h = p.heights();

    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v)
        sig[v] = {h[v], popcount(cover_down[v]), popcount(cover_up[v]),
                  popcount(p.strictly_below(v)), popcount(p.strictly_above(v))};

    std::vector<int> color(n, 0);
    int num_colors = 0;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        int count = static_cast<int>(sorted.size());
        if (count == num_colors || count == n) break;
        num_colors = count;

        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(color[v]);
            s.push_back(-1);
            std::size_t mark = s.size();
            for (Mask m = cover_down[v]; m; m &= m - 1) s.push_back(color[__builtin_ctzll(m)]);
            std::sort(s.begin() + mark, s.end());
            s.push_back(-2);
            mark = s.size();
            for (Mask m = cover_up[v]; m; m &= m - 1) s.push_back(color[__builtin_ctzll(m)]);
            std::sort(s.begin() + mark, s.end());
        }
    }
    return color;
}

// Searches color-respecting orderings for the one minimizing the
// staircase string, with interchangeable elements (equal strict pasts and
// futures) tried once per node.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()) {
        color_ = refined_colors(p);
        color_mask_.assign(*std::max_element(color_.begin(), color_.end()) + 1, 0);
        for (int v = 0; v < n_; ++v) color_mask_[color_[v]] |= bit(v);
        slot_color_.reserve(n_);
        for (std::size_t c = 0; c < color_mask_.size(); ++c)
            for (int i = 0; i < popcount(color_mask_[c]); ++i)
                slot_color_.push_back(static_cast<int>(c));

        twin_.resize(n_);
        std::unordered_map<Mask, std::unordered_map<Mask, int>> groups;
        for (int v = 0; v < n_; ++v) {
            auto& inner = groups[p.strictly_below(v)];
            twin_[v] = inner.emplace(p.strictly_above(v), v).first->second;
        }
    }

    std::vector<int> run() {
        if (n_ == 0) return {};
        perm_.assign(n_, -1);
        cur_.assign(n_, Extension{});
        best_.assign(n_, Extension{});
        best_perm_.clear();
        descend(0, false);
        assert(static_cast<int>(best_perm_.size()) == n_);
        return best_perm_;
    }

private:
    // `tight` means the staircase prefix cur_[0..pos) equals best_[0..pos);
    // when false, either no best exists yet or the prefix is strictly
    // smaller and every completion improves on best.
    void descend(int pos, bool tight) {
        if (pos == n_) {
            best_ = cur_;
            best_perm_ = perm_;
            has_best_ = true;
            ++best_gen_;
            return;
        }
        Mask candidates = color_mask_[slot_color_[pos]] & ~placed_;
        std::array<std::pair<Extension, int>, kMaxElements> order;
        int count = 0;
        Mask twin_seen = 0;
        for (Mask m = candidates; m; m &= m - 1) {
            int e = __builtin_ctzll(m);
            if (twin_seen & bit(twin_[e])) continue;
            twin_seen |= bit(twin_[e]);
            Extension ext;
            for (int q = 0; q < pos; ++q) {
                int f = perm_[q];
                ext.to |= Mask{p_.less(e, f)} << (63 - q);
                ext.from |= Mask{p_.less(f, e)} << (63 - q);
            }
            order[count++] = {ext, e};
        }
        std::sort(order.begin(), order.begin() + count);

        for (int i = 0; i < count; ++i) {
            const auto& [ext, e] = order[i];
            bool child_tight = false;
            if (tight) {
                if (best_[pos] < ext) break;  // sorted, so the rest are no smaller
                child_tight = ext == best_[pos];
            }
            cur_[pos] = ext;
            perm_[pos] = e;
            placed_ |= bit(e);
            std::uint64_t gen = best_gen_;
            descend(pos + 1, child_tight);
            placed_ &= ~bit(e);
            // A best installed inside the subtree extends our prefix, so
            // later siblings compare tightly against it.
            if (best_gen_ != gen) tight = true;
        }
    }

    const Poset& p_;
    int n_;
    std::vector<int> color_;
    std::vector<Mask> color_mask_;
    std::vector<int> slot_color_;
    std::vector<int> twin_;
    std::vector<int> perm_;
    std::vector<Extension> cur_, best_;
    std::vector<int> best_perm_;
    Mask placed_ = 0;
    bool has_best_ = false;
    std::uint64_t best_gen_ = 0;
};

}  // namespace

std::string IsoKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

Poset canonical_form(const Poset& p) {
    CanonicalSearch search(p);
    std::vector<int> perm = search.run();
    int n = p.size();
    std::vector<Mask> rows(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (p.less(perm[i], perm[j])) rows[j] |= bit(i);
    return Poset::from_closed_rows(std::move(rows));
}

IsoKey canonical_key(const Poset& p) {
    Poset canon = canonical_form(p);
    int n = canon.size();
    IsoKey key;
    key.bytes.assign(1 + (n * n + 7) / 8, '\0');
    key.bytes[0] = static_cast<char>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (canon.less(i, j)) {
                int t = i * n + j;
                key.bytes[1 + t / 8] |= static_cast<char>(1 << (7 - t % 8));
            }
    return key;
}

Poset poset_from_key(const IsoKey& key) {
    if (key.bytes.empty()) throw std::invalid_argument("empty key");
    int n = static_cast<unsigned char>(key.bytes[0]);
    if (key.bytes.size() != 1 + static_cast<std::size_t>(n * n + 7) / 8)
        throw std::invalid_argument("key length does not match its size header");
    std::vector<Mask> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int t = i * n + j;
            if ((key.bytes[1 + t / 8] >> (7 - t % 8)) & 1) rows[j] |= bit(i);
        }
    return Poset::from_closed_rows(std::move(rows));
}

}  // namespace covtree
