#pragma once

/**
 * @file chain_poset.hpp
 * @brief The pair poset (M, <) of a block partition and its minimum chain cover.
 *
 * Generators are split into blocks A_1, ..., A_p. M holds every ordered pair
 * (x, y) with x in A_q, y in A_j and q >= j. For distinct elements
 *
 *     (x, y) in A_l x A_j  <  (x', y') in A_m x A_r   iff   m >= r > l >= j.
 *
 * Since m >= r and l >= j hold for every element of M, the test reduces to
 * "right block of the larger element exceeds the left block of the smaller".
 *
 * The width is max_q |B_q| with |B_q| = (|A_q| + ... + |A_p|)(|A_1| + ... + |A_q|),
 * and a minimum chain cover (Dilworth) comes from a maximum matching in the
 * bipartite graph u -> v, u < v.
 */

#include "qnil/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace qnil {

class block_partition {
public:
    block_partition() = default;
    explicit block_partition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw domain_error("a block partition needs at least one block");
        for (std::size_t b = 0; b < sizes_.size(); ++b)
            for (std::size_t i = 0; i < sizes_[b]; ++i) block_of_.push_back(b);
    }

    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t blocks() const { return sizes_.size(); }
    std::size_t n() const { return block_of_.size(); }
    // generators are numbered 0..n-1 block by block
    std::size_t block_of(std::size_t generator) const { return block_of_.at(generator); }

    std::size_t first_generator(std::size_t block) const {
        return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(block), std::size_t{0});
    }

    // x1, x2, ..., xn
    std::vector<std::string> default_names() const {
        std::vector<std::string> names;
        for (std::size_t g = 0; g < n(); ++g) names.push_back("x" + std::to_string(g + 1));
        return names;
    }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> block_of_;
};

struct pair_element {
    std::size_t left = 0, right = 0;              // generator indices
    std::size_t left_block = 0, right_block = 0;  // 0-based, left_block >= right_block

    bool operator==(const pair_element&) const = default;
};

// Strict order on M.
inline bool precedes(const pair_element& u, const pair_element& v) { return v.right_block > u.left_block; }

struct block_poset {
    block_partition partition;
    // ordered by (left_block, right_block), then left, then right
    std::vector<pair_element> elements;

    std::size_t size() const { return elements.size(); }
    bool precedes(std::size_t u, std::size_t v) const { return qnil::precedes(elements[u], elements[v]); }
};

inline block_poset build_poset(const block_partition& bp) {
    if (bp.blocks() == 0) throw domain_error("build_poset: empty partition");
    block_poset poset{bp, {}};
    for (std::size_t q = 0; q < bp.blocks(); ++q) {
        for (std::size_t j = 0; j <= q; ++j) {
            const std::size_t lq = bp.first_generator(q), lj = bp.first_generator(j);
            for (std::size_t x = lq; x < lq + bp.sizes()[q]; ++x)
                for (std::size_t y = lj; y < lj + bp.sizes()[j]; ++y) poset.elements.push_back({x, y, q, j});
        }
    }
    return poset;
}

struct width_result {
    std::size_t value = 0;
    std::size_t q = 1;              // 1-based maximizing block index (first maximum)
    std::vector<std::size_t> per_q;  // |B_1|, ..., |B_p|
};

inline width_result width(const block_partition& bp) {
    width_result out;
    const auto& a = bp.sizes();
    const std::size_t n = bp.n();
    std::size_t before = 0;  // |A_1| + ... + |A_{q-1}|
    for (std::size_t q = 0; q < a.size(); ++q) {
        const std::size_t b = (n - before) * (before + a[q]);
        out.per_q.push_back(b);
        if (b > out.value || q == 0) {
            out.value = b;
            out.q = q + 1;
        }
        before += a[q];
    }
    return out;
}

// Element indices of B_q (1-based q): pairs whose left block is >= q and right block <= q.
inline std::vector<std::size_t> antichain(const block_poset& poset, std::size_t q) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < poset.size(); ++i) {
        const auto& e = poset.elements[i];
        if (e.left_block + 1 >= q && e.right_block + 1 <= q) out.push_back(i);
    }
    return out;
}

struct chain_cover {
    // element indices into the poset, each chain increasing under <
    std::vector<std::vector<std::size_t>> chains;
    std::size_t matching_size = 0;
};

inline constexpr std::size_t default_cover_cap = 5000;

namespace detail {

// Hopcroft-Karp on the comparability graph of the poset.
class poset_matcher {
public:
    explicit poset_matcher(const block_poset& poset) : poset_(poset), size_(poset.size()) {
        // successors of u are the elements whose right block exceeds u's left block
        const std::size_t p = poset.partition.blocks();
        successors_by_block_.resize(p);
        for (std::size_t l = 0; l < p; ++l)
            for (std::size_t v = 0; v < size_; ++v)
                if (poset.elements[v].right_block > l) successors_by_block_[l].push_back(v);
        match_left_.assign(size_, none);
        match_right_.assign(size_, none);
    }

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs()) {
            cursor_.assign(size_, 0);
            for (std::size_t u = 0; u < size_; ++u)
                if (match_left_[u] == none && dfs(u)) ++matched;
        }
        return matched;
    }

    const std::vector<std::size_t>& match_left() const { return match_left_; }
    const std::vector<std::size_t>& match_right() const { return match_right_; }

    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

private:
    const std::vector<std::size_t>& adj(std::size_t u) const {
        return successors_by_block_[poset_.elements[u].left_block];
    }

    bool bfs() {
        dist_.assign(size_, none);
        std::queue<std::size_t> queue;
        for (std::size_t u = 0; u < size_; ++u)
            if (match_left_[u] == none) {
                dist_[u] = 0;
                queue.push(u);
            }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adj(u)) {
                const std::size_t w = match_right_[v];
                if (w == none)
                    found = true;
                else if (dist_[w] == none) {
                    dist_[w] = dist_[u] + 1;
                    queue.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        const auto& next = adj(u);
        for (std::size_t& i = cursor_[u]; i < next.size(); ++i) {
            const std::size_t v = next[i];
            const std::size_t w = match_right_[v];
            if (w == none || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                ++i;
                return true;
            }
        }
        dist_[u] = none;
        return false;
    }

    const block_poset& poset_;
    std::size_t size_;
    std::vector<std::vector<std::size_t>> successors_by_block_;
    std::vector<std::size_t> match_left_, match_right_, dist_, cursor_;
};

}  // namespace detail

/// Minimum chain cover; the chain count equals the width of the poset.
inline chain_cover min_chain_cover(const block_poset& poset, std::size_t cap = default_cover_cap) {
    if (poset.size() > cap)
        throw cap_exceeded("min_chain_cover: |M| = " + std::to_string(poset.size()) + " exceeds the cap of " +
                           std::to_string(cap));
    detail::poset_matcher matcher(poset);
    chain_cover cover;
    cover.matching_size = matcher.run();
    for (std::size_t start = 0; start < poset.size(); ++start) {
        if (matcher.match_right()[start] != detail::poset_matcher::none) continue;  // has a predecessor
        std::vector<std::size_t> chain;
        for (std::size_t u = start; u != detail::poset_matcher::none; u = matcher.match_left()[u]) chain.push_back(u);
        cover.chains.push_back(std::move(chain));
    }
    if (cover.chains.size() != width(poset.partition).value)
        throw std::logic_error("min_chain_cover: chain count differs from the width");
    return cover;
}

inline chain_cover min_chain_cover(const block_partition& bp, std::size_t cap = default_cover_cap) {
    return min_chain_cover(build_poset(bp), cap);
}

}  // namespace qnil
