#pragma once

// Compositions, index tuples (codes of Schubert cells), permutations and the
// closure order between cells.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mcc {

// mu = (mu_1, ..., mu_N) with positive parts, n = sum of parts.
class composition {
public:
    composition() = default;
    explicit composition(std::vector<int> parts) : parts_(std::move(parts)) {
        partial_.push_back(0);
        for (int p : parts_) {
            if (p <= 0) throw invalid_input("composition parts must be positive");
            partial_.push_back(partial_.back() + p);
        }
    }
    static composition full_flag(int n) { return composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int blocks() const { return static_cast<int>(parts_.size()); }
    int n() const { return partial_.back(); }
    // mu^{(j)} = mu_1 + ... + mu_j, for j = 0..N.
    int partial(int j) const { return partial_[j]; }
    bool is_full_flag() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
    }

    friend bool operator==(const composition& a, const composition& b) { return a.parts_ == b.parts_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

private:
    std::vector<int> parts_;
    std::vector<int> partial_{};
};

class permutation {
public:
    permutation() = default;
    explicit permutation(std::vector<int> word) : w_(std::move(word)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int x : w_) {
            if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
                throw invalid_input("not a permutation: " + to_string());
            seen[x] = true;
        }
    }
    static permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return permutation(std::move(w));
    }
    static permutation longest(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return permutation(std::move(w));
    }

    int n() const { return static_cast<int>(w_.size()); }
    // w(i) for 1-based i.
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& word() const { return w_; }

    // w * s_i: swaps positions i and i+1.
    permutation times_simple(int i) const {
        permutation r = *this;
        std::swap(r.w_[i - 1], r.w_[i]);
        return r;
    }

    friend bool operator==(const permutation& a, const permutation& b) { return a.w_ == b.w_; }
    friend bool operator<(const permutation& a, const permutation& b) { return a.w_ < b.w_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
        return s;
    }

private:
    std::vector<int> w_;
};

// {(i, j) : i < j, w(i) > w(j)}
inline std::vector<std::pair<int, int>> inversions(const permutation& w) {
    std::vector<std::pair<int, int>> inv;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) inv.emplace_back(i, j);
    return inv;
}

inline int length(const permutation& w) { return static_cast<int>(inversions(w).size()); }

// Bruhat order by the tableau (rank matrix) criterion:
// u <= v iff #{a <= i : u(a) >= k} <= #{a <= i : v(a) >= k} for all i, k.
inline bool bruhat_leq(const permutation& u, const permutation& v) {
    if (u.n() != v.n()) throw invalid_input("bruhat_leq on permutations of different size");
    const int n = u.n();
    for (int k = 1; k <= n; ++k) {
        int cu = 0, cv = 0;
        for (int i = 1; i <= n; ++i) {
            cu += u(i) >= k;
            cv += v(i) >= k;
            if (cu > cv) return false;
        }
    }
    return true;
}

// All permutations of {1..n} in lexicographic order.
inline std::vector<permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Ordered primarily by length, then lexicographically.
inline std::vector<permutation> permutations_by_length(int n) {
    auto ps = all_permutations(n);
    std::stable_sort(ps.begin(), ps.end(),
                     [](const permutation& a, const permutation& b) { return length(a) < length(b); });
    return ps;
}

// I = (I_1, ..., I_N): disjoint subsets of {1..n} with |I_j| = mu_j.
class index_tuple {
public:
    index_tuple() = default;
    index_tuple(composition mu, std::vector<std::vector<int>> blocks) : mu_(std::move(mu)), blocks_(std::move(blocks)) {
        if (static_cast<int>(blocks_.size()) != mu_.blocks()) throw invalid_input("wrong number of blocks");
        std::vector<bool> seen(static_cast<std::size_t>(mu_.n()) + 1, false);
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            auto& b = blocks_[j];
            std::sort(b.begin(), b.end());
            if (static_cast<int>(b.size()) != mu_.parts()[j]) throw invalid_input("block size does not match mu");
            for (int x : b) {
                if (x < 1 || x > mu_.n() || seen[x]) throw invalid_input("blocks must partition {1..n}");
                seen[x] = true;
            }
        }
        std::vector<int> acc;
        for (const auto& b : blocks_) {
            acc.insert(acc.end(), b.begin(), b.end());
            std::vector<int> u = acc;
            std::sort(u.begin(), u.end());
            unions_.push_back(std::move(u));
        }
    }
    // ({w(1)}, ..., {w(n)})
    static index_tuple from_permutation(const permutation& w) {
        std::vector<std::vector<int>> blocks;
        for (int x : w.word()) blocks.push_back({x});
        return index_tuple(composition::full_flag(w.n()), std::move(blocks));
    }

    const composition& mu() const { return mu_; }
    int n() const { return mu_.n(); }
    int blocks() const { return mu_.blocks(); }
    // I_j, 1-based j, sorted.
    const std::vector<int>& block(int j) const { return blocks_[j - 1]; }
    const std::vector<std::vector<int>>& all_blocks() const { return blocks_; }
    // I^{(j)} = I_1 u ... u I_j sorted, 1-based j.
    const std::vector<int>& union_upto(int j) const { return unions_[j - 1]; }

    permutation to_permutation() const {
        if (!mu_.is_full_flag()) throw invalid_input("index tuple is not a full flag code");
        std::vector<int> w;
        for (const auto& b : blocks_) w.push_back(b[0]);
        return permutation(std::move(w));
    }

    friend bool operator==(const index_tuple& a, const index_tuple& b) {
        return a.mu_ == b.mu_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const index_tuple& a, const index_tuple& b) { return a.blocks_ < b.blocks_; }

    // "{1,3},{2}"
    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            s += j ? ",{" : "{";
            for (std::size_t k = 0; k < blocks_[j].size(); ++k)
                s += (k ? "," : "") + std::to_string(blocks_[j][k]);
            s += "}";
        }
        return s;
    }

private:
    composition mu_;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::vector<int>> unions_;
};

// ell(I) = #{(a, b) : a > b, a in I_j, b in I_k, j < k}
inline int length(const index_tuple& I) {
    int count = 0;
    for (int j = 1; j <= I.blocks(); ++j)
        for (int k = j + 1; k <= I.blocks(); ++k)
            for (int a : I.block(j))
                for (int b : I.block(k)) count += a > b;
    return count;
}

// All tuples of I_mu, lexicographic on the tuple of sorted blocks.
inline std::vector<index_tuple> enumerate_index_tuples(const composition& mu) {
    std::vector<index_tuple> out;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(mu.blocks()));
    std::vector<bool> used(static_cast<std::size_t>(mu.n()) + 1, false);

    // Chooses block j by extending a lexicographic combination.
    auto rec = [&](auto&& self, int j) -> void {
        if (j == mu.blocks()) {
            out.emplace_back(mu, blocks);
            return;
        }
        auto& b = blocks[j];
        auto fill = [&](auto&& fill_self, int start) -> void {
            if (static_cast<int>(b.size()) == mu.parts()[j]) {
                self(self, j + 1);
                return;
            }
            for (int x = start; x <= mu.n(); ++x) {
                if (used[x]) continue;
                used[x] = true;
                b.push_back(x);
                fill_self(fill_self, x + 1);
                b.pop_back();
                used[x] = false;
            }
        };
        fill(fill, 1);
    };
    rec(rec, 0);
    return out;
}

// #{i in I^{(p)} : i > n - q}: dim(V_p cap C^q_last) on the cell of I.
inline int rank_statistic(const index_tuple& I, int p, int q) {
    int c = 0;
    for (int i : I.union_upto(p)) c += i > I.n() - q;
    return c;
}

// True iff the cell of J lies in the closure of the cell of I. The dimensions
// dim(V_p cap C^q_last) can only jump up under specialization.
inline bool closure_leq(const index_tuple& I, const index_tuple& J) {
    if (!(I.mu() == J.mu())) throw invalid_input("closure_leq on different compositions");
    for (int p = 1; p <= I.blocks(); ++p)
        for (int q = 1; q <= I.n(); ++q)
            if (rank_statistic(J, p, q) < rank_statistic(I, p, q)) return false;
    return true;
}

// Parses "{1,3},{2}" (braces optional around singletons is not supported).
inline index_tuple parse_index_tuple(const composition& mu, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    bool open = false;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : text) {
        if (c == '{') {
            if (open) throw invalid_input("nested '{' in index tuple");
            open = true;
        } else if (c == '}') {
            flush();
            if (!open) throw invalid_input("unbalanced '}' in index tuple");
            blocks.push_back(cur);
            cur.clear();
            open = false;
        } else if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            num += c;
        } else if (c != ' ') {
            throw invalid_input(std::string("unexpected character '") + c + "' in index tuple");
        }
    }
    if (open) throw invalid_input("unterminated block in index tuple");
    return index_tuple(mu, std::move(blocks));
}

}  // namespace mcc
