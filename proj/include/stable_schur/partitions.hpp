#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace stable_schur {

/// A weakly decreasing sequence of positive integers. Stored canonically
/// (no trailing zeros), so structural equality is partition equality.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // Row i (0-based); zero past the last row.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

/// Accepts "[3,1,1]", "[]", "∅" (surrounding whitespace ignored).
inline Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t == "∅" || t == "[]") return {};
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw DomainError("malformed partition: '" + text + "'");
    std::vector<int> parts;
    std::string body = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("malformed partition: '" + text + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j) ++out[j];
    return Partition(std::move(out));
}

/// μ ⊆ λ as Young diagrams.
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

/// All partitions of n, in reverse lexicographic order ([n] first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Partitions μ ⊆ λ with |μ| = size.
inline std::vector<Partition> subpartitions(const Partition& lambda, int size) {
    std::vector<Partition> out;
    if (size < 0 || size > lambda.size()) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row >= lambda.length()) return;
        int cap = std::min(lambda[row], row > 0 ? cur[row - 1] : lambda[row]);
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

inline bool all_rows_even(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int r) { return r % 2 == 0; });
}

inline bool all_columns_even(const Partition& p) { return all_rows_even(conjugate(p)); }

inline int hook_length(const Partition& lambda, const Partition& conj, int i, int j) {
    return lambda[i] - j + conj[j] - i - 1;
}

/// Number of standard Young tableaux of shape λ (hook length formula).
inline std::int64_t syt_count(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    BigInt num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) den *= hook_length(lambda, conj, i, j);
    return to_int64(BigInt(num / den));
}

/// dim S_λ(C^n) as a polynomial in n (hook content formula).
inline Polynomial schur_dim_polynomial(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    Polynomial p = Polynomial::constant(1);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int h = hook_length(lambda, conj, i, j);
            p = p * Polynomial({make_rational(j - i, h), make_rational(1, h)});
        }
    return p;
}

inline BigInt schur_dim_big(const Partition& lambda, std::int64_t n) {
    if (n < lambda.length()) return 0;
    Partition conj = conjugate(lambda);
    BigInt num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            num *= BigInt(static_cast<long>(n + j - i));
            den *= hook_length(lambda, conj, i, j);
        }
    return num / den;
}

/// dim S_λ(C^n); zero when n < length(λ).
inline std::int64_t schur_dim(const Partition& lambda, std::int64_t n) { return to_int64(schur_dim_big(lambda, n)); }

namespace detail {

// Counts LR fillings of λ/μ with content ν: rows weakly increase, columns
// strictly increase, and the reverse reading word is a lattice word.
inline std::int64_t count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int rows = lambda.length();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(lambda[i], 0);
    std::vector<int> counts(nu.length() + 1, 0);
    std::int64_t total = 0;

    // Cells in reading order: top to bottom, right to left.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.emplace_back(i, j);

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[k];
        int hi = nu.length();
        if (j + 1 < lambda[i]) hi = std::min(hi, fill[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= mu[i - 1]) lo = fill[i - 1][j] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts[v] >= nu[v - 1]) continue;
            if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;
            ++counts[v];
            fill[i][j] = v;
            self(self, k + 1);
            --counts[v];
        }
        fill[i][j] = 0;
    };
    rec(rec, 0);
    return total;
}

struct LrCache {
    std::shared_mutex mutex;
    std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> table;
};

inline LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

}  // namespace detail

/// Littlewood–Richardson coefficient c^λ_{μν}, memoized process-wide.
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size() || !contains(lambda, mu) || !contains(lambda, nu)) return 0;
    if (mu.empty()) return nu == lambda ? 1 : 0;
    if (nu.empty()) return mu == lambda ? 1 : 0;
    auto& cache = detail::lr_cache();
    auto key = std::make_tuple(lambda, mu, nu);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
    }
    std::int64_t value = detail::count_lr_tableaux(lambda, mu, nu);
    std::unique_lock lock(cache.mutex);
    cache.table.emplace(std::move(key), value);
    return value;
}

using LrEntry = std::tuple<Partition, Partition, Partition, std::int64_t>;

inline std::vector<LrEntry> lr_cache_snapshot() {
    auto& cache = detail::lr_cache();
    std::shared_lock lock(cache.mutex);
    std::vector<LrEntry> out;
    out.reserve(cache.table.size());
    for (const auto& [k, v] : cache.table) out.emplace_back(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
    return out;
}

inline void lr_cache_seed(const std::vector<LrEntry>& entries) {
    auto& cache = detail::lr_cache();
    std::unique_lock lock(cache.mutex);
    for (const auto& [l, m, n, v] : entries) cache.table.emplace(std::make_tuple(l, m, n), v);
}

}  // namespace stable_schur
