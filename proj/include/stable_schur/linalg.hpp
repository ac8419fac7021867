#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace stable_schur::linalg {

using Index = std::uint64_t;

/// Sparse vector over Q: entries sorted by index, no explicit zeros.
class SparseVector {
public:
    using Entry = std::pair<Index, Rational>;

    SparseVector() = default;
    explicit SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) { canonicalize(); }

    static SparseVector unit(Index i, const Rational& v = 1) {
        SparseVector s;
        if (v != 0) s.entries_.emplace_back(i, v);
        return s;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    Index leading_index() const { return entries_.front().first; }
    const Rational& leading_value() const { return entries_.front().second; }

    Rational at(Index i) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i, [](const Entry& e, Index k) { return e.first < k; });
        return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
    }

    // this += a * x
    void add_scaled(const Rational& a, const SparseVector& x) {
        if (a == 0 || x.is_zero()) return;
        std::vector<Entry> out;
        out.reserve(entries_.size() + x.entries_.size());
        auto i = entries_.begin();
        auto j = x.entries_.begin();
        while (i != entries_.end() || j != x.entries_.end()) {
            if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
                out.push_back(std::move(*i++));
            } else if (i == entries_.end() || j->first < i->first) {
                out.emplace_back(j->first, a * j->second);
                ++j;
            } else {
                Rational v = i->second + a * j->second;
                if (v != 0) out.emplace_back(i->first, std::move(v));
                ++i;
                ++j;
            }
        }
        entries_ = std::move(out);
    }

    SparseVector& operator*=(const Rational& a) {
        if (a == 0) entries_.clear();
        for (auto& e : entries_) e.second *= a;
        return *this;
    }

    // Shift every index by `offset`; used to stack several constraint blocks.
    SparseVector shifted(Index offset) const {
        SparseVector out;
        out.entries_ = entries_;
        for (auto& e : out.entries_) e.first += offset;
        return out;
    }

    bool operator==(const SparseVector&) const = default;

private:
    void canonicalize() {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> out;
        for (auto& e : entries_) {
            if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
            else out.push_back(std::move(e));
        }
        std::erase_if(out, [](const Entry& e) { return e.second == 0; });
        entries_ = std::move(out);
    }

    std::vector<Entry> entries_;
};

inline SparseVector operator-(SparseVector a, const SparseVector& b) {
    a.add_scaled(-1, b);
    return a;
}

/// Incrementally built row-echelon basis: each vector is keyed by its leading
/// index and normalized so that the leading coefficient is 1.
class EchelonBasis {
public:
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const std::map<Index, SparseVector>& rows() const { return rows_; }

    std::vector<SparseVector> vectors() const {
        std::vector<SparseVector> out;
        out.reserve(rows_.size());
        for (const auto& [p, v] : rows_) out.push_back(v);
        return out;
    }

    /// Residual of v modulo the span; zero iff v lies in the span. Linear in v.
    SparseVector reduce(SparseVector v) const { return reduce_tracked(std::move(v), nullptr); }

    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    /// Coordinates of v along the basis vectors (in pivot order) or nullopt if v is outside the span.
    std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const {
        std::map<Index, Rational> coeffs;
        SparseVector r = reduce_tracked(v, &coeffs);
        if (!r.is_zero()) return std::nullopt;
        std::vector<Rational> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) {
            auto it = coeffs.find(p);
            out.push_back(it == coeffs.end() ? Rational(0) : it->second);
        }
        return out;
    }

    /// Adds v to the span; returns the normalized new basis vector when the span grew.
    std::optional<SparseVector> insert(SparseVector v) {
        SparseVector r = reduce(std::move(v));
        if (r.is_zero()) return std::nullopt;
        Rational lead = r.leading_value();
        r *= Rational(1) / lead;
        Index p = r.leading_index();
        rows_.emplace(p, r);
        return r;
    }

private:
    SparseVector reduce_tracked(SparseVector v, std::map<Index, Rational>* coeffs) const {
        if (rows_.empty()) return v;
        // Rows only touch indices ≥ their pivot, so one ascending sweep suffices.
        std::size_t k = 0;
        while (k < v.entries().size()) {
            const auto& [idx, val] = v.entries()[k];
            auto it = rows_.find(idx);
            if (it == rows_.end()) {
                ++k;
                continue;
            }
            Rational c = val;
            if (coeffs) (*coeffs)[idx] += c;
            v.add_scaled(-c, it->second);
            // entries before position k are untouched; entry k was eliminated.
        }
        return v;
    }

    std::map<Index, SparseVector> rows_;
};

/// Basis of {c : Σ_j c_j columns[j] = 0}, each element a sparse vector over column indices.
inline std::vector<SparseVector> nullspace(const std::vector<SparseVector>& columns) {
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };
    std::map<Index, Row> rows;
    std::vector<SparseVector> kernel;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVector v = columns[j];
        SparseVector combo = SparseVector::unit(j);
        std::size_t k = 0;
        while (k < v.entries().size()) {
            auto it = rows.find(v.entries()[k].first);
            if (it == rows.end()) {
                ++k;
                continue;
            }
            Rational c = v.entries()[k].second;
            v.add_scaled(-c, it->second.vec);
            combo.add_scaled(-c, it->second.combo);
        }
        if (v.is_zero()) {
            kernel.push_back(std::move(combo));
        } else {
            Rational inv = Rational(1) / v.leading_value();
            v *= inv;
            combo *= inv;
            Index p = v.leading_index();
            rows.emplace(p, Row{std::move(v), std::move(combo)});
        }
    }
    return kernel;
}

/// Σ_j combo_j vectors[j].
inline SparseVector combine(const SparseVector& combo, const std::vector<SparseVector>& vectors) {
    SparseVector out;
    for (const auto& [j, c] : combo.entries()) out.add_scaled(c, vectors[j]);
    return out;
}

inline std::size_t rank(const std::vector<SparseVector>& vectors) {
    EchelonBasis b;
    for (const auto& v : vectors) b.insert(v);
    return b.size();
}

}  // namespace stable_schur::linalg
