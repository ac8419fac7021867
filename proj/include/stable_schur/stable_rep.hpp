#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "partitions.hpp"

namespace stable_schur {

enum class GroupFamily { Orthogonal, Symplectic, GeneralLinear };

inline std::string family_code(GroupFamily f) {
    switch (f) {
        case GroupFamily::Orthogonal: return "O";
        case GroupFamily::Symplectic: return "Sp";
        case GroupFamily::GeneralLinear: return "GL";
    }
    return "?";
}

inline GroupFamily parse_family(const std::string& code) {
    if (code == "O") return GroupFamily::Orthogonal;
    if (code == "Sp") return GroupFamily::Symplectic;
    if (code == "GL") return GroupFamily::GeneralLinear;
    throw DomainError("unknown group family: '" + code + "' (expected O, Sp or GL)");
}

/// Label of a simple or an indecomposable injective. For O and Sp only
/// `first` is used; for GL the label is the pair (first, second).
struct Label {
    Partition first;
    Partition second;

    auto operator<=>(const Label&) const = default;
    bool operator==(const Label&) const = default;
};

inline Label label(Partition p) { return {std::move(p), {}}; }
inline Label label(Partition a, Partition b) { return {std::move(a), std::move(b)}; }

inline bool is_pair_family(GroupFamily f) { return f == GroupFamily::GeneralLinear; }

inline int label_size(const Label& l) { return l.first.size() + l.second.size(); }

inline void check_label(GroupFamily f, const Label& l) {
    if (!is_pair_family(f) && !l.second.empty())
        throw DomainError(family_code(f) + " labels are single partitions, got a pair");
}

inline std::string to_string(GroupFamily f, const Label& l) {
    if (is_pair_family(f)) return "[" + to_string(l.first) + "," + to_string(l.second) + "]";
    return to_string(l.first);
}

/// Partition syntax for O/Sp; "[[2],[1]]" pair syntax for GL.
inline Label parse_label(GroupFamily f, const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (!is_pair_family(f)) return label(parse_partition(t));
    if (t.size() < 4 || t.front() != '[' || t.back() != ']') throw DomainError("malformed GL label: '" + text + "'");
    std::string body = t.substr(1, t.size() - 2);
    std::size_t split = body.find("],[");
    if (split == std::string::npos) {
        if (body == "[],[]") return {};
        throw DomainError("malformed GL label: '" + text + "'");
    }
    return label(parse_partition(body.substr(0, split + 1)), parse_partition(body.substr(split + 2)));
}

enum class Basis { Simple, Injective };

inline std::string basis_code(Basis b) { return b == Basis::Simple ? "simple" : "injective"; }

inline Basis parse_basis(const std::string& s) {
    if (s == "simple") return Basis::Simple;
    if (s == "injective") return Basis::Injective;
    throw DomainError("unknown basis: '" + s + "'");
}

/// A finite Z-combination of simple or of injective labels in K(Rep(G)).
class StableClass {
public:
    using Terms = std::map<Label, std::int64_t>;

    StableClass(GroupFamily family, Basis basis) : family_(family), basis_(basis) {}

    static StableClass single(GroupFamily family, Basis basis, const Label& l, std::int64_t coeff = 1) {
        StableClass c(family, basis);
        c.add(l, coeff);
        return c;
    }

    GroupFamily family() const { return family_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(const Label& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Label& l, std::int64_t coeff) {
        check_label(family_, l);
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(l, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    StableClass& operator+=(const StableClass& o) {
        if (o.family_ != family_) throw DomainError("family mismatch");
        if (o.basis_ != basis_) throw DomainError("basis mismatch");
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }

    StableClass operator-() const {
        StableClass out(family_, basis_);
        for (const auto& [l, c] : terms_) out.terms_.emplace(l, -c);
        return out;
    }

    friend StableClass operator+(StableClass a, const StableClass& b) { return a += b; }
    friend StableClass operator-(StableClass a, const StableClass& b) { return a += -b; }

    bool operator==(const StableClass&) const = default;

private:
    GroupFamily family_;
    Basis basis_;
    Terms terms_;
};

inline std::string to_string(const StableClass& c) {
    if (c.is_zero()) return "0";
    const char* sym = c.basis() == Basis::Simple ? "L^" : "S_";
    std::string out;
    bool first = true;
    // Largest labels first, matching the usual way decompositions are written.
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        auto [l, k] = *it;
        if (!first) out += k < 0 ? " - " : " + ";
        else if (k < 0) out += "-";
        first = false;
        std::int64_t mag = k < 0 ? -k : k;
        if (mag != 1) out += std::to_string(mag);
        out += std::string("[") + sym + to_string(c.family(), l) + "]";
    }
    return out;
}

/// Even rows for O and even columns for Sp; `Flipped` swaps them and exists
/// only so the verification suite can demonstrate that it detects the swap.
enum class BranchingConvention { Standard, Flipped };

namespace detail {

inline bool admissible_beta(GroupFamily f, const Partition& beta, BranchingConvention conv) {
    bool rows = (f == GroupFamily::Orthogonal) == (conv == BranchingConvention::Standard);
    return rows ? all_rows_even(beta) : all_columns_even(beta);
}

}  // namespace detail

/// Multiplicity b of the simple L^simple in the injective S_inj(C^∞).
inline std::int64_t branch_multiplicity(GroupFamily f, const Label& inj, const Label& simple,
                                        BranchingConvention conv = BranchingConvention::Standard) {
    check_label(f, inj);
    check_label(f, simple);
    if (f == GroupFamily::GeneralLinear) {
        int k = inj.first.size() - simple.first.size();
        if (k < 0 || inj.second.size() - simple.second.size() != k) return 0;
        std::int64_t total = 0;
        for (const auto& gamma : partitions_of(k))
            total += lr_coefficient(inj.first, simple.first, gamma) * lr_coefficient(inj.second, simple.second, gamma);
        return total;
    }
    int k = inj.first.size() - simple.first.size();
    if (k < 0 || k % 2 != 0) return 0;
    std::int64_t total = 0;
    for (const auto& beta : partitions_of(k))
        if (detail::admissible_beta(f, beta, conv)) total += lr_coefficient(inj.first, simple.first, beta);
    return total;
}

/// Simple labels that can occur in the socle filtration of S_inj.
inline std::vector<Label> candidate_simples(GroupFamily f, const Label& inj) {
    std::vector<Label> out;
    if (f == GroupFamily::GeneralLinear) {
        int kmax = std::min(inj.first.size(), inj.second.size());
        for (int k = 0; k <= kmax; ++k)
            for (const auto& a : subpartitions(inj.first, inj.first.size() - k))
                for (const auto& b : subpartitions(inj.second, inj.second.size() - k)) out.push_back(label(a, b));
        return out;
    }
    for (int s = inj.first.size(); s >= 0; s -= 2)
        for (const auto& m : subpartitions(inj.first, s)) out.push_back(label(m));
    return out;
}

namespace detail {

struct BranchRowCache {
    std::shared_mutex mutex;
    std::map<std::tuple<GroupFamily, BranchingConvention, Label>, StableClass::Terms> rows;
};

inline BranchRowCache& branch_row_cache() {
    static BranchRowCache cache;
    return cache;
}

inline const StableClass::Terms& branch_row(GroupFamily f, const Label& inj, BranchingConvention conv) {
    auto& cache = branch_row_cache();
    auto key = std::make_tuple(f, conv, inj);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.rows.find(key); it != cache.rows.end()) return it->second;
    }
    StableClass::Terms row;
    for (const auto& s : candidate_simples(f, inj))
        if (auto b = branch_multiplicity(f, inj, s, conv); b != 0) row.emplace(s, b);
    std::unique_lock lock(cache.mutex);
    // std::map nodes are stable, so the reference survives later insertions.
    return cache.rows.try_emplace(std::move(key), std::move(row)).first->second;
}

}  // namespace detail

inline StableClass injective_to_simples(const StableClass& c, BranchingConvention conv = BranchingConvention::Standard) {
    if (c.basis() != Basis::Injective) throw DomainError("injective_to_simples expects an injective-basis class");
    StableClass out(c.family(), Basis::Simple);
    for (const auto& [inj, k] : c.terms())
        for (const auto& [s, b] : detail::branch_row(c.family(), inj, conv)) out.add(s, k * b);
    return out;
}

/// Inverse of the unitriangular branching matrix, peeling off the largest label each step.
inline StableClass simples_to_injectives(const StableClass& c, BranchingConvention conv = BranchingConvention::Standard) {
    if (c.basis() != Basis::Simple) throw DomainError("simples_to_injectives expects a simple-basis class");
    StableClass out(c.family(), Basis::Injective);
    StableClass rest = c;
    while (!rest.is_zero()) {
        const Label* top = nullptr;
        for (const auto& [l, k] : rest.terms())
            if (!top || label_size(l) > label_size(*top)) top = &l;
        Label lead = *top;
        std::int64_t k = rest.coeff(lead);
        out.add(lead, k);
        for (const auto& [s, b] : detail::branch_row(c.family(), lead, conv)) rest.add(s, -k * b);
    }
    return out;
}

inline StableClass to_basis(const StableClass& c, Basis target, BranchingConvention conv = BranchingConvention::Standard) {
    if (c.basis() == target) return c;
    return target == Basis::Simple ? injective_to_simples(c, conv) : simples_to_injectives(c, conv);
}

/// [T^r] (O, Sp) or [T^{r,m}] (GL) in the injective basis.
inline StableClass decompose_tensor_power(GroupFamily f, int r, int m = 0) {
    if (r < 0 || m < 0) throw DomainError("tensor degrees must be nonnegative");
    if (f != GroupFamily::GeneralLinear && m != 0) throw DomainError("mixed tensor degree only applies to GL");
    StableClass out(f, Basis::Injective);
    for (const auto& lam : partitions_of(r)) {
        if (f == GroupFamily::GeneralLinear) {
            for (const auto& mu : partitions_of(m)) out.add(label(lam, mu), syt_count(lam) * syt_count(mu));
        } else {
            out.add(label(lam), syt_count(lam));
        }
    }
    return out;
}

}  // namespace stable_schur
