#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "error.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "stable_rep.hpp"

namespace stable_schur {

/// Dimension of the defining space at level n: C^n for O and GL, C^{2n} for Sp_{2n}.
inline std::int64_t defining_dim(GroupFamily f, std::int64_t n) { return f == GroupFamily::Symplectic ? 2 * n : n; }

/// dim Γ_n(S_label), the value of the injective at level n.
inline BigInt injective_dim_big(GroupFamily f, const Label& l, std::int64_t n) {
    check_label(f, l);
    BigInt d = schur_dim_big(l.first, defining_dim(f, n));
    if (f == GroupFamily::GeneralLinear) d *= schur_dim_big(l.second, n);
    return d;
}

inline std::int64_t injective_dim(GroupFamily f, const Label& l, std::int64_t n) {
    return to_int64(injective_dim_big(f, l, n));
}

inline Polynomial injective_dim_polynomial(GroupFamily f, const Label& l) {
    check_label(f, l);
    Polynomial p = schur_dim_polynomial(l.first);
    if (f == GroupFamily::Symplectic) return p.compose_affine(2, 0);
    if (f == GroupFamily::GeneralLinear) return p * schur_dim_polynomial(l.second);
    return p;
}

/// Least n at which the simple labelled `l` specializes to a nonzero irrep:
/// λ†₁+λ†₂ for O, length(λ) for Sp, length(α)+length(β) for GL.
inline int admissibility_bound(GroupFamily f, const Label& l) {
    switch (f) {
        case GroupFamily::Orthogonal: {
            Partition c = conjugate(l.first);
            return c[0] + c[1];
        }
        case GroupFamily::Symplectic: return l.first.length();
        case GroupFamily::GeneralLinear: return l.first.length() + l.second.length();
    }
    return 0;
}

struct FiniteIrrepLabel {
    GroupFamily family;
    int n;
    Label weight;

    bool operator==(const FiniteIrrepLabel&) const = default;
};

inline bool admissible(GroupFamily f, const Label& l, std::int64_t n) { return n >= admissibility_bound(f, l); }

inline FiniteIrrepLabel make_irrep(GroupFamily f, int n, Label weight) {
    check_label(f, weight);
    if (n < 0) throw DomainError("level must be nonnegative");
    if (!admissible(f, weight, n))
        throw DomainError(to_string(f, weight) + " is not an admissible highest weight at n = " + std::to_string(n));
    return {f, n, std::move(weight)};
}

/// Γ_n(L^λ): the irrep with the same label when admissible, otherwise zero (nullopt).
inline std::optional<FiniteIrrepLabel> specialize_simple(GroupFamily f, const Label& l, int n) {
    check_label(f, l);
    if (n < 0) throw DomainError("level must be nonnegative");
    if (!admissible(f, l, n)) return std::nullopt;
    return FiniteIrrepLabel{f, n, l};
}

struct IrrepDim {
    std::int64_t value;
    // True when n ≥ 2|μ|, the range in which the stable branching solve is trusted.
    bool validated;
};

namespace detail {

inline std::int64_t solve_irrep_dim(GroupFamily f, const Label& mu, std::int64_t n, std::map<Label, std::int64_t>& memo) {
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    // dim S_μ(level n) = Σ_ν b_{μν} dim V_ν(n), with b_{μμ} = 1 and |ν| < |μ| otherwise.
    std::int64_t value = injective_dim(f, mu, n);
    for (const auto& nu : candidate_simples(f, mu)) {
        if (nu == mu) continue;
        if (auto b = branch_multiplicity(f, mu, nu); b != 0) value -= b * solve_irrep_dim(f, nu, n, memo);
    }
    memo.emplace(mu, value);
    return value;
}

}  // namespace detail

inline IrrepDim stable_irrep_dim(const FiniteIrrepLabel& irrep) {
    check_label(irrep.family, irrep.weight);
    if (!admissible(irrep.family, irrep.weight, irrep.n))
        throw DomainError(to_string(irrep.family, irrep.weight) + " is not admissible at n = " + std::to_string(irrep.n));
    std::map<Label, std::int64_t> memo;
    std::int64_t v = detail::solve_irrep_dim(irrep.family, irrep.weight, irrep.n, memo);
    return {v, irrep.n >= 2 * label_size(irrep.weight)};
}

/// Σ_i (-1)^i dim R^iΓ_n(L^λ), via [L^λ] = Σ_μ (b⁻¹)_{λμ} [S_μ].
inline std::int64_t euler_specialization(GroupFamily f, const Label& l, std::int64_t n) {
    if (n < 0) throw DomainError("level must be nonnegative");
    StableClass inj = simples_to_injectives(StableClass::single(f, Basis::Simple, l));
    std::int64_t total = 0;
    for (const auto& [mu, k] : inj.terms()) total += k * injective_dim(f, mu, n);
    return total;
}

inline constexpr int kDefaultVanishingHorizon = 64;

/// Least N (at least the admissibility bound) such that the Euler characteristic
/// agrees with the specialized irrep dimension for every N ≤ n ≤ horizon.
inline int vanishing_degree(GroupFamily f, const Label& l, int horizon = kDefaultVanishingHorizon) {
    int bound = admissibility_bound(f, l);
    if (horizon < bound) throw DomainError("vanishing horizon below the admissibility bound");
    int least = horizon + 1;
    for (int n = horizon; n >= 0; --n) {
        auto irrep = specialize_simple(f, l, n);
        std::int64_t expected = irrep ? stable_irrep_dim(*irrep).value : 0;
        if (euler_specialization(f, l, n) != expected) break;
        least = n;
    }
    return std::max(bound, least);
}

}  // namespace stable_schur
