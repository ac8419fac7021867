#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "specialization.hpp"
#include "stable_rep.hpp"

namespace stable_schur {

/// Element of K(A): a stable part in K(Rep(G)) plus, for each degree n,
/// a class in K(Rep(G_n)) on the basis of finite irreps.
class KClass {
public:
    using TorsionTerms = std::map<Label, std::int64_t>;

    explicit KClass(GroupFamily family, Basis stable_basis = Basis::Injective) : stable_(family, stable_basis) {}
    explicit KClass(StableClass stable) : stable_(std::move(stable)) {}

    GroupFamily family() const { return stable_.family(); }
    const StableClass& stable() const { return stable_; }
    const std::map<int, TorsionTerms>& torsion() const { return torsion_; }
    bool is_zero() const { return stable_.is_zero() && torsion_.empty(); }

    void add_stable(const Label& l, std::int64_t coeff) { stable_.add(l, coeff); }

    void add_torsion(int degree, const Label& l, std::int64_t coeff) {
        make_irrep(family(), degree, l);  // admissibility check
        if (coeff == 0) return;
        auto& terms = torsion_[degree];
        terms[l] += coeff;
        if (terms[l] == 0) terms.erase(l);
        if (terms.empty()) torsion_.erase(degree);
    }

    void set_stable(StableClass s) {
        if (s.family() != family()) throw DomainError("family mismatch");
        stable_ = std::move(s);
    }

    bool operator==(const KClass&) const = default;

private:
    StableClass stable_;
    std::map<int, TorsionTerms> torsion_;
};

/// Componentwise sum; stable parts in different bases meet in the injective basis.
inline KClass kclass_add(const KClass& a, const KClass& b) {
    if (a.family() != b.family()) throw DomainError("family mismatch: " + family_code(a.family()) + " vs " + family_code(b.family()));
    StableClass sa = a.stable(), sb = b.stable();
    if (sa.basis() != sb.basis()) {
        sa = to_basis(sa, Basis::Injective);
        sb = to_basis(sb, Basis::Injective);
    }
    KClass out(sa + sb);
    for (const auto* c : {&a, &b})
        for (const auto& [deg, terms] : c->torsion())
            for (const auto& [l, k] : terms) out.add_torsion(deg, l, k);
    return out;
}

inline KClass kclass_negate(const KClass& a) {
    KClass out(-a.stable());
    for (const auto& [deg, terms] : a.torsion())
        for (const auto& [l, k] : terms) out.add_torsion(deg, l, -k);
    return out;
}

inline KClass kclass_convert(const KClass& a, Basis target) {
    KClass out(to_basis(a.stable(), target));
    for (const auto& [deg, terms] : a.torsion())
        for (const auto& [l, k] : terms) out.add_torsion(deg, l, k);
    return out;
}

struct HilbertValue {
    std::int64_t value;
    bool exact;
};

/// Stable-range threshold for reading an Euler characteristic of L^λ as dim Γ_n(L^λ).
inline int simple_exact_threshold(GroupFamily f, const Label& l) {
    return std::max(vanishing_degree(f, l), 2 * label_size(l));
}

inline HilbertValue hilbert_function(const KClass& c, int n) {
    if (n < 0) throw DomainError("level must be nonnegative");
    HilbertValue hv{0, true};
    const GroupFamily f = c.family();
    for (const auto& [l, k] : c.stable().terms()) {
        if (c.stable().basis() == Basis::Injective) {
            hv.value += k * injective_dim(f, l, n);
        } else {
            hv.value += k * euler_specialization(f, l, n);
            if (n < simple_exact_threshold(f, l)) hv.exact = false;
        }
    }
    if (auto it = c.torsion().find(n); it != c.torsion().end()) {
        for (const auto& [l, k] : it->second) {
            IrrepDim d = stable_irrep_dim(make_irrep(f, n, l));
            hv.value += k * d.value;
            hv.exact = hv.exact && d.validated;
        }
    }
    return hv;
}

/// The torsion part contributes nothing; the stable part is summed over
/// injective-basis dimension polynomials.
inline Polynomial hilbert_polynomial(const KClass& c) {
    StableClass inj = to_basis(c.stable(), Basis::Injective);
    Polynomial p;
    for (const auto& [l, k] : inj.terms()) p += injective_dim_polynomial(c.family(), l) * Rational(static_cast<long>(k));
    return p;
}

/// numerator(t) / (1 - t)^denom_power, kept reduced.
struct RationalSeries {
    std::vector<std::int64_t> numerator;
    int denom_power = 0;

    // Coefficient of t^n in the expansion.
    BigInt coefficient(int n) const {
        BigInt total = 0;
        for (int i = 0; i < static_cast<int>(numerator.size()) && i <= n; ++i) {
            if (numerator[i] == 0) continue;
            // [t^m] (1-t)^{-d} = C(m + d - 1, d - 1)
            int m = n - i;
            BigInt binom;
            if (denom_power == 0) binom = (m == 0) ? 1 : 0;
            else mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + denom_power - 1), static_cast<unsigned long>(denom_power - 1));
            total += BigInt(static_cast<long>(numerator[i])) * binom;
        }
        return total;
    }

    bool operator==(const RationalSeries&) const = default;
};

inline std::string to_string(const RationalSeries& s) {
    std::vector<Rational> coeffs(s.numerator.begin(), s.numerator.end());
    std::string num = Polynomial(coeffs).to_string("t");
    if (s.denom_power == 0) return num;
    std::string den = s.denom_power == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(s.denom_power);
    return "(" + num + ") / " + den;
}

inline RationalSeries hilbert_series(const KClass& c) {
    if (c.stable().basis() != Basis::Injective && !c.stable().is_zero())
        throw DomainError("hilbert_series needs the stable part in the injective basis; convert first");
    for (const auto& [deg, terms] : c.torsion())
        for (const auto& [l, k] : terms)
            if (!stable_irrep_dim(make_irrep(c.family(), deg, l)).validated)
                throw DomainError("torsion label " + to_string(c.family(), l) + " at degree " + std::to_string(deg) +
                                  " is outside the validated dimension range");

    Polynomial p = hilbert_polynomial(c);
    const int d = p.is_zero() ? 0 : p.degree() + 1;

    std::vector<BigInt> binom(d + 1);
    for (int i = 0; i <= d; ++i) mpz_bin_uiui(binom[i].get_mpz_t(), d, i);

    // (1-t)^d Σ p(n) t^n is a polynomial of degree < d.
    std::vector<BigInt> num(d, 0);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i <= j; ++i) {
            BigInt term = binom[i] * BigInt(to_int64(p(Rational(j - i))));
            num[j] += (i % 2 == 0) ? term : BigInt(-term);
        }
    for (const auto& [deg, terms] : c.torsion()) {
        BigInt dim = 0;
        for (const auto& [l, k] : terms) dim += BigInt(static_cast<long>(k)) * stable_irrep_dim(make_irrep(c.family(), deg, l)).value;
        if (num.size() < static_cast<std::size_t>(deg + d + 1)) num.resize(deg + d + 1, 0);
        for (int i = 0; i <= d; ++i) num[deg + i] += (i % 2 == 0 ? dim : BigInt(-dim)) * binom[i];
    }

    int power = d;
    auto trim = [&num] {
        while (!num.empty() && num.back() == 0) num.pop_back();
    };
    trim();
    // Cancel common factors of (1 - t).
    while (power > 0 && !num.empty()) {
        BigInt at_one = 0;
        for (const auto& x : num) at_one += x;
        if (at_one != 0) break;
        std::vector<BigInt> q(num.size() - 1);
        BigInt acc = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) q[i] = acc = acc + num[i];
        num = std::move(q);
        --power;
        trim();
    }
    if (num.empty()) power = 0;

    RationalSeries out;
    out.denom_power = power;
    for (const auto& x : num) out.numerator.push_back(to_int64(x));
    return out;
}

/// δ(n) = hf_actual(n) - p(n) for n = 0..n_max, the alternating sum of local cohomology dimensions.
inline std::vector<std::int64_t> local_cohomology_discrepancy(const KClass& c, std::span<const std::int64_t> hf_actual, int n_max) {
    if (n_max < 0 || hf_actual.size() != static_cast<std::size_t>(n_max) + 1)
        throw DomainError("length mismatch: expected " + std::to_string(n_max + 1) + " Hilbert function values, got " +
                          std::to_string(hf_actual.size()));
    Polynomial p = hilbert_polynomial(c);
    std::vector<std::int64_t> out;
    out.reserve(hf_actual.size());
    for (int n = 0; n <= n_max; ++n) out.push_back(hf_actual[n] - to_int64(p(Rational(n))));
    return out;
}

/// Polynomial of minimal degree through the tail of a Hilbert function table,
/// fitted on the last `points` entries.
inline Polynomial fit_tail_polynomial(std::span<const std::int64_t> hf, std::size_t points) {
    if (points == 0 || points > hf.size()) throw DomainError("invalid number of fitting points");
    std::size_t start = hf.size() - points;
    return interpolate(static_cast<std::int64_t>(start), hf.subspan(start));
}

}  // namespace stable_schur
