#pragma once

// Exact-rational realization of finitely generated algebraic C-modules for the
// orthogonal family: submodules of ⊕ T^r (optionally modulo a relation
// submodule), evaluated level by level as O_n-stable subspaces of (C^n)^{⊗r}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "partitions.hpp"
#include "rational.hpp"

namespace stable_schur::engine {

using linalg::EchelonBasis;
using linalg::Index;
using linalg::SparseVector;

/// Coordinates of ⊕_s (C^n)^{⊗r_s}: summands stacked in order, each tensor
/// factor a base-n digit, most significant first.
class AmbientLayout {
public:
    AmbientLayout(std::span<const int> summands, int level) : degrees_(summands.begin(), summands.end()), level_(level) {
        if (level < 0) throw DomainError("level must be nonnegative");
        Index off = 0;
        for (int r : degrees_) {
            if (r < 0) throw DomainError("summand degrees must be nonnegative");
            offsets_.push_back(off);
            Index d = 1;
            for (int k = 0; k < r; ++k) d *= static_cast<Index>(level);
            dims_.push_back(d);
            off += d;
        }
        dim_ = off;
    }

    int level() const { return level_; }
    Index dim() const { return dim_; }
    std::size_t summands() const { return degrees_.size(); }
    int degree(std::size_t s) const { return degrees_[s]; }
    Index offset(std::size_t s) const { return offsets_[s]; }
    Index summand_dim(std::size_t s) const { return dims_[s]; }
    const std::vector<int>& degrees() const { return degrees_; }

    std::size_t summand_of(Index i) const {
        auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
        // the last summand starting at or before i; empty summands share offsets with their successor
        return static_cast<std::size_t>(it - offsets_.begin()) - 1;
    }

    void digits(Index i, std::size_t s, std::vector<int>& out) const {
        Index local = i - offsets_[s];
        int r = degrees_[s];
        out.assign(r, 0);
        for (int p = r - 1; p >= 0; --p) {
            out[p] = static_cast<int>(local % static_cast<Index>(level_));
            local /= static_cast<Index>(level_);
        }
    }

    Index encode(std::size_t s, const std::vector<int>& digits) const {
        Index local = 0;
        for (int d : digits) local = local * static_cast<Index>(level_) + static_cast<Index>(d);
        return offsets_[s] + local;
    }

private:
    std::vector<int> degrees_;
    std::vector<Index> offsets_;
    std::vector<Index> dims_;
    Index dim_ = 0;
    int level_;
};

namespace detail {

// Applies a linear map given on basis tensors (as a callback emitting entries).
template <class OnBasis>
SparseVector apply_on_basis(const AmbientLayout& layout, const SparseVector& v, OnBasis&& on_basis) {
    std::vector<SparseVector::Entry> out;
    std::vector<int> digits;
    for (const auto& [i, c] : v.entries()) {
        std::size_t s = layout.summand_of(i);
        layout.digits(i, s, digits);
        on_basis(s, digits, [&](Index j, long coeff) { out.emplace_back(j, c * coeff); });
    }
    return SparseVector(std::move(out));
}

}  // namespace detail

/// X = E_ab − E_ba (0-based, a ≠ b) acting as a derivation: X e_b = e_a, X e_a = −e_b.
inline SparseVector apply_lie(const AmbientLayout& layout, int a, int b, const SparseVector& v) {
    return detail::apply_on_basis(layout, v, [&](std::size_t s, std::vector<int>& d, auto&& emit) {
        for (std::size_t p = 0; p < d.size(); ++p) {
            int old = d[p];
            if (old == b) {
                d[p] = a;
                emit(layout.encode(s, d), 1);
            } else if (old == a) {
                d[p] = b;
                emit(layout.encode(s, d), -1);
            } else {
                continue;
            }
            d[p] = old;
        }
    });
}

/// The reflection negating coordinate `coord`.
inline SparseVector apply_reflection(const AmbientLayout& layout, int coord, const SparseVector& v) {
    return detail::apply_on_basis(layout, v, [&](std::size_t s, std::vector<int>& d, auto&& emit) {
        long sign = 1;
        for (int x : d)
            if (x == coord) sign = -sign;
        emit(layout.encode(s, d), sign);
    });
}

/// Push forward along the standard inclusion C^n → C^{n+1}.
inline SparseVector apply_inclusion(const AmbientLayout& from, const AmbientLayout& to, const SparseVector& v) {
    std::vector<SparseVector::Entry> out;
    out.reserve(v.nnz());
    std::vector<int> digits;
    for (const auto& [i, c] : v.entries()) {
        std::size_t s = from.summand_of(i);
        from.digits(i, s, digits);
        out.emplace_back(to.encode(s, digits), c);
    }
    return SparseVector(std::move(out));
}

/// Permutes tensor positions: the factor in position p moves to position perm[p].
inline SparseVector apply_position_permutation(const AmbientLayout& layout, std::span<const int> perm, const SparseVector& v) {
    return detail::apply_on_basis(layout, v, [&](std::size_t s, std::vector<int>& d, auto&& emit) {
        if (d.size() != perm.size()) throw DomainError("permutation size does not match tensor degree");
        std::vector<int> moved(d.size());
        for (std::size_t p = 0; p < d.size(); ++p) moved[perm[p]] = d[p];
        emit(layout.encode(s, moved), 1);
    });
}

struct SparseMatrix {
    Index rows = 0;
    Index cols = 0;
    std::vector<SparseVector> columns;
};

/// The so(n) generator E_ij − E_ji (1-based, i < j ≤ n) on (C^n)^{⊗r}.
inline SparseMatrix lie_action(int n, int r, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw DomainError("lie_action: need 1 <= i < j <= n");
    std::vector<int> deg{r};
    AmbientLayout layout(deg, n);
    SparseMatrix m{layout.dim(), layout.dim(), {}};
    m.columns.reserve(layout.dim());
    for (Index k = 0; k < layout.dim(); ++k) m.columns.push_back(apply_lie(layout, i - 1, j - 1, SparseVector::unit(k)));
    return m;
}

struct Generator {
    int level = 0;
    SparseVector vector;
};

/// Submodule of ⊕ T^{summands} generated by `generators`, modulo the submodule
/// generated by `relations` (empty for the usual case of a submodule).
struct ModulePresentation {
    std::vector<int> summands;
    std::vector<Generator> generators;
    std::vector<Generator> relations;
    std::string name;
    // Set by presets whose generators provably span the whole ambient at every
    // level; lets invariant computations skip the closure.
    bool full_ambient = false;

    int max_degree() const {
        int m = 0;
        for (int r : summands) m = std::max(m, r);
        return m;
    }

    void validate() const {
        if (summands.empty()) throw DomainError("presentation needs at least one summand");
        for (const auto* list : {&generators, &relations})
            for (const auto& g : *list) {
                if (g.level < 0) throw DomainError("generator level must be nonnegative");
                AmbientLayout layout(summands, g.level);
                if (!g.vector.is_zero() && g.vector.entries().back().first >= layout.dim())
                    throw DomainError("generator vector index out of range for level " + std::to_string(g.level));
            }
    }
};

struct LevelData {
    int level = 0;
    EchelonBasis span;       // M(C^n)
    EchelonBasis relations;  // N(C^n) ⊆ M(C^n)

    std::size_t dim() const { return span.size() - relations.size(); }
};

class Module {
public:
    explicit Module(ModulePresentation p) : presentation_(std::move(p)) { presentation_.validate(); }

    const ModulePresentation& presentation() const { return presentation_; }
    AmbientLayout layout(int n) const { return AmbientLayout(presentation_.summands, n); }
    bool has_relations() const { return !presentation_.relations.empty(); }

    /// M(C^n) (and N(C^n)), computed on first use and cached.
    const LevelData& level(int n) {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        LevelData data;
        data.level = n;
        AmbientLayout lay = layout(n);
        data.span = close(presentation_.generators, lay);
        data.relations = close(presentation_.relations, lay);
        for (const auto& [p, v] : data.relations.rows())
            if (!data.span.contains(v)) throw DomainError("relations must lie inside the generated submodule");
        return cache_.emplace(n, std::move(data)).first->second;
    }

    std::size_t hf(int n) { return level(n).dim(); }

    bool is_full(int n) {
        if (presentation_.full_ambient && !has_relations()) return true;
        return level(n).span.size() == layout(n).dim();
    }

private:
    // Smallest O_n-stable subspace containing the pushforwards of the generators.
    static EchelonBasis close(const std::vector<Generator>& gens, const AmbientLayout& lay) {
        EchelonBasis basis;
        const int n = lay.level();
        const Index full = lay.dim();
        std::vector<SparseVector> queue;
        for (const auto& g : gens) {
            if (g.level > n) continue;
            SparseVector v = g.vector;
            for (int m = g.level; m < n; ++m) {
                AmbientLayout a(lay.degrees(), m), b(lay.degrees(), m + 1);
                v = apply_inclusion(a, b, v);
            }
            if (auto added = basis.insert(std::move(v))) queue.push_back(std::move(*added));
        }
        for (std::size_t q = 0; q < queue.size() && basis.size() < full; ++q) {
            const SparseVector v = queue[q];
            auto push = [&](SparseVector w) {
                if (auto added = basis.insert(std::move(w))) queue.push_back(std::move(*added));
            };
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) push(apply_lie(lay, a, b, v));
            if (n >= 1) push(apply_reflection(lay, 0, v));
        }
        return basis;
    }

    ModulePresentation presentation_;
    std::map<int, LevelData> cache_;
    std::mutex mutex_;
};

/// Vectors of the full ambient fixed by the orthogonal group of coordinates
/// [fixed, K). Signed permutations of the block lie in that group, so the
/// invariants sit in the span of sign-even orbit sums; a single generator
/// X_{fixed,fixed+1} then cuts out the rest, its block-permutation conjugates
/// acting the same way on permutation-invariant vectors.
inline std::vector<SparseVector> ambient_block_invariants(const AmbientLayout& layout, int fixed) {
    const int K = layout.level();
    if (fixed < 0 || fixed > K) throw DomainError("block start out of range");
    const int m = K - fixed;
    std::vector<SparseVector> orbits;
    for (std::size_t s = 0; s < layout.summands(); ++s) {
        const int r = layout.degree(s);
        if (layout.summand_dim(s) == 0) continue;
        // pattern[p] >= 0: fixed coordinate; pattern[p] = -(l+1): block label l.
        std::vector<int> pattern(r);
        auto emit_orbit = [&](int labels) {
            std::vector<int> counts(labels, 0);
            for (int x : pattern)
                if (x < 0) ++counts[-x - 1];
            for (int c : counts)
                if (c % 2 != 0) return;
            std::vector<SparseVector::Entry> entries;
            std::vector<int> assign(labels), digits(r);
            std::vector<bool> used(m, false);
            auto rec = [&](auto&& self, int l) -> void {
                if (l == labels) {
                    for (int p = 0; p < r; ++p) digits[p] = pattern[p] >= 0 ? pattern[p] : fixed + assign[-pattern[p] - 1];
                    entries.emplace_back(layout.encode(s, digits), Rational(1));
                    return;
                }
                for (int c = 0; c < m; ++c) {
                    if (used[c]) continue;
                    used[c] = true;
                    assign[l] = c;
                    self(self, l + 1);
                    used[c] = false;
                }
            };
            rec(rec, 0);
            orbits.emplace_back(std::move(entries));
        };
        auto rec = [&](auto&& self, int p, int labels) -> void {
            if (p == r) {
                emit_orbit(labels);
                return;
            }
            for (int c = 0; c < fixed; ++c) {
                pattern[p] = c;
                self(self, p + 1, labels);
            }
            for (int l = 0; l < labels; ++l) {
                pattern[p] = -(l + 1);
                self(self, p + 1, labels);
            }
            if (labels < m) {
                pattern[p] = -(labels + 1);
                self(self, p + 1, labels + 1);
            }
        };
        rec(rec, 0, 0);
    }
    if (m < 2) return orbits;
    std::vector<SparseVector> images;
    images.reserve(orbits.size());
    for (const auto& o : orbits) images.push_back(apply_lie(layout, fixed, fixed + 1, o));
    std::vector<SparseVector> out;
    for (const auto& combo : linalg::nullspace(images)) out.push_back(linalg::combine(combo, orbits));
    return out;
}

/// {x ∈ M(C^K) : h·x − x ∈ N(C^K) for h in the block group}, solved directly
/// from adjacent block generators and one block reflection.
inline std::vector<SparseVector> block_invariants_generic(Module& mod, int K, int fixed) {
    const LevelData& data = mod.level(K);
    AmbientLayout lay = mod.layout(K);
    if (fixed < 0 || fixed > K) throw DomainError("block start out of range");
    std::vector<SparseVector> basis = data.span.vectors();
    std::vector<SparseVector> columns;
    columns.reserve(basis.size());
    const Index stride = lay.dim();
    for (const auto& b : basis) {
        SparseVector col;
        Index slot = 0;
        for (int a = fixed; a + 1 < K; ++a, ++slot) col.add_scaled(1, data.relations.reduce(apply_lie(lay, a, a + 1, b)).shifted(slot * stride));
        if (fixed < K) col.add_scaled(1, data.relations.reduce(apply_reflection(lay, fixed, b) - b).shifted(slot * stride));
        columns.push_back(std::move(col));
    }
    std::vector<SparseVector> out;
    for (const auto& combo : linalg::nullspace(columns)) out.push_back(linalg::combine(combo, basis));
    return out;
}

/// Block invariants in M(C^K) (containing N(C^K)); uses the orbit-sum route
/// when there are no relations.
inline std::vector<SparseVector> block_invariants(Module& mod, int K, int fixed) {
    if (mod.has_relations()) return block_invariants_generic(mod, K, fixed);
    AmbientLayout lay = mod.layout(K);
    std::vector<SparseVector> ambient = ambient_block_invariants(lay, fixed);
    if (mod.is_full(K)) return ambient;
    const LevelData& data = mod.level(K);
    std::vector<SparseVector> residuals;
    residuals.reserve(ambient.size());
    for (const auto& u : ambient) residuals.push_back(data.span.reduce(u));
    std::vector<SparseVector> out;
    for (const auto& combo : linalg::nullspace(residuals)) out.push_back(linalg::combine(combo, ambient));
    return out;
}

/// Dimension of the O_K-invariants of M(C^K)/N(C^K) at a single level.
inline std::size_t single_level_invariant_dim(Module& mod, int K) {
    std::size_t total = block_invariants(mod, K, 0).size();
    return mod.has_relations() ? total - mod.level(K).relations.size() : total;
}

/// Linear map M(C^n) → M(C^{n+1}) in basis coordinates (columns indexed by the basis of M(C^n)).
struct TransitionMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> columns;

    std::size_t rank() const {
        std::vector<SparseVector> cs;
        for (const auto& c : columns) {
            std::vector<SparseVector::Entry> e;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) e.emplace_back(i, c[i]);
            cs.emplace_back(std::move(e));
        }
        return linalg::rank(cs);
    }
};

inline TransitionMap transition(Module& mod, int n) {
    const LevelData& lo = mod.level(n);
    const LevelData& hi = mod.level(n + 1);
    AmbientLayout a = mod.layout(n), b = mod.layout(n + 1);
    TransitionMap t{hi.span.size(), lo.span.size(), {}};
    for (const auto& [p, v] : lo.span.rows()) {
        auto coords = hi.span.coordinates(apply_inclusion(a, b, v));
        if (!coords) throw DomainError("transition image escaped M(C^{n+1}); presentation is not a submodule");
        t.columns.push_back(std::move(*coords));
    }
    return t;
}

inline SparseVector push_forward(Module& mod, int from, int to, SparseVector v) {
    for (int m = from; m < to; ++m) v = apply_inclusion(mod.layout(m), mod.layout(m + 1), v);
    return v;
}

inline constexpr int kDefaultTorsionHorizon = 3;

struct TorsionResult {
    std::size_t dim = 0;
    int certified_up_to = 0;
    std::vector<SparseVector> basis;  // representatives in M(C^n), modulo N(C^n)
};

/// Elements of M(C^n)/N(C^n) killed by some standard inclusion into C^m, m ≤ n + horizon.
inline TorsionResult torsion_submodule(Module& mod, int n, int horizon = kDefaultTorsionHorizon) {
    if (horizon < 1) throw DomainError("torsion horizon must be at least 1");
    const LevelData& lo = mod.level(n);
    const LevelData& hi = mod.level(n + horizon);
    std::vector<SparseVector> basis = lo.span.vectors();
    std::vector<SparseVector> residuals;
    residuals.reserve(basis.size());
    for (const auto& b : basis) residuals.push_back(hi.relations.reduce(push_forward(mod, n, n + horizon, b)));
    TorsionResult out;
    out.certified_up_to = horizon;
    EchelonBasis reps = lo.relations;
    for (const auto& combo : linalg::nullspace(residuals)) {
        SparseVector x = linalg::combine(combo, basis);
        if (auto added = reps.insert(x)) out.basis.push_back(std::move(x));
    }
    out.dim = out.basis.size();
    return out;
}

struct GammaResult {
    int n = 0;
    int working_level = 0;
    std::size_t dim = 0;
    std::size_t check_dim = 0;  // the same computation one level higher
    std::vector<SparseVector> basis;
};

namespace detail {

// {x ∈ W(K) : ι(x) ∈ W(K+1)} modulo N(C^K), W the H_n-invariants.
inline std::size_t colimit_filter(Module& mod, int n, int K, std::vector<SparseVector>* basis) {
    std::vector<SparseVector> w0 = block_invariants(mod, K, n);
    EchelonBasis w1;
    for (auto& v : block_invariants(mod, K + 1, n)) w1.insert(std::move(v));
    AmbientLayout a = mod.layout(K), b = mod.layout(K + 1);
    std::vector<SparseVector> residuals;
    residuals.reserve(w0.size());
    for (const auto& x : w0) residuals.push_back(w1.reduce(apply_inclusion(a, b, x)));
    EchelonBasis reps = mod.level(K).relations;
    std::size_t dim = 0;
    for (const auto& combo : linalg::nullspace(residuals)) {
        SparseVector x = linalg::combine(combo, w0);
        if (reps.insert(x)) {
            ++dim;
            if (basis) basis->push_back(std::move(x));
        }
    }
    return dim;
}

}  // namespace detail

inline int minimum_working_level(const ModulePresentation& p, int n) { return n + 2 * p.max_degree() + 1; }

/// Γ_n of the colimit of the module, read off at working level K and re-checked at K+1.
inline GammaResult gamma_invariants(Module& mod, int n, int K) {
    if (n < 0) throw DomainError("level must be nonnegative");
    int need = minimum_working_level(mod.presentation(), n);
    if (K < need) throw DomainError("working level " + std::to_string(K) + " below required " + std::to_string(need));
    GammaResult r;
    r.n = n;
    r.working_level = K;
    r.dim = detail::colimit_filter(mod, n, K, &r.basis);
    r.check_dim = detail::colimit_filter(mod, n, K + 1, nullptr);
    if (r.dim != r.check_dim)
        throw StabilizationError("colimit invariants did not stabilize at n = " + std::to_string(n) + ": " + std::to_string(r.dim) +
                                 " at K = " + std::to_string(K) + " vs " + std::to_string(r.check_dim) + " at K = " + std::to_string(K + 1));
    return r;
}

inline std::size_t saturation_dims(Module& mod, int n, std::optional<int> K = std::nullopt) {
    return gamma_invariants(mod, n, K.value_or(minimum_working_level(mod.presentation(), n))).dim;
}

inline std::vector<std::int64_t> hf_table(Module& mod, int n_max) {
    std::vector<std::int64_t> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(static_cast<std::int64_t>(mod.hf(n)));
    return out;
}

struct SaturationRow {
    int n = 0;
    std::int64_t hf = 0;
    std::int64_t torsion = 0;
    std::int64_t saturation = 0;
    // dim Σ(M)_n − dim (M_n / torsion); vanishes for n ≫ 0.
    std::int64_t cokernel = 0;
};

inline std::vector<SaturationRow> saturation_table(Module& mod, int n_max, int horizon = kDefaultTorsionHorizon) {
    std::vector<SaturationRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        SaturationRow row;
        row.n = n;
        row.hf = static_cast<std::int64_t>(mod.hf(n));
        row.torsion = static_cast<std::int64_t>(torsion_submodule(mod, n, horizon).dim);
        row.saturation = static_cast<std::int64_t>(saturation_dims(mod, n));
        row.cokernel = row.saturation - (row.hf - row.torsion);
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Presets

/// T^r: generated by every basis tensor at levels 1..r (level 0 for r = 0),
/// so that M(C^n) is all of (C^n)^{⊗r} at every level.
inline ModulePresentation free_tensor(int r) {
    if (r < 0) throw DomainError("tensor degree must be nonnegative");
    ModulePresentation p;
    p.summands = {r};
    p.name = "free:" + std::to_string(r);
    p.full_ambient = true;
    if (r == 0) {
        p.generators.push_back({0, SparseVector::unit(0)});
        return p;
    }
    for (int d = 1; d <= r; ++d) {
        AmbientLayout lay(p.summands, d);
        for (Index i = 0; i < lay.dim(); ++i) p.generators.push_back({d, SparseVector::unit(i)});
    }
    return p;
}

/// Submodule of T^{2k} generated by x_1^{2k} = e_1^{⊗2k} at level 1.
inline ModulePresentation pointwise(int k) {
    if (k < 0) throw DomainError("pointwise index must be nonnegative");
    ModulePresentation p;
    p.summands = {2 * k};
    p.name = "pointwise:" + std::to_string(k);
    p.generators.push_back({k == 0 ? 0 : 1, SparseVector::unit(0)});
    return p;
}

/// Submodule of T^2 generated by e_1 ⊗ e_1 at level 1.
inline ModulePresentation sym2() {
    ModulePresentation p = pointwise(1);
    p.name = "sym2";
    return p;
}

/// e_1^{⊗r} at level d modulo the same vector at level d+1: supported in degree d only.
inline ModulePresentation torsion_point(int r, int d) {
    if (r < 0 || d < 0) throw DomainError("torsion preset needs r, d >= 0");
    if (r > 0 && d == 0) throw DomainError("torsion preset: T^r vanishes at level 0 for r > 0");
    ModulePresentation p;
    p.summands = {r};
    p.name = "torsion:" + std::to_string(r) + ":" + std::to_string(d);
    p.generators.push_back({d, SparseVector::unit(0)});
    p.relations.push_back({d + 1, SparseVector::unit(0)});
    return p;
}

namespace detail {

inline std::vector<std::vector<int>> permutations_preserving(const std::vector<int>& block_of) {
    std::vector<int> perm(block_of.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (std::size_t p = 0; p < perm.size() && ok; ++p) ok = block_of[perm[p]] == block_of[p];
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace detail

/// Young symmetrizer of the row-reading tableau of shape λ: column antisymmetrizer after row symmetrizer.
inline SparseVector young_symmetrize(const AmbientLayout& layout, const Partition& lambda, const SparseVector& v) {
    std::vector<int> row_of, col_of;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            row_of.push_back(i);
            col_of.push_back(j);
        }
    SparseVector sym;
    for (const auto& p : detail::permutations_preserving(row_of)) sym.add_scaled(1, apply_position_permutation(layout, p, v));
    SparseVector out;
    for (const auto& q : detail::permutations_preserving(col_of))
        out.add_scaled(detail::permutation_sign(q), apply_position_permutation(layout, q, sym));
    return out;
}

/// S_λ ⊆ T^{|λ|}: the image of the Young symmetrizer, generated by the
/// symmetrized basis tensors at levels 1..|λ|.
inline ModulePresentation schur_functor(const Partition& lambda) {
    const int r = lambda.size();
    if (r > 6) throw DomainError("schur preset supports |λ| <= 6");
    ModulePresentation p;
    p.summands = {r};
    p.name = "schur:" + to_string(lambda);
    if (r == 0) {
        p.generators.push_back({0, SparseVector::unit(0)});
        return p;
    }
    for (int d = 1; d <= r; ++d) {
        AmbientLayout lay(p.summands, d);
        EchelonBasis seen;
        for (Index i = 0; i < lay.dim(); ++i) {
            SparseVector y = young_symmetrize(lay, lambda, SparseVector::unit(i));
            if (seen.insert(y)) p.generators.push_back({d, std::move(y)});
        }
    }
    return p;
}

/// "free:r", "sym2", "pointwise:k", "torsion:r:d", "schur:[2,1]".
inline ModulePresentation parse_preset(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw DomainError("malformed preset: '" + spec + "'");
        return std::stoi(s);
    };
    if (head == "sym2" && rest.empty()) return sym2();
    if (head == "free") return free_tensor(to_int(rest));
    if (head == "pointwise") return pointwise(to_int(rest));
    if (head == "schur") return schur_functor(parse_partition(rest));
    if (head == "torsion") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw DomainError("torsion preset is torsion:r:d");
        return torsion_point(to_int(rest.substr(0, c2)), to_int(rest.substr(c2 + 1)));
    }
    throw DomainError("unknown preset: '" + spec + "'");
}

}  // namespace stable_schur::engine
