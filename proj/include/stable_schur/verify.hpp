#pragma once

// Desk-scale verification suite: the structural identities checked by
// `stable-schur verify`. Each check is independent; results come back in a
// fixed order regardless of how they were scheduled.

#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "engine.hpp"
#include "kgroup.hpp"
#include "partitions.hpp"
#include "specialization.hpp"
#include "stable_rep.hpp"

namespace stable_schur::verify {

enum class Suite { Fast, Full };

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Options {
    Suite suite = Suite::Fast;
    BranchingConvention convention = BranchingConvention::Standard;
    bool parallel = true;
};

namespace detail {

// Collects failures; a check passes when nothing was recorded.
class Ledger {
public:
    template <class A, class B>
    void expect_eq(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == expected)) {
            std::ostringstream os;
            os << what << ": got " << actual << ", expected " << expected;
            fail(os.str());
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void fail(const std::string& what) {
        if (failures_++ == 0) first_ = what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const { return ok() ? "ok" : first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : ""); }

private:
    int failures_ = 0;
    std::string first_;
};

inline std::int64_t double_factorial_odd(int k) {
    std::int64_t v = 1;
    for (int i = 2 * k - 1; i > 1; i -= 2) v *= i;
    return v;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

inline void tensor_sum_rule(Ledger& L) {
    for (int r = 0; r <= 6; ++r)
        for (int n = 0; n <= 8; ++n) {
            std::int64_t total = 0;
            for (const auto& lam : partitions_of(r)) total += syt_count(lam) * schur_dim(lam, n);
            L.expect_eq(total, ipow(n, r), "sum f^λ dim S_λ(C^" + std::to_string(n) + ") for r=" + std::to_string(r));
        }
}

inline void brauer_combinatorial(Ledger& L, BranchingConvention conv) {
    for (int k = 1; k <= 5; ++k) {
        std::int64_t total = 0;
        for (const auto& lam : partitions_of(2 * k))
            total += syt_count(lam) * branch_multiplicity(GroupFamily::Orthogonal, label(lam), label({}), conv);
        L.expect_eq(total, double_factorial_odd(k), "Brauer sum at k=" + std::to_string(k));
    }
}

inline void brauer_engine(Ledger& L, Suite suite) {
    int kmax = suite == Suite::Full ? 3 : 2;
    for (int k = 1; k <= kmax; ++k) {
        engine::Module mod(engine::free_tensor(2 * k));
        for (int K = 2 * k; K <= 2 * k + 2; ++K)
            L.expect_eq(engine::single_level_invariant_dim(mod, K), static_cast<std::size_t>(double_factorial_odd(k)),
                        "O_" + std::to_string(K) + "-invariants of T^" + std::to_string(2 * k));
    }
}

// Single-level O_K-invariants of S_λ(C^K) must equal b_{λ,∅}; this separates
// the even-row rule from the even-column rule.
inline void convention_gate(Ledger& L, BranchingConvention conv) {
    for (int s = 1; s <= 4; ++s)
        for (const auto& lam : partitions_of(s)) {
            engine::Module mod(engine::schur_functor(lam));
            int K = s + 2;
            auto engine_dim = static_cast<std::int64_t>(engine::single_level_invariant_dim(mod, K));
            L.expect_eq(branch_multiplicity(GroupFamily::Orthogonal, label(lam), label({}), conv), engine_dim,
                        "b_{" + to_string(lam) + ",∅} vs engine invariants of S_λ(C^" + std::to_string(K) + ")");
        }
}

inline void gamma_free(Ledger& L) {
    for (int r = 0; r <= 3; ++r) {
        engine::Module mod(engine::free_tensor(r));
        for (int n = 0; n <= 2; ++n) {
            int K = n + 2 * r + 1;
            for (int working : {K, K + 1}) {
                try {
                    auto g = engine::gamma_invariants(mod, n, working);
                    L.expect_eq(static_cast<std::int64_t>(g.dim), ipow(n, r),
                                "Γ_" + std::to_string(n) + "(T^" + std::to_string(r) + ") at K=" + std::to_string(working));
                } catch (const std::exception& e) {
                    L.fail(e.what());
                }
            }
        }
    }
}

inline void branching_dimension(Ledger& L) {
    for (int s = 0; s <= 5; ++s)
        for (const auto& lam : partitions_of(s))
            for (int n = 2 * s; n <= 10; ++n) {
                std::int64_t total = 0;
                for (const auto& mu : candidate_simples(GroupFamily::Orthogonal, label(lam))) {
                    auto b = branch_multiplicity(GroupFamily::Orthogonal, label(lam), mu);
                    if (b != 0) total += b * stable_irrep_dim(make_irrep(GroupFamily::Orthogonal, n, mu)).value;
                }
                L.expect_eq(total, schur_dim(lam, n), "Σ b dim V for " + to_string(lam) + " at n=" + std::to_string(n));
            }
}

inline void hilbert_rationality(Ledger& L) {
    for (int s = 0; s <= 4; ++s)
        for (const auto& lam : partitions_of(s)) {
            KClass c(StableClass::single(GroupFamily::Orthogonal, Basis::Injective, label(lam)));
            RationalSeries hs = hilbert_series(c);
            L.expect_eq(hs.denom_power, s + 1, "denominator power of H([S_" + to_string(lam) + "])");
            for (int n = 0; n <= 20; ++n)
                L.expect(hs.coefficient(n) == schur_dim_big(lam, n), "series coefficient " + std::to_string(n) + " of " + to_string(lam));
        }
}

inline void local_cohomology(Ledger& L) {
    const int n_max = 4;
    // (i) torsion presets: p = 0 and δ = HF.
    struct TorsionCase {
        int r, d;
        Partition irrep;
    };
    for (const auto& tc : {TorsionCase{0, 0, {}}, TorsionCase{1, 2, {1}}, TorsionCase{1, 1, {1}}}) {
        engine::Module mod(engine::torsion_point(tc.r, tc.d));
        auto hf = engine::hf_table(mod, n_max);
        KClass c(GroupFamily::Orthogonal);
        c.add_torsion(tc.d, label(tc.irrep), 1);
        L.expect(hilbert_polynomial(c).is_zero(), "torsion class has nonzero Hilbert polynomial");
        auto delta = local_cohomology_discrepancy(c, hf, n_max);
        L.expect(delta == hf, "δ ≠ HF for " + mod.presentation().name);
        for (int n = 0; n <= n_max; ++n) L.expect_eq(hilbert_function(c, n).value, hf[n], "HF of torsion class at n=" + std::to_string(n));
    }
    // (ii) S_λ presets: δ ≡ 0.
    for (int s = 0; s <= 2; ++s)
        for (const auto& lam : partitions_of(s)) {
            engine::Module mod(engine::schur_functor(lam));
            auto hf = engine::hf_table(mod, n_max);
            KClass c(StableClass::single(GroupFamily::Orthogonal, Basis::Injective, label(lam)));
            for (auto d : local_cohomology_discrepancy(c, hf, n_max)) L.expect_eq(d, 0, "δ for S_" + to_string(lam));
        }
    // (iii) Sym² from a generator: HF agrees with the fitted polynomial from n = 1 on.
    {
        engine::Module mod(engine::sym2());
        const int top = 7;
        auto hf = engine::hf_table(mod, top);
        Polynomial fit = fit_tail_polynomial(hf, 4);
        int last_bad = -1;
        for (int n = 1; n <= top; ++n)
            if (Rational(hf[n]) != fit(Rational(n))) last_bad = n;
        L.expect(last_bad < top - 3, "Sym² Hilbert function is not eventually polynomial on the computed range");
        KClass c(StableClass::single(GroupFamily::Orthogonal, Basis::Injective, label({2})));
        L.expect(fit == hilbert_polynomial(c), "fitted polynomial " + fit.to_string() + " differs from dim Sym²");
    }
}

inline void pointwise_generation(Ledger& L) {
    for (int k = 1; k <= 3; ++k) {
        engine::Module mod(engine::pointwise(k));
        for (int n = 1; n <= 4; ++n) {
            const auto& data = mod.level(n);
            BigInt expected;
            mpz_bin_uiui(expected.get_mpz_t(), n + 2 * k - 1, 2 * k);
            L.expect(BigInt(static_cast<unsigned long>(data.span.size())) == expected,
                     "dim of closure of x_1^" + std::to_string(2 * k) + " at n=" + std::to_string(n));
            // symmetric under adjacent position swaps, hence inside Sym^{2k}
            auto lay = mod.layout(n);
            for (int p = 0; p + 1 < 2 * k; ++p) {
                std::vector<int> swap(2 * k);
                std::iota(swap.begin(), swap.end(), 0);
                std::swap(swap[p], swap[p + 1]);
                for (const auto& [piv, v] : data.span.rows())
                    L.expect(engine::apply_position_permutation(lay, swap, v) == v, "closure vector not symmetric");
            }
        }
    }
}

inline void sp_gl_variants(Ledger& L) {
    using enum GroupFamily;
    L.expect_eq(branch_multiplicity(Symplectic, label({1, 1}), label({})), 1, "Sp: mult of L^∅ in S_(1,1)");
    L.expect_eq(branch_multiplicity(Symplectic, label({2}), label({})), 0, "Sp: mult of L^∅ in S_(2)");
    L.expect_eq(branch_multiplicity(GeneralLinear, label({1}, {1}), label({}, {})), 1, "GL: mult of L_(∅,∅) in S_(1)⊗S_(1)");
    for (GroupFamily f : {Orthogonal, Symplectic, GeneralLinear}) {
        std::vector<Label> labels;
        for (int s = 0; s <= 3; ++s) {
            if (f == GeneralLinear) {
                for (int a = 0; a <= s; ++a)
                    for (const auto& x : partitions_of(a))
                        for (const auto& y : partitions_of(s - a)) labels.push_back(label(x, y));
            } else {
                for (const auto& x : partitions_of(s)) labels.push_back(label(x));
            }
        }
        for (const auto& l : labels) {
            KClass inj(StableClass::single(f, Basis::Injective, l));
            KClass simple(injective_to_simples(inj.stable()));
            L.expect(kclass_add(inj, kclass_negate(inj)).is_zero(), "c - c != 0");
            L.expect(kclass_convert(simple, Basis::Injective) == inj, "basis round trip failed for " + to_string(f, l));
            RationalSeries hs = hilbert_series(inj);
            Polynomial p = hilbert_polynomial(inj);
            for (int n = 0; n <= 12; ++n) {
                auto hv = hilbert_function(inj, n);
                L.expect(hv.exact && hs.coefficient(n) == BigInt(static_cast<long>(hv.value)), "Hilbert table mismatch for " + to_string(f, l));
                L.expect(p(Rational(n)) == Rational(hv.value), "Hilbert polynomial mismatch for " + to_string(f, l));
                L.expect_eq(hilbert_function(simple, n).value, hv.value, "simple-basis Euler HF for " + to_string(f, l));
            }
        }
    }
}

struct CheckSpec {
    std::string id;
    std::string name;
    std::function<void(Ledger&)> body;
};

}  // namespace detail

inline std::vector<CheckResult> run(const Options& opt = {}) {
    using detail::CheckSpec;
    using detail::Ledger;
    std::vector<CheckSpec> checks = {
        {"1", "tensor sum rule", [](Ledger& L) { detail::tensor_sum_rule(L); }},
        {"2", "Brauer count (combinatorial)", [&](Ledger& L) { detail::brauer_combinatorial(L, opt.convention); }},
        {"3", "Brauer count (engine)", [&](Ledger& L) { detail::brauer_engine(L, opt.suite); }},
        {"3b", "branching convention gate (engine)", [&](Ledger& L) { detail::convention_gate(L, opt.convention); }},
        {"4", "specialization of free tensor powers", [](Ledger& L) { detail::gamma_free(L); }},
        {"5", "branching/dimension consistency", [](Ledger& L) { detail::branching_dimension(L); }},
        {"6", "Hilbert series rationality", [](Ledger& L) { detail::hilbert_rationality(L); }},
        {"7", "local cohomology discrepancy", [](Ledger& L) { detail::local_cohomology(L); }},
        {"8", "pointwise module generated in degree 1", [](Ledger& L) { detail::pointwise_generation(L); }},
        {"9", "Sp and GL variants", [](Ledger& L) { detail::sp_gl_variants(L); }},
    };
    auto exec = [](const CheckSpec& c) {
        auto t0 = std::chrono::steady_clock::now();
        Ledger L;
        try {
            c.body(L);
        } catch (const std::exception& e) {
            L.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return CheckResult{c.id, c.name, L.ok(), L.summary(), secs};
    };
    std::vector<CheckResult> results;
    if (opt.parallel) {
        std::vector<std::future<CheckResult>> futures;
        for (const auto& c : checks) futures.push_back(std::async(std::launch::async, exec, std::cref(c)));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (const auto& c : checks) results.push_back(exec(c));
    }
    return results;
}

}  // namespace stable_schur::verify
