// stable-schur: command-line front end for the stable_schur library.
//
// Exit codes: 0 success, 1 domain error (bad label, family mismatch, malformed
// input), 2 verification or stabilization failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "stable_schur/engine.hpp"
#include "stable_schur/io.hpp"
#include "stable_schur/kgroup.hpp"
#include "stable_schur/partitions.hpp"
#include "stable_schur/specialization.hpp"
#include "stable_schur/stable_rep.hpp"
#include "stable_schur/verify.hpp"

namespace ss = stable_schur;
using nlohmann::json;

namespace {

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ss::DomainError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ss::DomainError("invalid JSON in '" + path + "': " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// "0..10" or "7"
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
        if (a < 0 || b < a) throw ss::DomainError("bad range '" + s + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw ss::DomainError("bad range '" + s + "'");
    }
}

// Optional on-disk memo of LR coefficients, keyed by the STABLE_SCHUR_CACHE directory.
class LrDiskCache {
public:
    LrDiskCache() {
        const char* dir = std::getenv("STABLE_SCHUR_CACHE");
        if (!dir || !*dir) return;
        path_ = std::filesystem::path(dir) / "lr_cache.json";
        std::ifstream in(path_);
        if (!in) return;
        try {
            json j = json::parse(in);
            std::vector<ss::LrEntry> entries;
            for (const auto& e : j)
                entries.emplace_back(ss::io::partition_from_json(e[0]), ss::io::partition_from_json(e[1]), ss::io::partition_from_json(e[2]),
                                     e[3].get<std::int64_t>());
            ss::lr_cache_seed(entries);
        } catch (const std::exception&) {
            // unreadable cache: ignore, it is rebuilt on save
        }
    }

    void save() const {
        if (path_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
        json j = json::array();
        for (const auto& [l, m, n, v] : ss::lr_cache_snapshot())
            j.push_back({ss::io::partition_to_json(l), ss::io::partition_to_json(m), ss::io::partition_to_json(n), v});
        std::ofstream out(path_);
        if (out) out << j.dump() << "\n";
    }

private:
    std::filesystem::path path_;
};

struct Common {
    std::string family = "O";
    bool as_json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_family = true) {
    if (with_family) cmd->add_option("--family", c.family, "group family: O, Sp or GL")->check(CLI::IsMember({"O", "Sp", "GL"}));
    cmd->add_flag("--json", c.as_json, "machine-readable output");
}

// ---------------------------------------------------------------------------

int run_decompose(const Common& c, int tensor, int dual, const std::string& basis) {
    ss::GroupFamily f = ss::parse_family(c.family);
    ss::StableClass cls = ss::to_basis(ss::decompose_tensor_power(f, tensor, dual), ss::parse_basis(basis));
    if (c.as_json) emit(ss::io::to_json(cls));
    else std::cout << ss::to_string(cls) << "\n";
    return 0;
}

int run_branch(const Common& c, const std::string& inj_text, const std::string& simple_text) {
    ss::GroupFamily f = ss::parse_family(c.family);
    ss::Label inj = ss::parse_label(f, inj_text);
    if (!simple_text.empty()) {
        ss::Label simple = ss::parse_label(f, simple_text);
        auto b = ss::branch_multiplicity(f, inj, simple);
        if (c.as_json)
            emit({{"family", c.family}, {"injective", ss::io::label_to_json(f, inj)}, {"simple", ss::io::label_to_json(f, simple)}, {"multiplicity", b}});
        else std::cout << b << "\n";
        return 0;
    }
    ss::StableClass row = ss::injective_to_simples(ss::StableClass::single(f, ss::Basis::Injective, inj));
    if (c.as_json) emit(ss::io::to_json(row));
    else std::cout << ss::to_string(ss::StableClass::single(f, ss::Basis::Injective, inj)) << " = " << ss::to_string(row) << "\n";
    return 0;
}

int run_specialize(const Common& c, const std::string& lambda_text, int n, bool euler) {
    ss::GroupFamily f = ss::parse_family(c.family);
    ss::Label lam = ss::parse_label(f, lambda_text);
    auto irrep = ss::specialize_simple(f, lam, n);
    json out = {{"family", c.family}, {"lambda", ss::io::label_to_json(f, lam)}, {"n", n}};
    std::ostringstream text;
    if (irrep) {
        ss::IrrepDim d = ss::stable_irrep_dim(*irrep);
        out["irrep"] = ss::io::label_to_json(f, irrep->weight);
        out["dim"] = d.value;
        out["validity"] = d.validated ? "validated" : "stable-range-unverified";
        text << "irrep " << ss::to_string(f, irrep->weight) << " of " << c.family << "(level " << n << "), dim " << d.value
             << (d.validated ? "" : " (stable-range-unverified)");
    } else {
        out["irrep"] = nullptr;
        out["dim"] = 0;
        out["validity"] = "validated";
        text << "zero";
    }
    if (euler) {
        auto e = ss::euler_specialization(f, lam, n);
        int vd = ss::vanishing_degree(f, lam);
        out["euler"] = e;
        out["vanishing_degree"] = vd;
        text << "\neuler characteristic " << e << "\nvanishing degree " << vd;
    }
    if (c.as_json) emit(out);
    else std::cout << text.str() << "\n";
    return 0;
}

int run_hilbert(const Common& c, const std::string& path, bool series, bool poly, const std::string& table) {
    ss::KClass cls = ss::io::kclass_from_json(read_json_file(path));
    json out = {{"class", ss::io::to_json(cls)}};
    std::ostringstream text;
    if (!series && !poly && table.empty()) poly = true;
    if (poly) {
        ss::Polynomial p = ss::hilbert_polynomial(cls);
        out["polynomial"] = ss::io::to_json(p);
        text << "polynomial: " << p.to_string() << "\n";
    }
    if (series) {
        ss::RationalSeries s = ss::hilbert_series(cls);
        out["series"] = ss::io::to_json(s);
        text << "series: " << ss::to_string(s) << "\n";
    }
    if (!table.empty()) {
        auto [a, b] = parse_range(table);
        json rows = json::array();
        text << "n\tHF\texact\n";
        for (int n = a; n <= b; ++n) {
            auto hv = ss::hilbert_function(cls, n);
            rows.push_back({{"n", n}, {"value", hv.value}, {"exact", hv.exact}});
            text << n << "\t" << hv.value << "\t" << (hv.exact ? "yes" : "no") << "\n";
        }
        out["table"] = rows;
    }
    if (c.as_json) emit(out);
    else std::cout << text.str();
    return 0;
}

int run_kclass(const Common& c, const std::string& a_path, const std::string& b_path, bool negate, const std::string& basis) {
    ss::KClass a = ss::io::kclass_from_json(read_json_file(a_path));
    if (!b_path.empty()) a = ss::kclass_add(a, ss::io::kclass_from_json(read_json_file(b_path)));
    if (negate) a = ss::kclass_negate(a);
    if (!basis.empty()) a = ss::kclass_convert(a, ss::parse_basis(basis));
    if (c.as_json) {
        emit(ss::io::to_json(a));
    } else {
        std::cout << "stable: " << ss::to_string(a.stable()) << "\n";
        for (const auto& [deg, terms] : a.torsion()) {
            std::cout << "torsion@" << deg << ":";
            for (const auto& [l, k] : terms) std::cout << " " << k << "·V" << ss::to_string(a.family(), l);
            std::cout << "\n";
        }
    }
    return 0;
}

struct EngineArgs {
    std::string action;
    std::string preset;
    std::string file;
    int n_max = 4;
    int n = -1;
    int working = -1;
    int horizon = ss::engine::kDefaultTorsionHorizon;
};

int run_engine(const Common& c, const EngineArgs& args) {
    if (args.preset.empty() == args.file.empty()) throw ss::DomainError("engine needs exactly one of --preset or --file");
    ss::engine::ModulePresentation p =
        args.file.empty() ? ss::engine::parse_preset(args.preset) : ss::io::presentation_from_json(read_json_file(args.file));
    ss::engine::Module mod(p);
    auto levels = [&]() -> std::pair<int, int> {
        if (args.n >= 0) return {args.n, args.n};
        return {0, args.n_max};
    };
    auto [lo, hi] = levels();
    json out = {{"module", p.name}, {"action", args.action}};
    std::ostringstream text;
    text << "module " << p.name << "\n";

    if (args.action == "export") {
        emit(ss::io::to_json(p));
        return 0;
    }
    if (args.action == "hf") {
        auto t = ss::engine::hf_table(mod, hi);
        out["hf"] = t;
        text << "HF:";
        for (auto v : t) text << " " << v;
        text << "\n";
    } else if (args.action == "eval") {
        json rows = json::array();
        text << "n\tdim\ttransition rank\n";
        for (int n = lo; n <= hi; ++n) {
            auto rank = ss::engine::transition(mod, n).rank();
            rows.push_back({{"n", n}, {"dim", mod.hf(n)}, {"transition_rank", rank}});
            text << n << "\t" << mod.hf(n) << "\t" << rank << "\n";
        }
        out["levels"] = rows;
    } else if (args.action == "torsion") {
        json rows = json::array();
        text << "n\ttorsion\t(certified up to horizon " << args.horizon << ")\n";
        for (int n = lo; n <= hi; ++n) {
            auto t = ss::engine::torsion_submodule(mod, n, args.horizon);
            rows.push_back({{"n", n}, {"dim", t.dim}, {"certified_up_to", t.certified_up_to}});
            text << n << "\t" << t.dim << "\n";
        }
        out["torsion"] = rows;
    } else if (args.action == "gamma") {
        json rows = json::array();
        text << "n\tK\tdim Γ_n\n";
        for (int n = lo; n <= hi; ++n) {
            int K = args.working >= 0 ? args.working : ss::engine::minimum_working_level(p, n);
            auto g = ss::engine::gamma_invariants(mod, n, K);
            rows.push_back({{"n", n}, {"K", K}, {"dim", g.dim}, {"check_dim", g.check_dim}});
            text << n << "\t" << K << "\t" << g.dim << "\n";
        }
        out["gamma"] = rows;
    } else if (args.action == "saturate") {
        json rows = json::array();
        text << "n\tHF\ttorsion\tsaturation\tcokernel\n";
        for (int n = lo; n <= hi; ++n) {
            auto hfv = static_cast<std::int64_t>(mod.hf(n));
            auto tor = static_cast<std::int64_t>(ss::engine::torsion_submodule(mod, n, args.horizon).dim);
            auto sat = static_cast<std::int64_t>(ss::engine::saturation_dims(mod, n, args.working >= 0 ? std::optional<int>(args.working) : std::nullopt));
            rows.push_back({{"n", n}, {"hf", hfv}, {"torsion", tor}, {"saturation", sat}, {"cokernel", sat - (hfv - tor)}});
            text << n << "\t" << hfv << "\t" << tor << "\t" << sat << "\t" << sat - (hfv - tor) << "\n";
        }
        out["saturation"] = rows;
    } else {
        throw ss::DomainError("unknown engine action '" + args.action + "'");
    }
    if (c.as_json) emit(out);
    else std::cout << text.str();
    return 0;
}

int run_verify(const Common& c, const std::string& suite, bool flip) {
    ss::verify::Options opt;
    opt.suite = suite == "full" ? ss::verify::Suite::Full : ss::verify::Suite::Fast;
    opt.convention = flip ? ss::BranchingConvention::Flipped : ss::BranchingConvention::Standard;
    auto results = ss::verify::run(opt);
    bool all = true;
    json rows = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!c.as_json)
            std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(4) << r.id << r.name << "  [" << std::fixed
                      << std::setprecision(2) << r.seconds << " s]" << (r.passed ? "" : "\n     " + r.detail) << "\n";
    }
    if (c.as_json) emit({{"suite", suite}, {"passed", all}, {"checks", rows}});
    else std::cout << (all ? "all checks passed" : "verification FAILED") << "\n";
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial invariants of stable orthogonal, symplectic and general linear Schur functor categories"};
    app.require_subcommand(1);

    Common common;

    auto* decompose = app.add_subcommand("decompose", "decompose a tensor power into injectives");
    int tensor = 0, dual = 0;
    std::string basis = "injective";
    add_common(decompose, common);
    decompose->add_option("--tensor", tensor, "tensor degree r")->required()->check(CLI::NonNegativeNumber);
    decompose->add_option("--dual", dual, "second tensor degree m (GL only)")->check(CLI::NonNegativeNumber);
    decompose->add_option("--basis", basis, "output basis: injective or simple")->check(CLI::IsMember({"injective", "simple"}));

    auto* branch = app.add_subcommand("branch", "branching multiplicities of an injective into simples");
    std::string inj_text, simple_text;
    add_common(branch, common);
    branch->add_option("--inj", inj_text, "injective label, e.g. \"[2,1]\" or \"[[1],[1]]\" for GL")->required();
    branch->add_option("--simple", simple_text, "simple label; omit to list the whole row");

    auto* specialize = app.add_subcommand("specialize", "specialize a simple to level n");
    std::string lambda_text;
    int level = 0;
    bool euler = false;
    add_common(specialize, common);
    specialize->add_option("--lambda", lambda_text, "simple label")->required();
    specialize->add_option("--n", level, "level n")->required()->check(CLI::NonNegativeNumber);
    specialize->add_flag("--euler", euler, "also report the Euler characteristic and vanishing degree");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, polynomial and series of a K-class");
    std::string class_path, table;
    bool series = false, poly = false;
    add_common(hilbert, common, false);
    hilbert->add_option("--class", class_path, "K-class JSON file")->required();
    hilbert->add_flag("--series", series, "rational Hilbert series");
    hilbert->add_flag("--poly", poly, "Hilbert polynomial");
    hilbert->add_option("--table", table, "Hilbert function table, e.g. 0..10");

    auto* kclass = app.add_subcommand("kclass", "K-class arithmetic");
    std::string a_path, b_path, target_basis;
    bool negate = false;
    add_common(kclass, common, false);
    kclass->add_option("--a", a_path, "K-class JSON file")->required();
    kclass->add_option("--b", b_path, "second K-class, added to the first");
    kclass->add_flag("--negate", negate, "negate the result");
    kclass->add_option("--basis", target_basis, "express the stable part in this basis")->check(CLI::IsMember({"injective", "simple"}));

    auto* eng = app.add_subcommand("engine", "exact-rational module engine (orthogonal family)");
    EngineArgs eargs;
    add_common(eng, common, false);
    eng->add_option("action", eargs.action, "eval | torsion | gamma | saturate | hf | export")
        ->required()
        ->check(CLI::IsMember({"eval", "torsion", "gamma", "saturate", "hf", "export"}));
    eng->add_option("--preset", eargs.preset, "free:r | sym2 | pointwise:k | torsion:r:d | schur:[λ]");
    eng->add_option("--file", eargs.file, "presentation JSON file");
    eng->add_option("--n-max", eargs.n_max, "largest level")->check(CLI::NonNegativeNumber);
    eng->add_option("--n", eargs.n, "single level")->check(CLI::NonNegativeNumber);
    eng->add_option("--K", eargs.working, "working level for gamma/saturate")->check(CLI::NonNegativeNumber);
    eng->add_option("--horizon", eargs.horizon, "torsion certification horizon B")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string suite = "fast";
    bool flip = false;
    add_common(verify, common, false);
    verify->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_flag("--flip-convention", flip, "swap even rows/columns in the orthogonal branching rule (diagnostic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    LrDiskCache disk_cache;
    int code = 0;
    try {
        if (*decompose) code = run_decompose(common, tensor, dual, basis);
        else if (*branch) code = run_branch(common, inj_text, simple_text);
        else if (*specialize) code = run_specialize(common, lambda_text, level, euler);
        else if (*hilbert) code = run_hilbert(common, class_path, series, poly, table);
        else if (*kclass) code = run_kclass(common, a_path, b_path, negate, target_basis);
        else if (*eng) code = run_engine(common, eargs);
        else if (*verify) code = run_verify(common, suite, flip);
    } catch (const ss::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ss::StabilizationError& e) {
        std::cerr << "stabilization failure: " << e.what() << "\n";
        return 2;
    }
    disk_cache.save();
    return code;
}
