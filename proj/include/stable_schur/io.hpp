#pragma once

// JSON encodings of the public value types.

#include <json.hpp>

#include <string>

#include "engine.hpp"
#include "error.hpp"
#include "kgroup.hpp"
#include "partitions.hpp"
#include "specialization.hpp"
#include "stable_rep.hpp"

namespace stable_schur::io {

using nlohmann::json;

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (!j.is_array()) throw DomainError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw DomainError("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

inline json label_to_json(GroupFamily f, const Label& l) {
    if (is_pair_family(f)) return json::array({partition_to_json(l.first), partition_to_json(l.second)});
    return partition_to_json(l.first);
}

inline Label label_from_json(GroupFamily f, const json& j) {
    if (!is_pair_family(f)) return label(partition_from_json(j));
    if (!j.is_array() || j.size() != 2) throw DomainError("GL labels are two-element arrays of partitions");
    return label(partition_from_json(j[0]), partition_from_json(j[1]));
}

inline json terms_to_json(GroupFamily f, const std::map<Label, std::int64_t>& terms) {
    json arr = json::array();
    for (const auto& [l, k] : terms) arr.push_back({{"label", label_to_json(f, l)}, {"coeff", k}});
    return arr;
}

template <class Add>
void terms_from_json(GroupFamily f, const json& arr, Add&& add) {
    if (!arr.is_array()) throw DomainError("terms must be an array");
    for (const auto& t : arr) {
        if (!t.contains("label") || !t.contains("coeff")) throw DomainError("each term needs 'label' and 'coeff'");
        add(label_from_json(f, t.at("label")), t.at("coeff").get<std::int64_t>());
    }
}

inline json to_json(const StableClass& c) {
    return {{"family", family_code(c.family())}, {"basis", basis_code(c.basis())}, {"terms", terms_to_json(c.family(), c.terms())}};
}

inline StableClass stable_class_from_json(const json& j) {
    try {
        GroupFamily f = parse_family(j.at("family").get<std::string>());
        StableClass c(f, parse_basis(j.value("basis", std::string("injective"))));
        terms_from_json(f, j.value("terms", json::array()), [&](const Label& l, std::int64_t k) { c.add(l, k); });
        return c;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed stable class: ") + e.what());
    }
}

inline json to_json(const KClass& c) {
    json torsion = json::array();
    for (const auto& [deg, terms] : c.torsion()) torsion.push_back({{"degree", deg}, {"terms", terms_to_json(c.family(), terms)}});
    return {{"stable", to_json(c.stable())}, {"torsion", torsion}};
}

/// Accepts {"stable": {...}, "torsion": [...]}; a top-level "family" may stand in
/// for the stable part when the class is torsion-only.
inline KClass kclass_from_json(const json& j) {
    try {
        KClass out = j.contains("stable") ? KClass(stable_class_from_json(j.at("stable")))
                                          : KClass(parse_family(j.at("family").get<std::string>()));
        for (const auto& t : j.value("torsion", json::array())) {
            int deg = t.at("degree").get<int>();
            terms_from_json(out.family(), t.at("terms"), [&](const Label& l, std::int64_t k) { out.add_torsion(deg, l, k); });
        }
        return out;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed K-class: ") + e.what());
    }
}

inline json to_json(const RationalSeries& s) { return {{"numerator", s.numerator}, {"denom_power", s.denom_power}}; }

inline RationalSeries series_from_json(const json& j) {
    RationalSeries s;
    s.numerator = j.at("numerator").get<std::vector<std::int64_t>>();
    s.denom_power = j.at("denom_power").get<int>();
    return s;
}

inline json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

inline json vector_to_json(const linalg::SparseVector& v) {
    json arr = json::array();
    for (const auto& [i, c] : v.entries()) arr.push_back(json::array({c.get_str(), i}));
    return arr;
}

inline linalg::SparseVector vector_from_json(const json& arr) {
    if (!arr.is_array()) throw DomainError("vector must be an array of [value, index] pairs");
    std::vector<linalg::SparseVector::Entry> entries;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2) throw DomainError("vector entries are [value, index] pairs");
        Rational v = e[0].is_string() ? parse_rational(e[0].get<std::string>()) : Rational(e[0].get<long>());
        entries.emplace_back(e[1].get<linalg::Index>(), v);
    }
    return linalg::SparseVector(std::move(entries));
}

inline json to_json(const engine::ModulePresentation& p) {
    auto gens = [](const std::vector<engine::Generator>& list) {
        json arr = json::array();
        for (const auto& g : list) arr.push_back({{"level", g.level}, {"vector", vector_to_json(g.vector)}});
        return arr;
    };
    json j = {{"family", "O"}, {"summands", p.summands}, {"generators", gens(p.generators)}};
    if (!p.relations.empty()) j["relations"] = gens(p.relations);
    return j;
}

inline engine::ModulePresentation presentation_from_json(const json& j) {
    try {
        if (j.value("family", std::string("O")) != "O") throw DomainError("the engine only realizes the orthogonal family");
        engine::ModulePresentation p;
        p.summands = j.at("summands").get<std::vector<int>>();
        auto gens = [](const json& arr) {
            std::vector<engine::Generator> out;
            for (const auto& g : arr) out.push_back({g.at("level").get<int>(), vector_from_json(g.at("vector"))});
            return out;
        };
        p.generators = gens(j.at("generators"));
        if (j.contains("relations")) p.relations = gens(j.at("relations"));
        p.name = j.value("name", std::string("file"));
        p.validate();
        return p;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed presentation: ") + e.what());
    }
}

}  // namespace stable_schur::io
