#ifndef CHOWCALC_DOCUMENTS_HPP
#define CHOWCALC_DOCUMENTS_HPP

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chowcalc/expr.hpp"
#include "chowcalc/map.hpp"

namespace chowcalc {

// Ring-presentation and map-descriptor documents (JSON). Coefficients are
// strings: "p/q" rationals or polynomial expressions in the declared
// parameters, e.g. "1+2*s". Unlisted products are zero.

namespace detail {

inline ParamPolynomial coeff_from_json(const nlohmann::json& j,
                                       const std::vector<std::string>& parameters,
                                       const std::string& where) {
    if (j.is_number_integer())
        return ParamPolynomial(Rational(j.get<long long>()));
    if (j.is_string())
        return parse_polynomial(j.get<std::string>(), parameters);
    throw Error("document: " + where + " must be a string coefficient");
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key,
                                   const std::string& what) {
    auto it = j.find(key);
    if (it == j.end())
        throw Error("document: missing field '" + std::string(key) + "' in " + what);
    return *it;
}

} // namespace detail

inline RingData ring_data_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw Error("ring document must be a JSON object");
    RingData data;
    data.name = detail::field(j, "name", "ring document").get<std::string>();
    if (j.contains("parameters"))
        for (const auto& p : j.at("parameters"))
            data.parameters.push_back(p.get<std::string>());
    for (const auto& b : detail::field(j, "basis", "ring document")) {
        BasisElement e;
        e.symbol = detail::field(b, "symbol", "basis entry").get<std::string>();
        e.codim = detail::field(b, "codim", "basis entry").get<int>();
        data.basis.push_back(std::move(e));
    }
    data.top_codim = detail::field(j, "top_codim", "ring document").get<int>();
    data.unit = detail::field(j, "unit", "ring document").get<std::string>();
    if (j.contains("products"))
        for (const auto& p : j.at("products")) {
            RingData::Product prod;
            prod.a = detail::field(p, "a", "product entry").get<std::string>();
            prod.b = detail::field(p, "b", "product entry").get<std::string>();
            for (const auto& v : detail::field(p, "value", "product entry")) {
                auto sym = detail::field(v, "symbol", "product value").get<std::string>();
                auto coeff = detail::coeff_from_json(detail::field(v, "coeff", "product value"),
                                                     data.parameters,
                                                     "product (" + prod.a + ", " + prod.b + ")");
                prod.value.emplace_back(std::move(sym), std::move(coeff));
            }
            data.products.push_back(std::move(prod));
        }
    if (j.contains("integral"))
        for (const auto& v : j.at("integral")) {
            auto sym = detail::field(v, "symbol", "integral entry").get<std::string>();
            auto coeff = detail::coeff_from_json(detail::field(v, "coeff", "integral entry"),
                                                 data.parameters, "integral of " + sym);
            data.integral.emplace_back(std::move(sym), std::move(coeff));
        }
    return data;
}

inline nlohmann::ordered_json ring_data_to_json(const RingData& data) {
    nlohmann::ordered_json j;
    j["name"] = data.name;
    j["parameters"] = data.parameters;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& b : data.basis)
        j["basis"].push_back({{"symbol", b.symbol}, {"codim", b.codim}});
    j["top_codim"] = data.top_codim;
    j["unit"] = data.unit;
    j["products"] = nlohmann::ordered_json::array();
    for (const auto& p : data.products) {
        nlohmann::ordered_json value = nlohmann::ordered_json::array();
        for (const auto& [sym, coeff] : p.value)
            value.push_back({{"symbol", sym}, {"coeff", coeff.to_string()}});
        j["products"].push_back({{"a", p.a}, {"b", p.b}, {"value", value}});
    }
    j["integral"] = nlohmann::ordered_json::array();
    for (const auto& [sym, coeff] : data.integral)
        j["integral"].push_back({{"symbol", sym}, {"coeff", coeff.to_string()}});
    return j;
}

/// Parse, validate and build a ring presentation from document text.
inline RingPresentation::Ptr load_ring(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("ring document is not valid JSON: ") + e.what());
    }
    return RingPresentation::make(ring_data_from_json(j));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RingPresentation::Ptr load_ring_file(const std::string& path) {
    return load_ring(read_file(path));
}

// ---- map documents -------------------------------------------------------

using RingResolver = std::function<RingPresentation::Ptr(const std::string&)>;

inline MapDescriptor::Ptr load_map(const std::string& json_text, const RingResolver& rings) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("map document is not valid JSON: ") + e.what());
    }
    MapDescriptor::Data data;
    data.name = detail::field(j, "name", "map document").get<std::string>();
    data.source = rings(detail::field(j, "source", "map document").get<std::string>());
    data.target = rings(detail::field(j, "target", "map document").get<std::string>());
    data.relative_dim = detail::field(j, "relative_dim", "map document").get<int>();
    if (j.contains("finite_degree"))
        data.finite_degree = j.at("finite_degree").get<long long>();

    data.pullback.assign(data.target->size(), data.source->zero());
    std::vector<bool> seen(data.target->size(), false);
    for (const auto& p : detail::field(j, "pullback", "map document")) {
        auto sym = detail::field(p, "target_symbol", "pullback entry").get<std::string>();
        auto idx = data.target->index_of(sym);
        if (!idx)
            throw Error("map '" + data.name + "': pullback names unknown target symbol '" + sym +
                        "'");
        auto value = detail::field(p, "value", "pullback entry").get<std::string>();
        data.pullback[*idx] = evaluate_expression(value, data.source);
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw Error("map '" + data.name + "': pullback missing for target symbol '" +
                        data.target->symbol(i) + "'");

    // Relative Todd class: either an explicit expression in the source ring,
    // the Todd class of a relative tangent line bundle, or the inverse of the
    // pulled-back Todd class of the target's tangent bundle (finite covers of
    // a target with trivial source tangent bundle).
    const auto& todd_doc = detail::field(j, "relative_todd", "map document");
    auto pull_here = [&](const GradedClass& x) {
        GradedClass out = data.source->zero();
        for (const auto& [i, c] : x.coeffs())
            out += c * data.pullback[i];
        return out;
    };
    if (todd_doc.is_string()) {
        data.relative_todd = evaluate_expression(todd_doc.get<std::string>(), data.source);
    } else if (todd_doc.is_object() && todd_doc.contains("tangent_line_c1")) {
        auto c1 = evaluate_expression(todd_doc.at("tangent_line_c1").get<std::string>(),
                                      data.source);
        data.relative_todd = todd(line_bundle(c1));
    } else if (todd_doc.is_object() && todd_doc.contains("inverse_pullback_todd")) {
        const auto& form = todd_doc.at("inverse_pullback_todd");
        int rank = detail::field(form, "rank", "inverse_pullback_todd").get<int>();
        auto c1 = evaluate_expression(detail::field(form, "c1", "inverse_pullback_todd")
                                          .get<std::string>(),
                                      data.target);
        GradedClass chern = data.target->one() + c1;
        if (form.contains("c2"))
            chern += evaluate_expression(form.at("c2").get<std::string>(), data.target);
        data.relative_todd = graded_inverse(pull_here(todd(SheafClass(rank, chern))));
    } else {
        throw Error("map '" + data.name + "': unsupported relative_todd form");
    }

    return MapDescriptor::make(std::move(data));
}

inline MapDescriptor::Ptr load_map_file(const std::string& path, const RingResolver& rings) {
    return load_map(read_file(path), rings);
}

} // namespace chowcalc

#endif
