#ifndef CHOWCALC_BUILTINS_HPP
#define CHOWCALC_BUILTINS_HPP

#include <map>
#include <string>
#include <vector>

#include "chowcalc/documents.hpp"

namespace chowcalc {

// Built-in presentations and maps, embedded as the same documents that ship
// under data/. EtimesZ and PV are the two ambient rings of the genus-11
// computation; Z and E are the curve factors; Qt6 is a truncated polynomial
// ring used to exercise determinant formulas in higher codimension.

namespace builtin_docs {

inline constexpr const char* etimesz = R"json({
  "name": "EtimesZ",
  "parameters": ["s"],
  "basis": [
    {"symbol": "1", "codim": 0},
    {"symbol": "h", "codim": 1},
    {"symbol": "v", "codim": 1},
    {"symbol": "Delta", "codim": 1},
    {"symbol": "pt", "codim": 2}
  ],
  "top_codim": 2,
  "unit": "1",
  "products": [
    {"a": "h", "b": "h", "value": []},
    {"a": "v", "b": "v", "value": []},
    {"a": "Delta", "b": "Delta", "value": []},
    {"a": "h", "b": "v", "value": [{"symbol": "pt", "coeff": "1"}]},
    {"a": "h", "b": "Delta", "value": [{"symbol": "pt", "coeff": "1"}]},
    {"a": "v", "b": "Delta", "value": [{"symbol": "pt", "coeff": "1"}]}
  ],
  "integral": [{"symbol": "pt", "coeff": "1"}]
}
)json";

inline constexpr const char* pv = R"json({
  "name": "PV",
  "parameters": ["s"],
  "basis": [
    {"symbol": "1", "codim": 0},
    {"symbol": "z", "codim": 1},
    {"symbol": "vbar", "codim": 1},
    {"symbol": "zvbar", "codim": 2}
  ],
  "top_codim": 2,
  "unit": "1",
  "products": [
    {"a": "z", "b": "z", "value": [{"symbol": "zvbar", "coeff": "1+2*s"}]},
    {"a": "z", "b": "vbar", "value": [{"symbol": "zvbar", "coeff": "1"}]},
    {"a": "vbar", "b": "vbar", "value": []}
  ],
  "integral": [{"symbol": "zvbar", "coeff": "1"}]
}
)json";

inline constexpr const char* z_curve = R"json({
  "name": "Z",
  "parameters": ["s"],
  "basis": [
    {"symbol": "1", "codim": 0},
    {"symbol": "pt", "codim": 1}
  ],
  "top_codim": 1,
  "unit": "1",
  "products": [],
  "integral": [{"symbol": "pt", "coeff": "1"}]
}
)json";

inline constexpr const char* e_curve = R"json({
  "name": "E",
  "parameters": ["s"],
  "basis": [
    {"symbol": "1", "codim": 0},
    {"symbol": "pt", "codim": 1}
  ],
  "top_codim": 1,
  "unit": "1",
  "products": [],
  "integral": [{"symbol": "pt", "coeff": "1"}]
}
)json";

inline constexpr const char* qt6 = R"json({
  "name": "Qt6",
  "parameters": ["s"],
  "basis": [
    {"symbol": "1", "codim": 0},
    {"symbol": "t", "codim": 1},
    {"symbol": "t2", "codim": 2},
    {"symbol": "t3", "codim": 3},
    {"symbol": "t4", "codim": 4},
    {"symbol": "t5", "codim": 5},
    {"symbol": "t6", "codim": 6}
  ],
  "top_codim": 6,
  "unit": "1",
  "products": [
    {"a": "t", "b": "t", "value": [{"symbol": "t2", "coeff": "1"}]},
    {"a": "t", "b": "t2", "value": [{"symbol": "t3", "coeff": "1"}]},
    {"a": "t", "b": "t3", "value": [{"symbol": "t4", "coeff": "1"}]},
    {"a": "t", "b": "t4", "value": [{"symbol": "t5", "coeff": "1"}]},
    {"a": "t", "b": "t5", "value": [{"symbol": "t6", "coeff": "1"}]},
    {"a": "t2", "b": "t2", "value": [{"symbol": "t4", "coeff": "1"}]},
    {"a": "t2", "b": "t3", "value": [{"symbol": "t5", "coeff": "1"}]},
    {"a": "t2", "b": "t4", "value": [{"symbol": "t6", "coeff": "1"}]},
    {"a": "t3", "b": "t3", "value": [{"symbol": "t6", "coeff": "1"}]}
  ],
  "integral": [{"symbol": "t6", "coeff": "1"}]
}
)json";

inline constexpr const char* nu = R"json({
  "name": "nu",
  "source": "EtimesZ",
  "target": "Z",
  "relative_dim": 1,
  "pullback": [
    {"target_symbol": "1", "value": "1"},
    {"target_symbol": "pt", "value": "v"}
  ],
  "relative_todd": "1"
}
)json";

inline constexpr const char* p = R"json({
  "name": "p",
  "source": "EtimesZ",
  "target": "E",
  "relative_dim": 1,
  "pullback": [
    {"target_symbol": "1", "value": "1"},
    {"target_symbol": "pt", "value": "h"}
  ],
  "relative_todd": "1"
}
)json";

inline constexpr const char* gamma = R"json({
  "name": "gamma",
  "source": "EtimesZ",
  "target": "PV",
  "relative_dim": 0,
  "finite_degree": 2,
  "pullback": [
    {"target_symbol": "1", "value": "1"},
    {"target_symbol": "z", "value": "Delta + h + s*v"},
    {"target_symbol": "vbar", "value": "v"},
    {"target_symbol": "zvbar", "value": "2*pt"}
  ],
  "relative_todd": {"inverse_pullback_todd": {"rank": 2, "c1": "2*z - (1+2*s)*vbar", "c2": "0"}}
}
)json";

inline constexpr const char* pi0 = R"json({
  "name": "pi0",
  "source": "PV",
  "target": "Z",
  "relative_dim": 1,
  "pullback": [
    {"target_symbol": "1", "value": "1"},
    {"target_symbol": "pt", "value": "vbar"}
  ],
  "relative_todd": {"tangent_line_c1": "2*z - (1+2*s)*vbar"}
}
)json";

} // namespace builtin_docs

inline const std::vector<std::string>& builtin_ring_names() {
    static const std::vector<std::string> names{"EtimesZ", "PV", "Z", "E", "Qt6"};
    return names;
}

inline const std::string& builtin_ring_document(const std::string& name) {
    static const std::map<std::string, std::string> docs{
        {"EtimesZ", builtin_docs::etimesz}, {"PV", builtin_docs::pv},
        {"Z", builtin_docs::z_curve},       {"E", builtin_docs::e_curve},
        {"Qt6", builtin_docs::qt6}};
    auto it = docs.find(name);
    if (it == docs.end())
        throw Error("no built-in ring named '" + name + "'");
    return it->second;
}

inline RingPresentation::Ptr builtin_ring(const std::string& name) {
    static std::map<std::string, RingPresentation::Ptr> cache;
    auto it = cache.find(name);
    if (it != cache.end())
        return it->second;
    auto ring = load_ring(builtin_ring_document(name));
    cache.emplace(name, ring);
    return ring;
}

inline const std::vector<std::string>& builtin_map_names() {
    static const std::vector<std::string> names{"nu", "p", "gamma", "pi0"};
    return names;
}

inline const std::string& builtin_map_document(const std::string& name) {
    static const std::map<std::string, std::string> docs{{"nu", builtin_docs::nu},
                                                         {"p", builtin_docs::p},
                                                         {"gamma", builtin_docs::gamma},
                                                         {"pi0", builtin_docs::pi0}};
    auto it = docs.find(name);
    if (it == docs.end())
        throw Error("no built-in map named '" + name + "'");
    return it->second;
}

inline MapDescriptor::Ptr builtin_map(const std::string& name) {
    static std::map<std::string, MapDescriptor::Ptr> cache;
    auto it = cache.find(name);
    if (it != cache.end())
        return it->second;
    auto map = load_map(builtin_map_document(name),
                        [](const std::string& ring) { return builtin_ring(ring); });
    cache.emplace(name, map);
    return map;
}

/// Resolve a ring by built-in name first, then as a file path.
inline RingPresentation::Ptr resolve_ring(const std::string& name_or_path) {
    for (const auto& name : builtin_ring_names())
        if (name == name_or_path)
            return builtin_ring(name_or_path);
    return load_ring_file(name_or_path);
}

} // namespace chowcalc

#endif
