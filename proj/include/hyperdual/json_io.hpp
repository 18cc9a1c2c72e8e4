#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hyperdual/model.hpp"

namespace hyperdual {

// Malformed or schema-violating input documents.
class format_error : public error {
public:
    explicit format_error(const std::string& msg) : error(msg) {}
};

namespace io {

using nlohmann::json;

inline constexpr const char* kFormat = "hyperdual/1";

using Real = double;
using Complex = std::complex<double>;

template <class T>
constexpr const char* field_name() {
    if constexpr (std::is_same_v<T, Complex>)
        return "complex";
    else
        return "real";
}

inline json hypergraph_to_json(const Hypergraph& h) {
    return json{{"vertices", h.vertex_count}, {"edges", h.edges}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw format_error("hypergraph: expected {vertices, edges}");
    Hypergraph h;
    h.vertex_count = j.at("vertices").get<int>();
    h.edges = j.at("edges").get<std::vector<VertexSet>>();
    try {
        h.validate();
    } catch (const error& e) {
        throw format_error(e.what());
    }
    return h;
}

template <class T>
json tensor_to_json(const LabeledTensor<T>& t) {
    json data = json::array();
    for (const T& v : t.data) {
        if constexpr (std::is_same_v<T, Complex>)
            data.push_back(json::array({v.real(), v.imag()}));
        else
            data.push_back(v);
    }
    return json{{"labels", t.labels}, {"sizes", t.sizes}, {"data", std::move(data)}};
}

template <class T>
LabeledTensor<T> tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("sizes") || !j.contains("data"))
        throw format_error("tensor: expected {labels, sizes, data}");
    std::vector<T> data;
    for (const auto& v : j.at("data")) {
        if constexpr (std::is_same_v<T, Complex>) {
            if (!v.is_array() || v.size() != 2) throw format_error("tensor: complex entries must be [re, im]");
            data.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
            if (!v.is_number()) throw format_error("tensor: real entries must be numbers");
            data.push_back(v.get<double>());
        }
    }
    try {
        return LabeledTensor<T>(j.at("labels").get<std::vector<int>>(), j.at("sizes").get<std::vector<int>>(),
                                std::move(data));
    } catch (const shape_error& e) {
        throw format_error(e.what());
    }
}

template <class T>
json model_to_json(const GraphicalModel<T>& gm) {
    json factors = json::array();
    for (const auto& pot : gm.potentials) factors.push_back(tensor_to_json(pot));
    return json{{"format", kFormat}, {"kind", "gm"},           {"field", field_name<T>()},
                {"hypergraph", hypergraph_to_json(gm.h)},      {"sizes", gm.sizes},
                {"factors", std::move(factors)}};
}

template <class T>
json model_to_json(const TensorHypernetwork<T>& tn) {
    json factors = json::array();
    for (const auto& t : tn.tensors) factors.push_back(tensor_to_json(t));
    return json{{"format", kFormat}, {"kind", "tn"},           {"field", field_name<T>()},
                {"hypergraph", hypergraph_to_json(tn.g)},      {"sizes", tn.edge_sizes},
                {"factors", std::move(factors)}};
}

using AnyModel = std::variant<GraphicalModel<Real>, GraphicalModel<Complex>, TensorHypernetwork<Real>,
                              TensorHypernetwork<Complex>>;

template <class T>
GraphicalModel<T> gm_from_json(const json& j) {
    GraphicalModel<T> gm;
    gm.h = hypergraph_from_json(j.at("hypergraph"));
    gm.sizes = j.at("sizes").get<std::vector<int>>();
    for (const auto& f : j.at("factors")) gm.potentials.push_back(tensor_from_json<T>(f));
    try {
        gm.validate();
    } catch (const error& e) {
        throw format_error(e.what());
    }
    return gm;
}

template <class T>
TensorHypernetwork<T> tn_from_json(const json& j) {
    TensorHypernetwork<T> tn;
    tn.g = hypergraph_from_json(j.at("hypergraph"));
    tn.edge_sizes = j.at("sizes").get<std::vector<int>>();
    for (const auto& f : j.at("factors")) tn.tensors.push_back(tensor_from_json<T>(f));
    try {
        tn.validate();
    } catch (const error& e) {
        throw format_error(e.what());
    }
    return tn;
}

inline AnyModel model_from_json(const json& j) {
    if (!j.is_object()) throw format_error("model: expected a JSON object");
    if (j.value("format", "") != kFormat)
        throw format_error("model: unsupported format, expected \"" + std::string(kFormat) + "\"");
    std::string kind = j.value("kind", "");
    std::string field = j.value("field", "real");
    if (kind == "gm") {
        if (field == "complex") return gm_from_json<Complex>(j);
        if (field == "real") return gm_from_json<Real>(j);
    } else if (kind == "tn") {
        if (field == "complex") return tn_from_json<Complex>(j);
        if (field == "real") return tn_from_json<Real>(j);
    }
    throw format_error("model: unknown kind/field combination");
}

inline json model_to_json(const AnyModel& model) {
    return std::visit([](const auto& m) { return model_to_json(m); }, model);
}

} // namespace io
} // namespace hyperdual
