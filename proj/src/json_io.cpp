#include "greenfn/json_io.hpp"

#include <fstream>

namespace greenfn {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw GraphError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

}  // namespace

BoundaryGraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw GraphError("graph file must hold a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw GraphError("graph file needs a \"vertices\" array");

    std::vector<VertexId> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer()) throw GraphError("vertex ids must be integers");
        vertices.push_back(v.get<VertexId>());
    }

    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("u") || !e.contains("v"))
                throw GraphError("each edge needs \"u\" and \"v\"");
            Rational w = e.contains("w") ? rational_from_json(e["w"]) : Rational(1);
            edges.push_back({e["u"].get<VertexId>(), e["v"].get<VertexId>(), std::move(w)});
        }
    }

    std::vector<VertexId> boundary;
    if (j.contains("boundary"))
        for (const auto& v : j["boundary"]) boundary.push_back(v.get<VertexId>());

    std::map<VertexId, Rational> potential;
    if (j.contains("potential")) {
        for (const auto& [key, value] : j["potential"].items()) {
            try {
                potential[std::stoi(key)] = rational_from_json(value);
            } catch (const std::invalid_argument&) {
                throw GraphError("potential key is not a vertex id: \"" + key + "\"");
            } catch (const std::out_of_range&) {
                throw GraphError("potential key is not a vertex id: \"" + key + "\"");
            }
        }
    }
    return BoundaryGraph(std::move(vertices), std::move(edges), std::move(boundary),
                         std::move(potential));
}

BoundaryGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw GraphError("invalid JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

Json to_json(const RationalFunction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfun_from_json(const Json& j) {
    return RationalFunction::reduce(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const GreensMatrix& g) {
    Json rows = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(to_json(entry));
        rows.push_back(std::move(r));
    }
    return rows;
}

GreensMatrix greens_from_json(const Json& j) {
    GreensMatrix g;
    for (const auto& row : j) {
        std::vector<RationalFunction> r;
        for (const auto& entry : row) r.push_back(ratfun_from_json(entry));
        g.push_back(std::move(r));
    }
    return g;
}

Json to_json(const IotaResult& r) {
    Json histogram = Json::array();
    for (const auto& [key, count] : r.class_histogram) {
        auto [omega, loops, b1] = key;
        histogram.push_back(
            Json{{"omega", omega}, {"loops", loops}, {"b1", b1}, {"count", count}});
    }
    Json classes = Json::array();
    for (const auto& [term, count] : r.term_classes)
        classes.push_back(Json{{"term", to_json(term)}, {"count", count}});
    return Json{{"value", to_json(r.value)},
                {"factor_count", r.factor_count},
                {"histogram", std::move(histogram)},
                {"weight_classes", std::move(classes)}};
}

Json to_json(const IdentityReport& r) {
    Json parts = Json::array();
    for (const ReportPart& p : r.parts)
        parts.push_back(
            Json{{"label", p.label}, {"left", p.left}, {"right", p.right}, {"holds", p.holds}});
    return Json{{"id", r.id}, {"holds", r.holds()}, {"parts", std::move(parts)}};
}

Json factor_to_json(const Factor& f, const DeformedGraph& g) {
    Json edges = Json::array();
    for (int e : f.edge_subset)
        edges.push_back(Json{{"index", e}, {"edge", g.edge_label(e)}});
    Json comps = Json::array();
    for (const auto& [vertices, kind] : f.components)
        comps.push_back(Json{{"vertices", vertices}, {"kind", component_kind_name(kind)}});
    return Json{{"edges", std::move(edges)},
                {"components", std::move(comps)},
                {"omega", f.omega},
                {"loops", f.loops},
                {"b1", f.b1_noloop},
                {"distance", f.pair_distance}};
}

}  // namespace greenfn
