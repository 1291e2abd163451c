#include "chabgraph/io.hpp"

#include <fstream>

#include "chabgraph/errors.hpp"

namespace chabgraph::io {

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        throw InputError("'" + path + "' is not valid JSON");
    }
    return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw InputError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

i64 as_integer(const json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw InputError(what + " must be an integer");
    }
    return j.get<i64>();
}

} // namespace

AugmentedCurve curve_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("graph description must be an object");
    }
    reject_unknown_keys(j, {"vertices", "edges"}, "graph description");
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw InputError("graph description needs a \"vertices\" list");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw InputError("graph description needs an \"edges\" list");
    }

    std::vector<std::string> ids;
    std::vector<i64> genera;
    for (const json& vertex : j["vertices"]) {
        if (!vertex.is_object()) {
            throw InputError("each vertex must be an object");
        }
        reject_unknown_keys(vertex, {"id", "genus"}, "vertex entry");
        if (!vertex.contains("id") || !vertex["id"].is_string()) {
            throw InputError("each vertex needs a string \"id\"");
        }
        ids.push_back(vertex["id"].get<std::string>());
        i64 genus = 0;
        if (vertex.contains("genus")) {
            genus = as_integer(vertex["genus"], "vertex genus");
            if (genus < 0) {
                throw InputError("vertex genus must be non-negative");
            }
        }
        genera.push_back(genus);
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (const json& edge : j["edges"]) {
        if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string()) {
            throw InputError("each edge must be a pair of vertex ids");
        }
        edges.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
    }

    return AugmentedCurve(Multigraph(std::move(ids), edges), std::move(genera));
}

AugmentedCurve load_curve(const std::string& path) { return curve_from_json(parse_file(path)); }

Divisor divisor_from_json(const json& j, const Multigraph& g) {
    if (!j.is_object()) {
        throw InputError("divisor must be an object mapping vertex id to integer");
    }
    Divisor d(g.size());
    for (const auto& item : j.items()) {
        const int v = g.vertex_index(item.key()); // throws on unknown ids
        d[v] = as_integer(item.value(), "divisor coefficient");
    }
    return d;
}

Divisor load_divisor(const std::string& path, const Multigraph& g) {
    return divisor_from_json(parse_file(path), g);
}

json divisor_to_json(const Divisor& d, const Multigraph& g) {
    json out = json::object();
    for (int v = 0; v < g.size(); ++v) {
        out[g.vertex_id(v)] = d[v];
    }
    return out;
}

json twist_to_json(const Twist& t, const Multigraph& g) {
    json out = json::object();
    for (int v = 0; v < g.size(); ++v) {
        out[g.vertex_id(v)] = t[v];
    }
    return out;
}

json reduced_to_json(const ReducedDivisor& r, const Multigraph& g) {
    json out = json::object();
    out["base"] = g.vertex_id(r.base_vertex);
    out["divisor"] = divisor_to_json(r.divisor, g);
    return out;
}

json certificate_to_json(const CliffordCertificate& cert, const Multigraph& g) {
    json out = json::object();
    out["Q"] = divisor_to_json(cert.blocking, g);
    out["bound"] = cert.bound;
    out["branch"] = cert.branch == CliffordCertificate::Branch::negative_degree
                        ? "negative_degree"
                        : "graph_clifford";
    json witnesses = json::array();
    for (const auto& w : cert.witnesses) {
        json entry = json::object();
        entry["twist"] = twist_to_json(w.twist, g);
        entry["dead_vertex"] = g.vertex_id(w.dead_vertex);
        witnesses.push_back(std::move(entry));
    }
    out["witness_twist_analysis"] = std::move(witnesses);
    return out;
}

json rank_bounds_to_json(const RankBounds& b) {
    json out = json::object();
    out["pessimistic"] = b.lower;
    out["optimistic"] = b.upper;
    return out;
}

json report_to_json(const ChabautyReport& r) {
    json out = json::object();
    out["bound"] = r.bound;
    out["theorem"] = to_string(r.theorem);
    json checks = json::array();
    for (const auto& h : r.hypotheses_checked) {
        json entry = json::object();
        entry["condition"] = h.condition;
        entry["pass"] = h.pass;
        checks.push_back(std::move(entry));
    }
    out["hypotheses_checked"] = std::move(checks);
    if (r.orders_bound) {
        out["orders_bound"] = *r.orders_bound;
    }
    return out;
}

json profile_to_json(const TwistH0Profile& p, const Multigraph& g) {
    json rows = json::array();
    for (const auto& row : p.rows) {
        json entry = json::object();
        entry["twist"] = twist_to_json(row.twist, g);
        json h0 = json::object();
        for (int v = 0; v < g.size(); ++v) {
            h0[g.vertex_id(v)] = row.h0_after[static_cast<size_t>(v)];
        }
        entry["h0_after"] = std::move(h0);
        rows.push_back(std::move(entry));
    }
    json out = json::object();
    out["rows"] = std::move(rows);
    return out;
}

} // namespace chabgraph::io
