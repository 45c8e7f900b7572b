#include "tubex/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tubex {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw file_error(std::string("not valid JSON: ") + e.what());
    }
}

std::string label_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw file_error("labels must be strings or integers");
}

// unpaired (-1) unless the sign-negated label is also present
std::vector<int> inferred_pairing(const std::vector<std::string>& labels) {
    std::map<std::string, int> pos;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) pos[labels[i]] = i;
    std::vector<int> pairing(labels.size(), -1);
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        try {
            std::size_t used = 0;
            long v = std::stol(labels[i], &used);
            if (used != labels[i].size() || v == 0) continue;
            auto it = pos.find(std::to_string(-v));
            if (it != pos.end()) pairing[i] = it->second;
        } catch (const std::exception&) {
        }
    }
    return pairing;
}

ForbiddenComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw file_error("complex must be a JSON object");
    if (j.contains("hypercube")) {
        if (!j["hypercube"].is_number_integer() || j["hypercube"].get<long long>() < 0)
            throw file_error("\"hypercube\" takes a nonnegative integer");
        int rays = 0;
        if (j.contains("rays")) {
            if (!j["rays"].is_number_integer() || j["rays"].get<long long>() < 0)
                throw file_error("\"rays\" takes a nonnegative integer");
            rays = j["rays"].get<int>();
        }
        return hypercube_complex(j["hypercube"].get<int>(), rays);
    }
    if (!j.contains("ground") || !j.contains("circuits"))
        throw file_error("complex needs \"hypercube\" or \"ground\" + \"circuits\"");
    if (!j["ground"].is_array() || !j["circuits"].is_array())
        throw file_error("\"ground\" and \"circuits\" must be arrays");
    std::vector<std::string> labels;
    for (const auto& v : j["ground"]) labels.push_back(label_of(v));
    try {
        GroundSet gr(labels, inferred_pairing(labels));
        std::vector<FaceSet> circuits;
        for (const auto& c : j["circuits"]) {
            if (!c.is_array()) throw file_error("each circuit must be an array");
            FaceSet f;
            for (const auto& v : c) {
                int i = gr.find(label_of(v));
                if (i < 0)
                    throw file_error("circuit element not in the ground: " + label_of(v));
                f |= FaceSet::single(i);
            }
            circuits.push_back(f);
        }
        return ForbiddenComplex(std::move(gr), std::move(circuits));
    } catch (const file_error&) {
        throw;
    } catch (const std::exception& e) {
        throw file_error(std::string("bad complex: ") + e.what());
    }
}

std::vector<std::string> tube_labels(const GroundSet& gr, FaceSet t) {
    std::vector<std::string> out;
    for (int i : t.elements()) out.push_back(gr.labels[i]);
    return out;
}

}  // namespace

ForbiddenComplex complex_from_json_text(const std::string& text) {
    return complex_from_json(parse_text(text));
}

DeltaGraph graph_from_json_text(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw file_error("graph must be a JSON object");
    ForbiddenComplex cx =
        complex_from_json(j.contains("complex") ? j["complex"] : j);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw file_error("graph needs an \"edges\" array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw file_error("each edge must be a pair");
        edges.emplace_back(label_of(e[0]), label_of(e[1]));
    }
    try {
        return DeltaGraph(cx, edges);
    } catch (const std::exception& e) {
        throw file_error(std::string("bad edges: ") + e.what());
    }
}

DeltaGraph graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json_text(buf.str());
}

std::string fvector_json(const FVector& fv) {
    json arr = json::array();
    for (const Int& c : fv.counts) arr.push_back(c.str());
    return arr.dump();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    ordered arr = ordered::array();
    for (const auto& r : reports) {
        ordered o;
        o["id"] = r.id;
        o["params"] = r.params;
        o["status"] = r.status;
        o["witness"] = r.witness;
        o["ms"] = r.ms;
        o["assertions"] = r.assertions;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

std::string series_triangle_json(const BivariateSeries& s) {
    json rows = json::array();
    for (int n = 0; n <= s.nmax(); ++n) {
        json row = json::array();
        for (int k = 0; k <= std::min(n, s.kmax()); ++k)
            row.push_back(rat_str(s.at(k, n)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string realization_json(const GroundSet& ground, const RealizedPolytope& p) {
    ordered o;
    o["dim"] = p.dim;
    ordered verts = ordered::array();
    for (const auto& v : p.vertices) {
        ordered pt = ordered::array();
        for (const Rat& x : v.point) pt.push_back(rat_str(x));
        verts.push_back(std::move(pt));
    }
    o["vertices"] = std::move(verts);
    ordered facets = ordered::array();
    for (const auto& f : p.facets) {
        ordered fo;
        fo["tube"] = tube_labels(ground, f.tube);
        ordered nrm = ordered::array();
        for (const Rat& x : f.normal) nrm.push_back(rat_str(x));
        fo["normal"] = std::move(nrm);
        fo["offset"] = rat_str(f.offset);
        facets.push_back(std::move(fo));
    }
    o["facets"] = std::move(facets);
    ordered edges = ordered::array();
    for (auto [a, b] : p.edges) edges.push_back(ordered::array({a, b}));
    o["edges"] = std::move(edges);
    return o.dump(2);
}

std::string realization_obj(const RealizedPolytope& p) {
    if (p.dim != 3) throw input_error("OBJ export is for dimension 3 only");
    std::ostringstream out;
    out << "# standard-cut realization (decimal approximation, display only)\n";
    std::vector<std::array<double, 3>> pts;
    for (const auto& v : p.vertices) {
        std::array<double, 3> q{};
        for (int i = 0; i < 3; ++i)
            q[i] = static_cast<double>(v.point[i]);
        pts.push_back(q);
        out << "v " << q[0] << " " << q[1] << " " << q[2] << "\n";
    }
    // walk each facet's vertex cycle along polytope edges, oriented outward
    std::vector<std::vector<int>> adj(p.vertices.size());
    for (auto [a, b] : p.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& f : p.facets) {
        std::vector<int> on;
        for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
            const auto& tb = p.vertices[i].tubing;
            if (std::find(tb.begin(), tb.end(), f.tube) != tb.end()) on.push_back(i);
        }
        if (on.size() < 3) continue;
        std::vector<bool> in_face(p.vertices.size(), false), seen(p.vertices.size(), false);
        for (int i : on) in_face[i] = true;
        std::vector<int> cyc{on.front()};
        seen[on.front()] = true;
        while (true) {
            int cur = cyc.back(), next = -1;
            for (int w : adj[cur])
                if (in_face[w] && !seen[w]) { next = w; break; }
            if (next < 0) break;
            cyc.push_back(next);
            seen[next] = true;
        }
        if (cyc.size() != on.size()) throw domain_error("facet cycle did not close");
        double nx = static_cast<double>(f.normal[0]), ny = static_cast<double>(f.normal[1]),
               nz = static_cast<double>(f.normal[2]);
        const auto &a = pts[cyc[0]], &b = pts[cyc[1]], &c = pts[cyc[2]];
        double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
        double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
        double cxp = uy * vz - uz * vy, cyp = uz * vx - ux * vz, czp = ux * vy - uy * vx;
        if (cxp * nx + cyp * ny + czp * nz < 0) std::reverse(cyc.begin(), cyc.end());
        out << "f";
        for (int i : cyc) out << " " << i + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace tubex
