#include "sepminor/witness.hpp"

#include <algorithm>
#include <map>

namespace sepminor {

namespace {

WitnessCheck fail(std::string what, std::string detail) { return WitnessCheck{false, std::move(what), std::move(detail)}; }

}  // namespace

WitnessCheck verify_minor_witness(const Graph& host, const MinorWitness& w) {
    const int t = w.target.vertex_count();
    if (w.depth < 0) return fail("shape", "negative depth");
    if (static_cast<int>(w.branch_sets.size()) != t || static_cast<int>(w.centers.size()) != t)
        return fail("shape", "branch sets / centers do not match target vertex count");
    if (static_cast<std::int64_t>(w.cross_edges.size()) != w.target.edge_count())
        return fail("shape", "cross edges do not match target edge count");

    std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), -1);
    for (int tv = 0; tv < t; ++tv) {
        if (w.branch_sets[tv].empty()) return fail("shape", "empty branch set for target vertex " + std::to_string(tv));
        for (Vertex v : w.branch_sets[tv]) {
            if (!host.contains(v)) return fail("range", "host vertex " + std::to_string(v) + " out of range");
            if (owner[v] != -1)
                return fail("disjointness", "host vertex " + std::to_string(v) + " in branch sets " +
                                                std::to_string(owner[v]) + " and " + std::to_string(tv));
            owner[v] = tv;
        }
    }
    for (int tv = 0; tv < t; ++tv) {
        const Vertex c = w.centers[tv];
        if (!host.contains(c) || owner[c] != tv)
            return fail("center", "center of target vertex " + std::to_string(tv) + " not in its branch set");
    }
    for (int tv = 0; tv < t; ++tv) {
        const VertexSet set(host.vertex_count(), w.branch_sets[tv]);
        const auto radius = bfs_radius(host, w.centers[tv], set);
        if (!radius) return fail("connectivity", "branch set of target vertex " + std::to_string(tv) + " is disconnected");
        if (*radius > w.depth)
            return fail("radius", "branch set of target vertex " + std::to_string(tv) + " has radius " +
                                      std::to_string(*radius) + " > " + std::to_string(w.depth));
    }
    const auto target_edges = w.target.edges();
    for (std::size_t i = 0; i < target_edges.size(); ++i) {
        const auto [tu, tv] = target_edges[i];
        const auto [hu, hv] = w.cross_edges[i];
        const std::string name = std::to_string(tu) + "-" + std::to_string(tv);
        if (!host.has_edge(hu, hv)) return fail("cross-edge", "host pair for target edge " + name + " is not an edge");
        if (owner[hu] != tu || owner[hv] != tv)
            return fail("cross-edge", "host edge for target edge " + name + " does not join the two branch sets");
    }
    return {};
}

MinorWitness identity_witness(const Graph& g) {
    MinorWitness w;
    w.depth = 0;
    w.target = g;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        w.branch_sets.push_back({v});
        w.centers.push_back(v);
    }
    w.cross_edges.assign(g.edges().begin(), g.edges().end());
    return w;
}

MinorWitness restrict_witness(const MinorWitness& w, std::span<const Vertex> keep) {
    MinorWitness out;
    out.depth = w.depth;
    out.target = w.target.induced(keep);
    std::vector<int> old_of(keep.begin(), keep.end());
    for (Vertex old : old_of) {
        out.branch_sets.push_back(w.branch_sets.at(old));
        out.centers.push_back(w.centers.at(old));
    }
    const auto old_edges = w.target.edges();
    for (auto [a, b] : out.target.edges()) {
        Vertex oa = old_of[a];
        Vertex ob = old_of[b];
        const bool flipped = oa > ob;
        if (flipped) std::swap(oa, ob);
        const auto it = std::lower_bound(old_edges.begin(), old_edges.end(), Edge{oa, ob});
        Edge host = w.cross_edges[static_cast<std::size_t>(it - old_edges.begin())];
        if (flipped) std::swap(host.first, host.second);
        out.cross_edges.push_back(host);
    }
    return out;
}

nlohmann::json witness_to_json(const MinorWitness& w) {
    nlohmann::json j;
    j["r"] = w.depth;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : w.target.edges()) edges.push_back({u, v});
    j["target"] = {{"n", w.target.vertex_count()}, {"edges", edges}};
    nlohmann::json branch = nlohmann::json::object();
    nlohmann::json centers = nlohmann::json::object();
    for (std::size_t tv = 0; tv < w.branch_sets.size(); ++tv) {
        branch[std::to_string(tv)] = w.branch_sets[tv];
        centers[std::to_string(tv)] = w.centers[tv];
    }
    j["branch_sets"] = branch;
    j["centers"] = centers;
    nlohmann::json cross = nlohmann::json::object();
    const auto te = w.target.edges();
    for (std::size_t i = 0; i < te.size(); ++i)
        cross[std::to_string(te[i].first) + "-" + std::to_string(te[i].second)] = {w.cross_edges[i].first,
                                                                                   w.cross_edges[i].second};
    j["cross_edges"] = cross;
    return j;
}

MinorWitness witness_from_json(const nlohmann::json& j) {
    MinorWitness w;
    w.depth = j.at("r").get<int>();
    const int n = j.at("target").at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("target").at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    w.target = Graph::build(n, edges);
    w.branch_sets.resize(static_cast<std::size_t>(n));
    w.centers.assign(static_cast<std::size_t>(n), -1);
    for (int tv = 0; tv < n; ++tv) {
        const auto key = std::to_string(tv);
        if (j.at("branch_sets").contains(key)) w.branch_sets[tv] = j["branch_sets"][key].get<std::vector<Vertex>>();
        if (j.at("centers").contains(key)) w.centers[tv] = j["centers"][key].get<Vertex>();
    }
    for (auto [u, v] : w.target.edges()) {
        const auto key = std::to_string(u) + "-" + std::to_string(v);
        if (j.at("cross_edges").contains(key)) {
            const auto& pair = j["cross_edges"][key];
            w.cross_edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        } else {
            w.cross_edges.emplace_back(-1, -1);
        }
    }
    return w;
}

}  // namespace sepminor
