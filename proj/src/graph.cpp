#include "cluspt/graph.hpp"

#include <algorithm>
#include <cmath>

namespace cluspt {

ClusteredInstance ClusteredInstance::from_coords(std::string name,
                                                 std::vector<Point> coords,
                                                 std::vector<std::vector<Vertex>> clusters,
                                                 Vertex source) {
    ClusteredInstance g;
    g.name_ = std::move(name);
    g.n_ = static_cast<int>(coords.size());
    g.euclidean_ = true;
    g.coords_ = std::move(coords);
    g.clusters_ = std::move(clusters);
    g.source_ = source;
    g.validate();
    return g;
}

ClusteredInstance ClusteredInstance::from_matrix(std::string name,
                                                 std::vector<std::vector<double>> weights,
                                                 std::vector<std::vector<Vertex>> clusters,
                                                 Vertex source) {
    ClusteredInstance g;
    g.name_ = std::move(name);
    g.n_ = static_cast<int>(weights.size());
    g.euclidean_ = false;
    g.weights_ = std::move(weights);
    g.clusters_ = std::move(clusters);
    g.source_ = source;

    for (int i = 0; i < g.n_; ++i) {
        if (static_cast<int>(g.weights_[i].size()) != g.n_)
            throw InputError("weight matrix row " + std::to_string(i + 1) + " has " +
                             std::to_string(g.weights_[i].size()) + " entries, expected " +
                             std::to_string(g.n_));
        if (g.weights_[i][i] != 0.0)
            throw InputError("weight matrix diagonal entry " + std::to_string(i + 1) +
                             " is nonzero");
        for (int j = 0; j < g.n_; ++j) {
            const double w = g.weights_[i][j];
            if (std::isnan(w) || w < 0.0)
                throw InputError("negative or NaN weight at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
            if (g.weights_[j][i] != w)
                throw InputError("weight matrix not symmetric at (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")");
        }
    }
    g.validate();
    return g;
}

void ClusteredInstance::validate() {
    if (n_ < 1) throw InputError("instance must have at least one vertex");
    if (clusters_.empty()) throw InputError("instance must have at least one cluster");

    cluster_index_.assign(static_cast<std::size_t>(n_), -1);
    for (int c = 0; c < static_cast<int>(clusters_.size()); ++c) {
        auto& members = clusters_[c];
        if (members.empty())
            throw InputError("cluster " + std::to_string(c + 1) + " is empty");
        std::sort(members.begin(), members.end());
        for (Vertex v : members) {
            if (v < 1 || v > n_)
                throw InputError("cluster " + std::to_string(c + 1) + " contains vertex " +
                                 std::to_string(v) + ", outside 1.." + std::to_string(n_));
            if (cluster_index_[static_cast<std::size_t>(v - 1)] != -1)
                throw InputError("vertex " + std::to_string(v) +
                                 " appears in more than one cluster");
            cluster_index_[static_cast<std::size_t>(v - 1)] = c;
        }
    }
    for (int v = 1; v <= n_; ++v)
        if (cluster_index_[static_cast<std::size_t>(v - 1)] == -1)
            throw InputError("vertex " + std::to_string(v) + " is not assigned to any cluster");

    if (source_ < 1 || source_ > n_)
        throw InputError("source vertex " + std::to_string(source_) + " out of range 1.." +
                         std::to_string(n_));
}

int ClusteredInstance::cluster_of(Vertex v) const {
    check_vertex(v);
    return cluster_index_[static_cast<std::size_t>(v - 1)];
}

double ClusteredInstance::edge_weight(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop (" + std::to_string(u) + ") requested");
    if (euclidean_) {
        const Point& a = coords_[static_cast<std::size_t>(u - 1)];
        const Point& b = coords_[static_cast<std::size_t>(v - 1)];
        const double dx = a.x - b.x;
        const double dy = a.y - b.y;
        return std::sqrt(dx * dx + dy * dy);
    }
    return weights_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)];
}

VertexSetView::VertexSetView(const ClusteredInstance& inst, std::vector<Vertex> members)
    : inst_(&inst), members_(std::move(members)) {
    if (members_.empty()) throw InputError("induced subgraph over an empty vertex set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Vertex v : members_) inst.check_vertex(v);
}

bool VertexSetView::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool is_connected(const VertexSetView& view) {
    const auto& members = view.members();
    const int m = view.size();
    if (m == 1) return true;
    const auto& g = view.graph();

    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j) {
            if (seen[static_cast<std::size_t>(j)] || j == i) continue;
            if (g.edge_weight(members[static_cast<std::size_t>(i)],
                              members[static_cast<std::size_t>(j)]) == kNoEdge)
                continue;
            seen[static_cast<std::size_t>(j)] = 1;
            ++reached;
            stack.push_back(j);
        }
    }
    return reached == m;
}

ShortestPathTree dijkstra_spt(const VertexSetView& view, Vertex root) {
    if (!view.contains(root))
        throw InputError("dijkstra root " + std::to_string(root) + " not in the view");

    const auto& g = view.graph();
    const auto& members = view.members();
    const int m = view.size();
    const std::size_t n1 = static_cast<std::size_t>(g.vertex_count()) + 1;

    ShortestPathTree spt;
    spt.root = root;
    spt.members = members;
    spt.parent.assign(n1, 0);
    spt.dist.assign(n1, kNoEdge);
    spt.dist[static_cast<std::size_t>(root)] = 0.0;

    // Dense selection: views are complete or near-complete, so the O(m^2)
    // loop beats a heap and makes the (dist, id) pop order explicit.
    std::vector<char> done(static_cast<std::size_t>(m), 0);
    for (int round = 0; round < m; ++round) {
        int best = -1;
        double best_dist = kNoEdge;
        for (int i = 0; i < m; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            const double d = spt.dist[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])];
            if (d < best_dist) {  // members ascend, so ties keep the smaller id
                best_dist = d;
                best = i;
            }
        }
        if (best < 0 || best_dist == kNoEdge) break;  // the rest is unreachable
        done[static_cast<std::size_t>(best)] = 1;
        const Vertex u = members[static_cast<std::size_t>(best)];

        for (int i = 0; i < m; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            const Vertex v = members[static_cast<std::size_t>(i)];
            const double w = g.edge_weight(u, v);
            if (w == kNoEdge) continue;
            const double cand = best_dist + w;
            const std::size_t vi = static_cast<std::size_t>(v);
            if (cand < spt.dist[vi]) {
                spt.dist[vi] = cand;
                spt.parent[vi] = u;
            } else if (cand == spt.dist[vi] && spt.parent[vi] != 0 && u < spt.parent[vi]) {
                spt.parent[vi] = u;
            }
        }
    }
    return spt;
}

} // namespace cluspt
