#ifndef CLUSPT_GRAPH_HPP
#define CLUSPT_GRAPH_HPP

#include <limits>
#include <string>
#include <vector>

#include "cluspt/errors.hpp"

namespace cluspt {

// Vertex ids are 1-based, matching instance files.
using Vertex = int;

// Off-diagonal matrix entry marking an absent edge in explicit instances.
inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Weighted undirected graph with a vertex partition into clusters and a
// designated source vertex. Immutable after construction; construction
// validates the partition property, weight nonnegativity and (for explicit
// matrices) symmetry with zero diagonal.
//
// Coordinate instances are complete graphs under exact (unrounded) Euclidean
// distance. Explicit instances may mark absent edges with kNoEdge.
class ClusteredInstance {
public:
    static ClusteredInstance from_coords(std::string name,
                                         std::vector<Point> coords,
                                         std::vector<std::vector<Vertex>> clusters,
                                         Vertex source);

    static ClusteredInstance from_matrix(std::string name,
                                         std::vector<std::vector<double>> weights,
                                         std::vector<std::vector<Vertex>> clusters,
                                         Vertex source);

    const std::string& name() const { return name_; }
    int vertex_count() const { return n_; }
    int cluster_count() const { return static_cast<int>(clusters_.size()); }
    Vertex source() const { return source_; }
    bool euclidean() const { return euclidean_; }

    // Members of cluster i (0-based cluster index), ascending vertex ids.
    const std::vector<Vertex>& cluster(int i) const { return clusters_[i]; }

    // 0-based index of the cluster containing v.
    int cluster_of(Vertex v) const;

    const std::vector<Point>& coords() const { return coords_; }
    const std::vector<std::vector<double>>& weight_matrix() const { return weights_; }

    // w(u, v). Throws InputError for out-of-range ids or u == v (graphs are
    // simple). Returns kNoEdge when the edge is absent.
    double edge_weight(Vertex u, Vertex v) const;

    bool has_edge(Vertex u, Vertex v) const { return edge_weight(u, v) != kNoEdge; }

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n_)
            throw InputError("vertex id " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n_));
    }

private:
    ClusteredInstance() = default;
    void validate();

    std::string name_;
    int n_ = 0;
    bool euclidean_ = false;
    std::vector<Point> coords_;                 // indexed by id-1 when euclidean
    std::vector<std::vector<double>> weights_;  // n x n when explicit
    std::vector<std::vector<Vertex>> clusters_;
    std::vector<int> cluster_index_;            // [id-1] -> cluster index
    Vertex source_ = 0;
};

// Vertex-induced subgraph G[U]: exposes exactly the parent edges with both
// endpoints in the member set.
class VertexSetView {
public:
    VertexSetView(const ClusteredInstance& inst, std::vector<Vertex> members);

    const ClusteredInstance& graph() const { return *inst_; }
    const std::vector<Vertex>& members() const { return members_; }  // ascending
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(Vertex v) const;

private:
    const ClusteredInstance* inst_;
    std::vector<Vertex> members_;
};

inline VertexSetView induced(const ClusteredInstance& inst, std::vector<Vertex> members) {
    return VertexSetView(inst, std::move(members));
}

// Parent/distance structure of one Dijkstra run on a view. parent and dist
// are dense over 1..n of the parent graph; only view members are meaningful.
// Unreachable members keep dist = +inf and parent = 0.
struct ShortestPathTree {
    Vertex root = 0;
    std::vector<Vertex> members;  // the view's member set, ascending
    std::vector<Vertex> parent;   // [v] predecessor, 0 for root/unreachable
    std::vector<double> dist;     // [v] shortest-path length from root

    double dist_of(Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
    Vertex parent_of(Vertex v) const { return parent[static_cast<std::size_t>(v)]; }
};

// True iff every member is reachable from every other inside the view.
// Single-vertex views are connected.
bool is_connected(const VertexSetView& view);

// Dijkstra over the view rooted at `root`.
//
// Deterministic tie-breaking: the next vertex to finalize is the one with the
// smallest (dist, id); when a relaxation reaches a vertex at a distance equal
// to its current label, the smaller predecessor id is kept.
ShortestPathTree dijkstra_spt(const VertexSetView& view, Vertex root);

} // namespace cluspt

#endif
