#include "cluspt/decoder.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace cluspt {

namespace {

void check_membership(const ClusteredInstance& inst, const Chromosome& chrom) {
    const int k = inst.cluster_count();
    if (static_cast<int>(chrom.roots.size()) != k)
        throw InputError("chromosome has " + std::to_string(chrom.roots.size()) +
                         " genes, instance has " + std::to_string(k) + " clusters");
    for (int i = 0; i < k; ++i) {
        const Vertex r = chrom.roots[static_cast<std::size_t>(i)];
        inst.check_vertex(r);
        if (inst.cluster_of(r) != i)
            throw InputError("gene " + std::to_string(i + 1) + " is vertex " + std::to_string(r) +
                             ", which is not in cluster " + std::to_string(i + 1));
    }
}

std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

double SolutionTree::cost() const {
    double total = 0.0;
    for (std::size_t v = 1; v < root_dist.size(); ++v) total += root_dist[v];
    return total;
}

bool is_valid(const ClusteredInstance& inst, const Chromosome& chrom) {
    check_membership(inst, chrom);
    return is_connected(induced(inst, chrom.roots));
}

DecodeResult decode(const ClusteredInstance& inst, const Chromosome& chrom) {
    if (!is_valid(inst, chrom))
        throw ContractError("decode called with an invalid chromosome (root set disconnected)");

    const int k = inst.cluster_count();
    const Vertex s = inst.source();
    const int m = inst.cluster_of(s);

    DecodeResult out;
    out.source_cluster = m;
    out.inter_tree = dijkstra_spt(induced(inst, chrom.roots),
                                  chrom.roots[static_cast<std::size_t>(m)]);

    out.local_spts.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const Vertex local_root = (j == m) ? s : chrom.roots[static_cast<std::size_t>(j)];
        VertexSetView view = induced(inst, inst.cluster(j));
        ShortestPathTree spt = dijkstra_spt(view, local_root);
        for (Vertex v : spt.members)
            if (spt.dist_of(v) == kNoEdge)
                throw DecodeError("cluster " + std::to_string(j + 1) +
                                  " induces a disconnected subgraph (vertex " +
                                  std::to_string(v) + " unreachable)");
        out.local_spts.push_back(std::move(spt));
    }

    SolutionTree& tree = out.tree;
    tree.local_trees.assign(static_cast<std::size_t>(k), {});
    for (int j = 0; j < k; ++j) {
        const ShortestPathTree& spt = out.local_spts[static_cast<std::size_t>(j)];
        for (Vertex v : spt.members) {
            const Vertex p = spt.parent_of(v);
            if (p == 0) continue;
            Edge e{std::min(p, v), std::max(p, v), inst.edge_weight(p, v)};
            tree.local_trees[static_cast<std::size_t>(j)].push_back(e);
            tree.edges.push_back(e);
        }
    }
    for (Vertex r : out.inter_tree.members) {
        const Vertex p = out.inter_tree.parent_of(r);
        if (p == 0) continue;
        Edge e{std::min(p, r), std::max(p, r), inst.edge_weight(p, r)};
        tree.inter_edges.push_back(e);
        tree.edges.push_back(e);
    }

    // Distances from s compose along the tree: within the source cluster they
    // come straight from its local tree; elsewhere the path exits through r_m,
    // runs along inter-cluster edges to r_i, then descends T_i.
    const ShortestPathTree& source_spt = out.local_spts[static_cast<std::size_t>(m)];
    const double s_to_rm = source_spt.dist_of(chrom.roots[static_cast<std::size_t>(m)]);
    tree.root_dist.assign(static_cast<std::size_t>(inst.vertex_count()) + 1, 0.0);
    for (int j = 0; j < k; ++j) {
        const ShortestPathTree& spt = out.local_spts[static_cast<std::size_t>(j)];
        const double base =
            (j == m) ? 0.0
                     : s_to_rm + out.inter_tree.dist_of(chrom.roots[static_cast<std::size_t>(j)]);
        for (Vertex v : spt.members)
            tree.root_dist[static_cast<std::size_t>(v)] = base + spt.dist_of(v);
    }
    return out;
}

double evaluate_direct(const ClusteredInstance& inst, const SolutionTree& tree) {
    const int n = inst.vertex_count();
    if (static_cast<int>(tree.edges.size()) != n - 1)
        throw ContractError("solution tree has " + std::to_string(tree.edges.size()) +
                            " edges, expected " + std::to_string(n - 1));

    std::vector<std::vector<std::pair<Vertex, double>>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : tree.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
    }

    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<Vertex, double>> stack{{inst.source(), 0.0}};
    seen[static_cast<std::size_t>(inst.source())] = 1;
    double total = 0.0;
    int reached = 0;
    while (!stack.empty()) {
        const auto [v, d] = stack.back();
        stack.pop_back();
        total += d;
        ++reached;
        for (const auto& [to, w] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(to)]) continue;
            seen[static_cast<std::size_t>(to)] = 1;
            stack.push_back({to, d + w});
        }
    }
    if (reached != n)
        throw ContractError("solution tree is not connected: reached " + std::to_string(reached) +
                            " of " + std::to_string(n) + " vertices");
    return total;
}

CostBreakdown evaluate_fast(const ClusteredInstance& inst, const Chromosome& chrom,
                            const DecodeResult& decoded) {
    const int k = inst.cluster_count();
    const int m = decoded.source_cluster;
    const ShortestPathTree& source_spt = decoded.local_spts[static_cast<std::size_t>(m)];
    const double s_to_rm = source_spt.dist_of(chrom.roots[static_cast<std::size_t>(m)]);

    CostBreakdown result;
    result.per_cluster.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto& part = result.per_cluster[static_cast<std::size_t>(i)];
        const ShortestPathTree& spt = decoded.local_spts[static_cast<std::size_t>(i)];
        double intra = 0.0;
        for (Vertex v : spt.members) intra += spt.dist_of(v);
        part.intra_sum = intra;
        if (i == m) {
            part.source_to_root = s_to_rm;
            result.total += intra;
        } else {
            part.source_to_root =
                s_to_rm + decoded.inter_tree.dist_of(chrom.roots[static_cast<std::size_t>(i)]);
            result.total +=
                static_cast<double>(inst.cluster(i).size()) * part.source_to_root + intra;
        }
    }
    return result;
}

void write_solution(const SolutionTree& tree, Vertex source, std::ostream& out) {
    std::vector<Edge> edges = tree.edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    out << "COST " << fmt_real(tree.cost()) << "\n";
    for (const Edge& e : edges)
        out << "EDGE " << e.u << " " << e.v << " " << fmt_real(e.w) << "\n";
    out << "SOURCE " << source << "\n";
}

} // namespace cluspt
