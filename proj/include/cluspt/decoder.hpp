#ifndef CLUSPT_DECODER_HPP
#define CLUSPT_DECODER_HPP

#include <iosfwd>
#include <vector>

#include "cluspt/graph.hpp"

namespace cluspt {

// One root vertex per cluster: roots[i] belongs to cluster i.
struct Chromosome {
    std::vector<Vertex> roots;

    bool operator==(const Chromosome& other) const { return roots == other.roots; }
    bool operator<(const Chromosome& other) const { return roots < other.roots; }
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    double w = 0.0;
};

// A clustered spanning tree: n-1 edges total, one local spanning tree per
// cluster, and k-1 inter-cluster edges joining cluster roots. Removing the
// inter-cluster edges leaves exactly the k local trees.
struct SolutionTree {
    std::vector<Edge> edges;                    // all n-1 edges
    std::vector<std::vector<Edge>> local_trees; // per-cluster intra edges
    std::vector<Edge> inter_edges;              // k-1 root-to-root edges
    std::vector<double> root_dist;              // [v] tree distance from the source

    double cost() const;  // sum of root_dist over all vertices
};

// Everything the decoder produced: the tree plus the shortest-path trees it
// was assembled from, kept so that the decomposed evaluator can reuse them.
struct DecodeResult {
    SolutionTree tree;
    ShortestPathTree inter_tree;               // over G[roots], rooted at the source cluster's root
    std::vector<ShortestPathTree> local_spts;  // per cluster; the source cluster's is rooted at s
    int source_cluster = 0;                    // 0-based index of the cluster containing s
};

// Total cost split into per-cluster (source-to-root, intra-cluster sum) parts.
// For the source's own cluster the intra sum is taken from s itself and the
// total uses only that term; for every other cluster the total adds
// |V_i| * source_to_root + intra_sum.
struct CostBreakdown {
    struct ClusterPart {
        double source_to_root = 0.0;
        double intra_sum = 0.0;
    };
    double total = 0.0;
    std::vector<ClusterPart> per_cluster;
};

// True iff the subgraph induced by the root set is connected. Throws
// InputError when a gene lies outside its cluster.
bool is_valid(const ClusteredInstance& inst, const Chromosome& chrom);

// Build the clustered spanning tree for a valid chromosome:
//  1. a shortest-path tree over G[roots] rooted at the source cluster's root
//     fixes the inter-cluster edges;
//  2. each other cluster gets a shortest-path tree rooted at its gene;
//  3. the source's cluster gets a shortest-path tree rooted at s itself.
// Throws ContractError on an invalid chromosome and DecodeError (naming the
// cluster) when a cluster's induced subgraph is disconnected.
DecodeResult decode(const ClusteredInstance& inst, const Chromosome& chrom);

// Objective by direct traversal: one walk of the tree from s accumulating
// path lengths to every vertex.
double evaluate_direct(const ClusteredInstance& inst, const SolutionTree& tree);

// Decomposed objective: per-cluster terms assembled from the decode
// intermediates in O(n + k). Agrees with evaluate_direct up to floating-point
// association order.
CostBreakdown evaluate_fast(const ClusteredInstance& inst, const Chromosome& chrom,
                            const DecodeResult& decoded);

// Solution export: `COST <c>`, n-1 `EDGE u v w` lines (u < v, ascending),
// `SOURCE s`.
void write_solution(const SolutionTree& tree, Vertex source, std::ostream& out);

} // namespace cluspt

#endif
