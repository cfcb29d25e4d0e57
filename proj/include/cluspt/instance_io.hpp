#ifndef CLUSPT_INSTANCE_IO_HPP
#define CLUSPT_INSTANCE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluspt/graph.hpp"

namespace cluspt {

// Raw contents of an instance file after structural validation. SOURCE_VERTEX
// may be absent here; converting to a ClusteredInstance requires one.
struct InstanceFile {
    std::string name = "unnamed";
    int dimension = 0;
    int cluster_count = 0;
    std::optional<Vertex> source;
    bool euclidean = true;
    std::vector<Point> coords;                    // EUC_2D
    std::vector<std::vector<double>> weights;     // EXPLICIT / FULL_MATRIX
    std::vector<std::vector<Vertex>> clusters;
};

struct SourceAugmentation {
    std::string instance_name;
    Vertex source = 0;
    std::uint64_t seed = 0;
};

// Grammar (line oriented, ASCII, `KEY: value` headers; header keys accepted
// in any order, sections in the order below):
//
//   NAME: <string>                         optional
//   TYPE: CluSPT
//   DIMENSION: <n>
//   NUMBER_OF_CLUSTERS: <k>
//   SOURCE_VERTEX: <id>                    optional only for headless parses
//   EDGE_WEIGHT_TYPE: EUC_2D | EXPLICIT
//   EDGE_WEIGHT_FORMAT: FULL_MATRIX        only when EXPLICIT
//   NODE_COORD_SECTION                     only when EUC_2D
//   <id> <x> <y>                           n lines
//   EDGE_WEIGHT_SECTION                    only when EXPLICIT; n rows of n reals
//   CLUSTER_SECTION
//   <cluster-id> <v1> <v2> ... -1          k lines
//   EOF
//
// In EDGE_WEIGHT_SECTION the token INF marks an absent edge.
// Any deviation raises ParseError with the offending line number.
InstanceFile parse_file(std::string_view text);

// Parse straight to a validated instance. SOURCE_VERTEX is mandatory here;
// headless files must go through parse_file + augment_source instead.
ClusteredInstance parse_instance(std::string_view text);

// Build the instance from parsed contents, overriding the source when given.
ClusteredInstance to_instance(const InstanceFile& file,
                              std::optional<Vertex> source_override = std::nullopt);

// Canonical text form: keys in grammar order, coordinates/rows ascending, one
// cluster per line, reals rendered with 17 significant digits.
// parse_instance(write_instance(x)) == x field-for-field.
std::string write_instance(const ClusteredInstance& inst);

// Draw a source vertex uniformly from 1..n, deterministically per seed.
// Rejects files that already declare one.
SourceAugmentation augment_source(const InstanceFile& file, std::uint64_t seed);

ClusteredInstance load_instance_file(const std::string& path, bool headless = false,
                                     std::uint64_t augment_seed = 0,
                                     SourceAugmentation* augmentation = nullptr);

} // namespace cluspt

#endif
