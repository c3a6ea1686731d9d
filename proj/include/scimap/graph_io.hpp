#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "scimap/community.hpp"
#include "scimap/multinet.hpp"

namespace scimap {

enum class GraphFormat { GraphML, Dot, EdgeCsv };

GraphFormat parse_graph_format(std::string_view text);

/// GraphML with node data kind/label[/community] and edge data
/// layer/raw_weight/weight; edge direction is the per-edge `directed`
/// attribute. Weights are written in shortest round-trip form, so
/// read_graphml(write_graphml(net)) == net.
void write_graphml(std::ostream& out, const MultiNet& net,
                   const ModulePartition* partition = nullptr);
void write_dot(std::ostream& out, const MultiNet& net, const ModulePartition* partition = nullptr);
/// source_kind,source_label,target_kind,target_label,layer,directed,raw_weight,weight
void write_edge_csv(std::ostream& out, const MultiNet& net);

struct GraphFile {
    MultiNet net;
    /// Filled when every node carries a community attribute.
    std::optional<ModulePartition> partition;
};

GraphFile read_graphml(std::istream& in);
GraphFile read_graphml(const std::filesystem::path& path);

/// Writes to `path`; I/O failures are reported with the path and cause.
void export_graph(const MultiNet& net, GraphFormat format, const std::filesystem::path& path,
                  const ModulePartition* partition = nullptr);

/// kind,label,community rows in node order, then a "# Q=<value>" footer.
void write_partition_csv(std::ostream& out, const ModulePartition& partition);
ModulePartition read_partition_csv(std::istream& in);
ModulePartition read_partition_csv(const std::filesystem::path& path);

}  // namespace scimap
