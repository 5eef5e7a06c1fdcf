#pragma once

#include <filesystem>
#include <utility>

#include "modnmf/graph.hpp"

namespace modnmf {

// Edge-list files: one edge per line as two whitespace-separated 0-based node
// ids, each undirected edge listed once, '#' lines ignored. save_ writes a
// leading "# nodes <n>" comment so trailing isolated nodes survive the round
// trip; load_ honors it when present and otherwise infers n = max id + 1.
void save_edge_list_file(const Graph& g, const std::filesystem::path& path);
Graph load_edge_list_file(const std::filesystem::path& path);

// Partition files: one line per node, "node<TAB>community", 0-based node ids,
// 1-based community labels.
void save_partition_file(const Partition& p, const std::filesystem::path& path);
Partition load_partition_file(const std::filesystem::path& path);

// Ingestion of external LFR-tool output: network file of 1-based "u v" pairs
// with every edge listed in both directions, community file of 1-based
// "node community" pairs. Ids are shifted to 0-based and the doubled edges
// deduplicated; every node must receive a community label.
std::pair<Graph, Partition> load_lfr_pair(const std::filesystem::path& network_file,
                                          const std::filesystem::path& community_file);

}  // namespace modnmf
