#include "modnmf/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace modnmf {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

[[noreturn]] void malformed(const std::filesystem::path& path, int lineno, const std::string& line) {
    throw ParseError(path.string() + ":" + std::to_string(lineno) + ": malformed line '" + line + "'");
}

// two integers per content line; comments/blank lines skipped
std::vector<std::pair<long long, long long>> read_int_pairs(const std::filesystem::path& path,
                                                            long long* declared_nodes) {
    auto in = open_in(path);
    std::vector<std::pair<long long, long long>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank
        if (first[0] == '#') {
            if (declared_nodes) {
                // our own writer leaves a "# nodes <n>" breadcrumb
                std::string word;
                long long n;
                std::istringstream cs(line);
                char hash;
                if (cs >> hash >> word >> n && word == "nodes") *declared_nodes = n;
            }
            continue;
        }
        long long u, v;
        std::istringstream first_ss(first);
        char trail;
        if (!(first_ss >> u) || first_ss >> trail) malformed(path, lineno, line);
        if (!(ss >> v)) malformed(path, lineno, line);
        std::string extra;
        if (ss >> extra) malformed(path, lineno, line);
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

void save_edge_list_file(const Graph& g, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "# nodes " << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    if (!out) throw Error("write failed for " + path.string());
}

Graph load_edge_list_file(const std::filesystem::path& path) {
    long long declared = -1;
    auto pairs = read_int_pairs(path, &declared);
    long long n = declared;
    for (const auto& [u, v] : pairs) n = std::max({n, u + 1, v + 1});
    if (n < 0) n = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph::from_edge_list(edges, static_cast<int>(n));
}

void save_partition_file(const Partition& p, const std::filesystem::path& path) {
    auto out = open_out(path);
    for (int i = 0; i < p.node_count(); ++i) out << i << "\t" << p.label(i) << "\n";
    if (!out) throw Error("write failed for " + path.string());
}

Partition load_partition_file(const std::filesystem::path& path) {
    auto pairs = read_int_pairs(path, nullptr);
    long long n = 0;
    for (const auto& [node, label] : pairs) {
        if (node < 0) throw ParseError(path.string() + ": negative node id " + std::to_string(node));
        if (label < 1) throw ParseError(path.string() + ": community labels are 1-based, got " +
                                        std::to_string(label));
        n = std::max(n, node + 1);
    }
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (const auto& [node, label] : pairs) {
        if (labels[static_cast<std::size_t>(node)] != 0)
            throw ParseError(path.string() + ": node " + std::to_string(node) + " labeled twice");
        labels[static_cast<std::size_t>(node)] = static_cast<int>(label);
    }
    for (long long i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] == 0)
            throw IncompleteLabelingError(path.string() + ": node " + std::to_string(i) +
                                          " has no community");
    return Partition::from_labels(labels);
}

std::pair<Graph, Partition> load_lfr_pair(const std::filesystem::path& network_file,
                                          const std::filesystem::path& community_file) {
    auto net_pairs = read_int_pairs(network_file, nullptr);
    auto com_pairs = read_int_pairs(community_file, nullptr);

    long long n = 0;
    for (const auto& [u, v] : net_pairs) {
        if (u < 1 || v < 1)
            throw ParseError(network_file.string() + ": node ids are 1-based, got " +
                             std::to_string(std::min(u, v)));
        n = std::max({n, u, v});
    }
    for (const auto& [node, label] : com_pairs) {
        if (node < 1) throw ParseError(community_file.string() + ": node ids are 1-based");
        if (label < 1) throw ParseError(community_file.string() + ": community ids are 1-based");
        n = std::max(n, node);
    }

    std::set<std::pair<int, int>> seen;  // (min,max), deduplicates the doubled listing
    for (const auto& [u, v] : net_pairs) {
        const int a = static_cast<int>(std::min(u, v)) - 1;
        const int b = static_cast<int>(std::max(u, v)) - 1;
        seen.emplace(a, b);
    }
    std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
    Graph g = Graph::from_edge_list(edges, static_cast<int>(n));

    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (const auto& [node, label] : com_pairs) {
        auto idx = static_cast<std::size_t>(node - 1);
        if (labels[idx] != 0 && labels[idx] != static_cast<int>(label))
            throw ParseError(community_file.string() + ": node " + std::to_string(node) +
                             " labeled twice inconsistently");
        labels[idx] = static_cast<int>(label);
    }
    for (long long i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] == 0)
            throw IncompleteLabelingError(community_file.string() + ": node " +
                                          std::to_string(i + 1) + " has no community");
    return {std::move(g), Partition::from_labels(labels)};
}

}  // namespace modnmf
