#ifndef IFSAD_GRAPH_HPP
#define IFSAD_GRAPH_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ifsad {

// Fixed order of the structural characteristics computed per snapshot.
inline constexpr std::size_t kCharacteristicCount = 11;

extern const std::array<const char*, kCharacteristicCount> kCharacteristicNames;

namespace metric {
inline constexpr std::size_t node_size = 0;
inline constexpr std::size_t edge_size = 1;
inline constexpr std::size_t max_degree = 2;
inline constexpr std::size_t avg_degree = 3;
inline constexpr std::size_t kcore = 4;
inline constexpr std::size_t assortativity = 5;
inline constexpr std::size_t clustering = 6;
inline constexpr std::size_t structure_entropy = 7;
inline constexpr std::size_t avg_path_length = 8;
inline constexpr std::size_t diameter_max = 9;
inline constexpr std::size_t diameter_avg = 10;
} // namespace metric

// Returns the metric index for a characteristic name, or kCharacteristicCount
// if the name is unknown.
std::size_t characteristic_index(const std::string& name);

using CharacteristicVector = std::array<double, kCharacteristicCount>;

// One undirected simple graph extracted from a time window. Nodes keep their
// original labels; internally they are re-indexed in sorted label order so
// that everything downstream is deterministic regardless of input order.
// Immutable after construction.
class Snapshot {
public:
    Snapshot() = default;

    int tick() const { return tick_; }
    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Node labels in ascending lexicographic order; node i has labels()[i].
    const std::vector<std::string>& labels() const { return labels_; }

    // Sorted neighbour lists, indexed by node.
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    std::size_t degree(int v) const { return adj_[v].size(); }
    bool has_edge(int u, int v) const;

private:
    friend Snapshot build_snapshot(
        const std::vector<std::pair<std::string, std::string>>& edges, int tick);

    int tick_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

// Builds a snapshot from raw label pairs. Self-loops are dropped, parallel
// edges collapse, and the node set is the union of all endpoints (so a node
// mentioned only in a self-loop still exists, with degree 0).
Snapshot build_snapshot(const std::vector<std::pair<std::string, std::string>>& edges,
                        int tick = 0);

struct EccentricityProfile {
    double avg_path_length = 0.0;
    double diameter_max = 0.0;
    double diameter_avg = 0.0;
};

// Path-based metrics, computed over the largest connected component (ties
// broken by the component containing the smallest node label). Empty and
// single-node components give (0, 0, 0).
EccentricityProfile eccentricity_profile(const Snapshot& s);

// All 11 structural characteristics of a snapshot, in kCharacteristicNames
// order. Degenerate graphs follow the conventions: assortativity 0 when the
// endpoint degree variance vanishes, entropy 0 when there are no edges, and
// every metric 0 on the empty graph.
CharacteristicVector compute_characteristics(const Snapshot& s);

} // namespace ifsad

#endif
