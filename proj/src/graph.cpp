#include "ifsad/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace ifsad {

const std::array<const char*, kCharacteristicCount> kCharacteristicNames = {
    "node_size",      "edge_size",       "max_degree",      "avg_degree",
    "kcore",          "assortativity",   "clustering",      "structure_entropy",
    "avg_path_length", "diameter_max",   "diameter_avg",
};

std::size_t characteristic_index(const std::string& name) {
    for (std::size_t i = 0; i < kCharacteristicCount; ++i)
        if (name == kCharacteristicNames[i]) return i;
    return kCharacteristicCount;
}

bool Snapshot::has_edge(int u, int v) const {
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

Snapshot build_snapshot(const std::vector<std::pair<std::string, std::string>>& edges,
                        int tick) {
    std::map<std::string, int> index;
    for (const auto& [a, b] : edges) {
        index.emplace(a, 0);
        index.emplace(b, 0);
    }
    Snapshot s;
    s.tick_ = tick;
    s.labels_.reserve(index.size());
    for (auto& [label, idx] : index) {
        idx = static_cast<int>(s.labels_.size());
        s.labels_.push_back(label);
    }

    std::set<std::pair<int, int>> unique_edges;
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        int u = index[a];
        int v = index[b];
        unique_edges.emplace(std::min(u, v), std::max(u, v));
    }

    s.adj_.assign(s.labels_.size(), {});
    for (const auto& [u, v] : unique_edges) {
        s.adj_[u].push_back(v);
        s.adj_[v].push_back(u);
    }
    for (auto& nbrs : s.adj_) std::sort(nbrs.begin(), nbrs.end());
    s.edge_count_ = unique_edges.size();
    return s;
}

namespace {

// Connected components by BFS; returns component id per node.
std::vector<int> components(const Snapshot& s, int& count) {
    const int n = static_cast<int>(s.node_count());
    std::vector<int> comp(n, -1);
    count = 0;
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = count;
        queue.assign(1, start);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : s.adjacency()[u]) {
                if (comp[v] < 0) {
                    comp[v] = count;
                    queue.push_back(v);
                }
            }
        }
        ++count;
    }
    return comp;
}

std::vector<int> bfs_distances(const Snapshot& s, int source) {
    std::vector<int> dist(s.node_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : s.adjacency()[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

// Degeneracy: peel minimum-degree nodes with a bucket queue; the answer is
// the largest degree seen at removal time.
int degeneracy(const Snapshot& s) {
    const int n = static_cast<int>(s.node_count());
    if (n == 0) return 0;
    std::vector<int> deg(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(s.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(max_deg + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);

    std::vector<bool> removed(n, false);
    int core = 0;
    int processed = 0;
    int d = 0;
    while (processed < n) {
        while (buckets[d].empty()) ++d;
        int v = buckets[d].back();
        buckets[d].pop_back();
        // Entries go stale when a degree drops; the live entry is the one
        // matching the current degree.
        if (removed[v] || deg[v] != d) continue;
        removed[v] = true;
        ++processed;
        core = std::max(core, d);
        for (int u : s.adjacency()[v]) {
            if (!removed[u] && deg[u] > d) {
                --deg[u];
                buckets[deg[u]].push_back(u);
                if (deg[u] < d) d = deg[u];
            }
        }
    }
    return core;
}

// Newman degree assortativity: Pearson correlation of endpoint degrees over
// the edge list. Zero by convention when the variance vanishes.
double assortativity_coefficient(const Snapshot& s) {
    if (s.edge_count() == 0) return 0.0;
    double sum_jk = 0.0, sum_half = 0.0, sum_sq_half = 0.0;
    const int n = static_cast<int>(s.node_count());
    for (int u = 0; u < n; ++u) {
        for (int v : s.adjacency()[u]) {
            if (v <= u) continue;
            double j = static_cast<double>(s.degree(u));
            double k = static_cast<double>(s.degree(v));
            sum_jk += j * k;
            sum_half += 0.5 * (j + k);
            sum_sq_half += 0.5 * (j * j + k * k);
        }
    }
    const double m = static_cast<double>(s.edge_count());
    const double mean = sum_half / m;
    const double var = sum_sq_half / m - mean * mean;
    const double cov = sum_jk / m - mean * mean;
    if (var <= 1e-15 * std::max(1.0, sum_sq_half / m)) return 0.0;
    return cov / var;
}

// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double mean_clustering(const Snapshot& s) {
    const int n = static_cast<int>(s.node_count());
    if (n == 0) return 0.0;
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = s.adjacency()[v];
        const std::size_t k = nbrs.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (s.has_edge(nbrs[i], nbrs[j])) ++links;
        total += 2.0 * static_cast<double>(links) /
                 (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return total / static_cast<double>(n);
}

// Shannon entropy (nats) of p_i = deg(i) / 2|E|; 0 when there are no edges.
double structure_entropy_of(const Snapshot& s) {
    if (s.edge_count() == 0) return 0.0;
    const double total = 2.0 * static_cast<double>(s.edge_count());
    double h = 0.0;
    for (std::size_t v = 0; v < s.node_count(); ++v) {
        const double d = static_cast<double>(s.degree(static_cast<int>(v)));
        if (d == 0.0) continue;
        const double p = d / total;
        h -= p * std::log(p);
    }
    return h;
}

} // namespace

EccentricityProfile eccentricity_profile(const Snapshot& s) {
    EccentricityProfile out;
    const int n = static_cast<int>(s.node_count());
    if (n == 0) return out;

    int comp_count = 0;
    std::vector<int> comp = components(s, comp_count);
    std::vector<int> size(comp_count, 0);
    for (int v = 0; v < n; ++v) ++size[comp[v]];
    // Largest component; node indices follow label order, so the first
    // component hitting the max size is the one with the smallest label.
    int best = 0;
    for (int c = 1; c < comp_count; ++c)
        if (size[c] > size[best]) best = c;

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (comp[v] == best) members.push_back(v);
    if (members.size() < 2) return out;

    double dist_sum = 0.0;
    long long pair_count = 0;
    double ecc_sum = 0.0;
    int ecc_max = 0;
    for (int u : members) {
        std::vector<int> dist = bfs_distances(s, u);
        int ecc = 0;
        for (int v : members) {
            if (v > u) {
                dist_sum += dist[v];
                ++pair_count;
            }
            ecc = std::max(ecc, dist[v]);
        }
        ecc_sum += ecc;
        ecc_max = std::max(ecc_max, ecc);
    }
    out.avg_path_length = dist_sum / static_cast<double>(pair_count);
    out.diameter_max = static_cast<double>(ecc_max);
    out.diameter_avg = ecc_sum / static_cast<double>(members.size());
    return out;
}

CharacteristicVector compute_characteristics(const Snapshot& s) {
    CharacteristicVector c{};
    const int n = static_cast<int>(s.node_count());
    if (n == 0) return c;

    std::size_t max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, s.degree(v));

    c[metric::node_size] = static_cast<double>(n);
    c[metric::edge_size] = static_cast<double>(s.edge_count());
    c[metric::max_degree] = static_cast<double>(max_deg);
    c[metric::avg_degree] = 2.0 * static_cast<double>(s.edge_count()) / n;
    c[metric::kcore] = static_cast<double>(degeneracy(s));
    c[metric::assortativity] = assortativity_coefficient(s);
    c[metric::clustering] = mean_clustering(s);
    c[metric::structure_entropy] = structure_entropy_of(s);

    const EccentricityProfile ecc = eccentricity_profile(s);
    c[metric::avg_path_length] = ecc.avg_path_length;
    c[metric::diameter_max] = ecc.diameter_max;
    c[metric::diameter_avg] = ecc.diameter_avg;
    return c;
}

} // namespace ifsad
