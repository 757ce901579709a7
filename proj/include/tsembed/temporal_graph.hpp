#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tsembed {

// A dynamic edge. `t` is a snapshot index; real-valued timestamps must be
// binned before loading. Edges are stored in global event order: ascending
// timestep, ties broken by input order, and `index` is the position in that
// ordering.
struct TemporalEdge {
    int src = 0;
    int dst = 0;
    int t = 0;
};

struct IncidentEdge {
    int neighbor = 0;  // the other endpoint, seen from the owning node
    int t = 0;
    int edge_index = 0;  // index into TemporalGraph::edges()
};

// Immutable after load; safe to share across threads.
class TemporalGraph {
public:
    // Input lines: `src dst t`, whitespace or comma separated. `#` comments
    // and blank lines are ignored. Self-loops are skipped (counted), negative
    // timesteps and malformed lines are errors.
    static TemporalGraph load_edge_list(const std::string& path, bool directed);

    // Build directly from labeled triples (mainly for tests and tools).
    static TemporalGraph from_triples(const std::vector<std::tuple<std::string, std::string, int>>& triples,
                                      bool directed);

    int num_nodes() const { return static_cast<int>(labels_.size()); }
    std::size_t num_edges() const { return edges_.size(); }
    int t_max() const { return t_max_; }
    bool directed() const { return directed_; }
    std::size_t self_loops_skipped() const { return self_loops_skipped_; }

    // Global event order: ascending (t, input order).
    const std::vector<TemporalEdge>& edges() const { return edges_; }

    const std::string& label(int node) const { return labels_[node]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find_node(const std::string& label) const;

    // All incident edges of v (outgoing if directed) with timestep >= t, or
    // > t in strict mode. Sorted ascending by (t, neighbor, edge_index).
    std::span<const IncidentEdge> temporal_neighborhood(int v, int t, bool strict = false) const;

    // Full incident edge list of v (same ordering).
    std::span<const IncidentEdge> incident(int v) const { return {adjacency_[v].data(), adjacency_[v].size()}; }

    void save_edge_list(const std::string& path) const;

    std::string summary() const;  // "nodes=<N> edges=<M> timesteps=<T>"

private:
    TemporalGraph() = default;
    void finalize(std::vector<TemporalEdge> edges);

    bool directed_ = false;
    int t_max_ = 0;
    std::size_t self_loops_skipped_ = 0;
    std::vector<TemporalEdge> edges_;
    std::vector<std::vector<IncidentEdge>> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> id_of_label_;
};

struct NodeLabels {
    std::vector<int> class_of;  // per node id; -1 = unlabeled
    std::vector<std::string> class_names;

    int num_classes() const { return static_cast<int>(class_names.size()); }
    std::size_t num_labeled() const;
};

// Lines: `node class`. Every referenced node must exist in the graph; nodes
// missing from the file stay unlabeled.
NodeLabels load_labels(const std::string& path, const TemporalGraph& g);

}  // namespace tsembed
