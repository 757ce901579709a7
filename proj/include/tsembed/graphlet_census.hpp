#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsembed/temporal_graph.hpp"

namespace tsembed {

struct CensusConfig {
    int n_max = 4;    // max distinct nodes per graphlet, >= 2
    int m_max = 4;    // max events per graphlet, >= 1
    int delta_t = 1;  // max gap between consecutive event timesteps, >= 0

    void validate() const;
};

// Canonical form of an ordered event sequence: the lexicographically minimal
// relabeling of its nodes onto 0..n-1 that preserves the event order. In
// undirected mode each event pair is stored (min,max).
struct CanonicalCode {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> events;

    int event_count() const { return static_cast<int>(events.size()); }
    int node_count() const;
    std::string to_string() const;  // e.g. "0-1|1-2"

    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (auto c = a.events.size() <=> b.events.size(); c != 0) return c;
        return a.events <=> b.events;
    }
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalResult {
    CanonicalCode code;
    std::vector<int> orbit_of_position;           // canonical position -> orbit id within the type
    std::vector<std::pair<int, int>> node_positions;  // (input node, canonical position)

    int orbit_count() const;
    int position_of(int node) const;
};

// Minimal relabeling over all node bijections that preserve the event order;
// two sequences get equal codes iff an order-preserving isomorphism exists.
// Orbits are the equivalence classes of canonical positions under the
// automorphism group, numbered by smallest member position.
CanonicalResult canonical_code(std::span<const TemporalEdge> events, bool directed);

struct GraphletType {
    CanonicalCode code;
    int type_id = 0;  // rank of the code among all discovered codes
    int orbit_count = 0;
    std::vector<int> orbit_of_position;
};

struct GraphletCatalog {
    std::vector<GraphletType> types;  // sorted by code

    const GraphletType* find(const CanonicalCode& code) const;
    std::size_t size() const { return types.size(); }
};

struct DgdvMatrix {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> columns;  // (type_id, orbit_id), deterministic order
    std::vector<std::uint64_t> counts;         // row-major num_nodes x columns.size()
    std::uint64_t occurrences = 0;             // total graphlet occurrences counted

    int num_columns() const { return static_cast<int>(columns.size()); }
    std::uint64_t at(int node, int col) const { return counts[static_cast<std::size_t>(node) * columns.size() + col]; }
    std::uint64_t& at(int node, int col) { return counts[static_cast<std::size_t>(node) * columns.size() + col]; }
};

struct CensusResult {
    GraphletCatalog catalog;
    DgdvMatrix dgdv;

    std::string summary() const;  // "types=<K> orbits=<P> occurrences=<Q>"
};

// Enumerates every event sequence (e_1..e_j), j <= m_max, in global event
// order where consecutive events share a node, consecutive timesteps differ
// by at most delta_t, and at most n_max distinct nodes are touched. Each
// occurrence increments the orbit counter of every participating node.
// Results are identical for any thread count.
CensusResult enumerate_census(const TemporalGraph& g, const CensusConfig& cfg, int threads = 1);

// Number of dynamic graphlet types with exactly n nodes and m events,
// evaluated exactly in integer arithmetic. Requires n >= 3, m >= 1.
std::uint64_t graphlet_type_count(int n, int m);

void export_dgdv(const DgdvMatrix& m, const std::vector<std::string>& node_labels, const std::string& path);

// Reads a file produced by export_dgdv. Column metadata comes from the
// header; the catalog itself is not reconstructed.
DgdvMatrix import_dgdv(const std::string& path, const TemporalGraph& g);

}  // namespace tsembed
