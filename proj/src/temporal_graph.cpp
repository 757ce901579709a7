#include "tsembed/temporal_graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tsembed/util.hpp"

namespace tsembed {

namespace {

struct RawEdge {
    std::string src, dst;
    int t;
};

std::vector<RawEdge> parse_edge_lines(std::istream& in, const std::string& origin, std::size_t& self_loops) {
    std::vector<RawEdge> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 3) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected `src dst t`, got " + std::to_string(fields.size()) + " fields");
        }
        long long t = 0;
        try {
            std::size_t pos = 0;
            t = std::stoll(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": bad timestep `" + fields[2] + "`");
        }
        if (t < 0) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": negative timestep " +
                                     std::to_string(t));
        }
        if (fields[0] == fields[1]) {
            ++self_loops;
            continue;
        }
        raw.push_back({fields[0], fields[1], static_cast<int>(t)});
    }
    return raw;
}

}  // namespace

TemporalGraph TemporalGraph::load_edge_list(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    TemporalGraph g;
    g.directed_ = directed;
    auto raw = parse_edge_lines(in, path, g.self_loops_skipped_);

    std::vector<TemporalEdge> edges;
    edges.reserve(raw.size());
    for (const auto& r : raw) {
        auto intern = [&](const std::string& name) {
            auto [it, inserted] = g.id_of_label_.try_emplace(name, static_cast<int>(g.labels_.size()));
            if (inserted) g.labels_.push_back(name);
            return it->second;
        };
        int s = intern(r.src);
        int d = intern(r.dst);
        edges.push_back({s, d, r.t});
    }
    g.finalize(std::move(edges));
    return g;
}

TemporalGraph TemporalGraph::from_triples(const std::vector<std::tuple<std::string, std::string, int>>& triples,
                                          bool directed) {
    std::ostringstream buf;
    for (const auto& [s, d, t] : triples) buf << s << ' ' << d << ' ' << t << '\n';
    std::istringstream in(buf.str());

    TemporalGraph g;
    g.directed_ = directed;
    auto raw = parse_edge_lines(in, "<memory>", g.self_loops_skipped_);
    std::vector<TemporalEdge> edges;
    for (const auto& r : raw) {
        auto intern = [&](const std::string& name) {
            auto [it, inserted] = g.id_of_label_.try_emplace(name, static_cast<int>(g.labels_.size()));
            if (inserted) g.labels_.push_back(name);
            return it->second;
        };
        edges.push_back({intern(r.src), intern(r.dst), r.t});
    }
    g.finalize(std::move(edges));
    return g;
}

void TemporalGraph::finalize(std::vector<TemporalEdge> edges) {
    std::stable_sort(edges.begin(), edges.end(), [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
    edges_ = std::move(edges);

    t_max_ = 0;
    for (const auto& e : edges_) t_max_ = std::max(t_max_, e.t);

    adjacency_.assign(labels_.size(), {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const auto& e = edges_[i];
        adjacency_[e.src].push_back({e.dst, e.t, i});
        if (!directed_) adjacency_[e.dst].push_back({e.src, e.t, i});
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end(), [](const IncidentEdge& a, const IncidentEdge& b) {
            if (a.t != b.t) return a.t < b.t;
            if (a.neighbor != b.neighbor) return a.neighbor < b.neighbor;
            return a.edge_index < b.edge_index;
        });
    }
}

std::optional<int> TemporalGraph::find_node(const std::string& label) const {
    auto it = id_of_label_.find(label);
    if (it == id_of_label_.end()) return std::nullopt;
    return it->second;
}

std::span<const IncidentEdge> TemporalGraph::temporal_neighborhood(int v, int t, bool strict) const {
    const auto& adj = adjacency_[v];
    int threshold = strict ? t + 1 : t;
    auto it = std::lower_bound(adj.begin(), adj.end(), threshold,
                               [](const IncidentEdge& e, int value) { return e.t < value; });
    return {&*it, static_cast<std::size_t>(adj.end() - it)};
}

void TemporalGraph::save_edge_list(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    for (const auto& e : edges_) out << labels_[e.src] << ' ' << labels_[e.dst] << ' ' << e.t << '\n';
}

std::string TemporalGraph::summary() const {
    std::ostringstream out;
    out << "nodes=" << num_nodes() << " edges=" << num_edges() << " timesteps=" << (num_edges() ? t_max_ + 1 : 0);
    return out.str();
}

std::size_t NodeLabels::num_labeled() const {
    std::size_t n = 0;
    for (int c : class_of)
        if (c >= 0) ++n;
    return n;
}

NodeLabels load_labels(const std::string& path, const TemporalGraph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file: " + path);

    NodeLabels labels;
    labels.class_of.assign(g.num_nodes(), -1);
    std::unordered_map<std::string, int> class_ids;
    std::set<std::string> unknown;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 2) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `node class`");
        }
        auto node = g.find_node(fields[0]);
        if (!node) {
            unknown.insert(fields[0]);
            continue;
        }
        auto [it, inserted] = class_ids.try_emplace(fields[1], static_cast<int>(labels.class_names.size()));
        if (inserted) labels.class_names.push_back(fields[1]);
        if (labels.class_of[*node] >= 0 && labels.class_of[*node] != it->second) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": conflicting label for node `" +
                                     fields[0] + "`");
        }
        labels.class_of[*node] = it->second;
    }
    if (!unknown.empty()) {
        std::string msg = "label file references unknown nodes:";
        for (const auto& name : unknown) msg += " " + name;
        throw std::runtime_error(msg);
    }
    if (labels.num_classes() < 2) {
        throw std::runtime_error("label file must name at least 2 classes, got " +
                                 std::to_string(labels.num_classes()));
    }
    return labels;
}

}  // namespace tsembed
