#include "mslab/graph.hpp"

#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>

#include "mslab/errors.hpp"

namespace mslab {

const char* graph_kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::mean_field: return "mean_field";
        case GraphKind::complete_srw: return "complete_srw";
        case GraphKind::cycle: return "cycle";
        case GraphKind::hypercube: return "hypercube";
        case GraphKind::custom: return "custom";
    }
    return "?";
}

bool WeightedGraph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < n; ++j) {
            if (!seen[j] && at(i, j) > 0) {
                seen[j] = 1;
                ++count;
                q.push(j);
            }
        }
    }
    return count == n;
}

static WeightedGraph uniform_offdiag(int n, double w, GraphKind kind) {
    if (n < 2) throw ConfigError("graph needs at least 2 sites");
    WeightedGraph g;
    g.n = n;
    g.kind = kind;
    g.weights.assign(static_cast<size_t>(n) * n, w);
    for (int i = 0; i < n; ++i) g.at(i, i) = 0.0;
    return g;
}

WeightedGraph WeightedGraph::mean_field(int n) {
    return uniform_offdiag(n, 1.0 / n, GraphKind::mean_field);
}

WeightedGraph WeightedGraph::complete_srw(int n) {
    return uniform_offdiag(n, 1.0 / (n - 1), GraphKind::complete_srw);
}

WeightedGraph WeightedGraph::cycle(int n) {
    if (n < 3) throw ConfigError("cycle needs at least 3 sites");
    WeightedGraph g;
    g.n = n;
    g.kind = GraphKind::cycle;
    g.weights.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        g.at(i, (i + 1) % n) = 0.5;
        g.at((i + 1) % n, i) = 0.5;
    }
    return g;
}

WeightedGraph WeightedGraph::hypercube(int d) {
    if (d < 1) throw ConfigError("hypercube dimension must be positive");
    const int n = 1 << d;
    WeightedGraph g;
    g.n = n;
    g.kind = GraphKind::hypercube;
    g.weights.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b) {
            g.at(i, i ^ (1 << b)) = 1.0 / d;
        }
    return g;
}

WeightedGraph WeightedGraph::by_name(const std::string& name, int n) {
    if (name == "mean_field") return mean_field(n);
    if (name == "complete_srw") return complete_srw(n);
    if (name == "cycle") return cycle(n);
    if (name == "hypercube") {
        int d = 0;
        while ((1 << d) < n) ++d;
        if ((1 << d) != n)
            throw ConfigError("hypercube graph requires a power-of-two site count, got " +
                              std::to_string(n));
        return hypercube(d);
    }
    throw ConfigError("unknown graph kind '" + name + "'");
}

WeightedGraph WeightedGraph::from_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph file '" + path + "'");
    std::string tag;
    int n = 0;
    long count = 0;
    if (!(in >> tag >> count) || tag != "n")
        throw ConfigError("graph file must start with header 'n <count>'");
    n = static_cast<int>(count);
    if (n < 2) throw ConfigError("graph file: need at least 2 sites");
    WeightedGraph g;
    g.n = n;
    g.kind = GraphKind::custom;
    g.weights.assign(static_cast<size_t>(n) * n, 0.0);
    int i, j;
    double w;
    while (in >> i >> j >> w) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw ConfigError("graph file: bad edge (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        if (w < 0) throw ConfigError("graph file: negative weight");
        g.at(i - 1, j - 1) = w;
        g.at(j - 1, i - 1) = w;
    }
    g.validate();
    return g;
}

void WeightedGraph::validate() const {
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0.0) throw ConfigError("graph has nonzero diagonal");
        for (int j = 0; j < i; ++j) {
            if (at(i, j) < 0) throw ConfigError("graph has negative weight");
            if (at(i, j) != at(j, i)) throw ConfigError("graph is not symmetric");
        }
    }
}

}  // namespace mslab
