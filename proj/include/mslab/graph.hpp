#pragma once

#include <string>
#include <vector>

namespace mslab {

enum class GraphKind { mean_field, complete_srw, cycle, hypercube, custom };

const char* graph_kind_name(GraphKind k);

// Symmetric nonnegative rate array G over n sites, zero diagonal.
struct WeightedGraph {
    int n = 0;
    GraphKind kind = GraphKind::custom;
    std::vector<double> weights;  // row-major n*n

    double at(int i, int j) const { return weights[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return weights[static_cast<size_t>(i) * n + j]; }

    bool connected() const;

    // All off-diagonal weights 1/n; weighted Dirichlet form then reduces
    // exactly to the mean-field one.
    static WeightedGraph mean_field(int n);
    // SRW transition matrix on the complete graph: 1/(n-1) off-diagonal.
    static WeightedGraph complete_srw(int n);
    // SRW on the n-cycle: 1/2 to each neighbor.
    static WeightedGraph cycle(int n);
    // SRW on the d-dimensional hypercube (n = 2^d sites): 1/d per neighbor.
    static WeightedGraph hypercube(int d);

    // "mean_field" | "complete_srw" | "cycle" | "hypercube" on n sites;
    // hypercube requires n to be a power of two.
    static WeightedGraph by_name(const std::string& name, int n);

    // Edge-list text file: header "n <count>", then "i j weight" triples
    // (1-based); symmetric closure applied.
    static WeightedGraph from_edge_list(const std::string& path);

    void validate() const;  // symmetry, nonnegativity, zero diagonal
};

}  // namespace mslab
