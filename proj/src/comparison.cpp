#include <Eigen/Dense>

#include "mslab/constants.hpp"
#include "mslab/errors.hpp"

namespace mslab {

namespace {

Eigen::MatrixXd dense_neg_generator(const SparseOperator& op) {
    const int N = static_cast<int>(op.dim);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        A(i, i) = op.diag[i];
        for (uint64_t k = op.row_ptr[i]; k < op.row_ptr[i + 1]; ++k)
            A(i, op.col[k]) -= op.rate[k];
    }
    return A;
}

}  // namespace

double comparison_constant(const WeightedGraph& graph, int n) {
    if (n < 2) throw ConfigError("comparison constant needs n >= 2");
    if (n > 7)
        throw CapError("comparison constant is computed on the full symmetric "
                       "group; n is capped at 7 (got " + std::to_string(n) + ")");
    if (graph.n != n) throw ConfigError("graph site count mismatch");
    if (!graph.connected())
        throw ConfigError("graph is disconnected: the Dirichlet kernels have "
                          "different kernels and no finite comparison constant");

    StateSpace space{ColorProfile(std::vector<int>(n, 1))};
    const SparseOperator kg = build_generator(space, graph);
    const SparseOperator kmf = build_generator(space, WeightedGraph::mean_field(n));
    const int N = static_cast<int>(space.size());
    Eigen::MatrixXd A = dense_neg_generator(kg);
    Eigen::MatrixXd B = dense_neg_generator(kmf);

    // Householder reflection mapping e1 to the constant direction; the
    // shared kernel then occupies the first row/column and the trailing
    // (N-1) block is the pencil on its orthogonal complement.
    Eigen::VectorXd u = Eigen::VectorXd::Constant(N, 1.0 / std::sqrt(double(N)));
    Eigen::VectorXd v = u - Eigen::VectorXd::Unit(N, 0);
    const double vn2 = v.squaredNorm();
    if (vn2 > 0) {
        const Eigen::MatrixXd H =
            Eigen::MatrixXd::Identity(N, N) - (2.0 / vn2) * (v * v.transpose());
        A = H * A * H;
        B = H * B * H;
    }
    Eigen::MatrixXd Ar = A.bottomRightCorner(N - 1, N - 1);
    Eigen::MatrixXd Br = B.bottomRightCorner(N - 1, N - 1);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Ar, Br);
    if (ges.info() != Eigen::Success)
        throw std::runtime_error("generalized eigensolver failed");
    return ges.eigenvalues().maxCoeff();
}

}  // namespace mslab
