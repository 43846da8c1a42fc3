#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "mslab/constants.hpp"
#include "mslab/errors.hpp"

namespace mslab {

const char* estimate_kind_name(EstimateKind k) {
    return k == EstimateKind::exact_spectral ? "exact_spectral"
                                             : "variational_lower_bound";
}

namespace {

void require_irreducible(const SparseOperator& op) {
    const std::vector<uint32_t> comp = op.components();
    uint32_t ncomp = 0;
    for (uint32_t c : comp) ncomp = std::max(ncomp, c + 1);
    if (ncomp > 1) {
        uint64_t witness = 0;
        for (uint64_t i = 0; i < op.dim; ++i)
            if (comp[i] != comp[0]) {
                witness = i;
                break;
            }
        throw ConfigError("operator is reducible (zero spectral gap): state " +
                          std::to_string(witness) +
                          " is disconnected from state 0");
    }
}

GapResult dense_gap(const SparseOperator& op) {
    const int N = static_cast<int>(op.dim);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        A(i, i) = op.diag[i];
        for (uint64_t k = op.row_ptr[i]; k < op.row_ptr[i + 1]; ++k)
            A(i, op.col[k]) -= op.rate[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    GapResult r;
    r.gap = es.eigenvalues()(1);  // smallest is ~0 (constants)
    Eigen::VectorXd v = es.eigenvectors().col(1);
    r.eigenvector.assign(v.data(), v.data() + N);
    r.iterations = 1;
    r.residual = 0.0;
    return r;
}

// Lanczos with full reorthogonalization on -L, the constant vector
// deflated explicitly. Finds the smallest eigenvalue of the deflated
// operator, i.e. the spectral gap.
GapResult lanczos_gap(const SparseOperator& op) {
    const uint64_t N = op.dim;
    const int max_inner = 300;
    const int max_restarts = 20;
    const double res_tol = 1e-9;

    std::mt19937_64 rng(20240817ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> start(N);
    for (double& x : start) x = gauss(rng);

    auto project_out_ones = [&](std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(N);
        for (double& x : v) x -= m;
    };
    auto norm = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (uint64_t i = 0; i < N; ++i) s += a[i] * b[i];
        return s;
    };

    GapResult out;
    int total_iters = 0;
    for (int restart = 0; restart < max_restarts; ++restart) {
        project_out_ones(start);
        double nrm = norm(start);
        if (nrm == 0.0) throw ConfigError("degenerate Lanczos start");
        for (double& x : start) x /= nrm;

        std::vector<std::vector<double>> V;
        V.push_back(start);
        std::vector<double> alpha, beta;
        std::vector<double> w(N);
        double theta = 0.0, resid = 1e300;
        Eigen::VectorXd ritz;
        int m = 0;
        for (m = 0; m < max_inner; ++m) {
            op.apply_neg(V[m].data(), w.data());
            project_out_ones(w);
            double a = dot(V[m], w);
            alpha.push_back(a);
            for (uint64_t i = 0; i < N; ++i) w[i] -= a * V[m][i];
            if (m > 0)
                for (uint64_t i = 0; i < N; ++i) w[i] -= beta[m - 1] * V[m - 1][i];
            // full reorthogonalization, two sweeps
            for (int sweep = 0; sweep < 2; ++sweep)
                for (const auto& v : V) {
                    const double c = dot(v, w);
                    for (uint64_t i = 0; i < N; ++i) w[i] -= c * v[i];
                }
            const double b = norm(w);
            ++total_iters;

            // Ritz estimate for the smallest eigenvalue
            const int k = m + 1;
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
            for (int i = 0; i < k; ++i) {
                T(i, i) = alpha[i];
                if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            const double new_theta = es.eigenvalues()(0);
            ritz = es.eigenvectors().col(0);
            resid = std::abs(b * ritz(k - 1));
            const bool settled = m > 3 && std::abs(new_theta - theta) < 1e-13;
            theta = new_theta;
            if (resid < res_tol || settled || b < 1e-12) break;
            beta.push_back(b);
            std::vector<double> next(N);
            for (uint64_t i = 0; i < N; ++i) next[i] = w[i] / b;
            V.push_back(std::move(next));
        }
        // Ritz vector in the original space
        std::vector<double> y(N, 0.0);
        const int k = static_cast<int>(V.size());
        for (int j = 0; j < k && j < ritz.size(); ++j)
            for (uint64_t i = 0; i < N; ++i) y[i] += ritz(j) * V[j][i];
        out.gap = theta;
        out.eigenvector = y;
        out.iterations = total_iters;
        out.residual = resid;
        if (resid < res_tol) return out;
        start = std::move(y);  // restart from the best Ritz vector
    }
    return out;
}

}  // namespace

GapResult spectral_gap(const SparseOperator& op) {
    if (op.dim < 2) throw ConfigError("spectral gap needs dimension >= 2");
    require_irreducible(op);
    return op.dim < kDenseSpectralLimit ? dense_gap(op) : lanczos_gap(op);
}

ConstantEstimate poincare_constant(const SparseOperator& op) {
    const GapResult g = spectral_gap(op);
    ConstantEstimate est;
    est.value = 1.0 / g.gap;
    est.kind = EstimateKind::exact_spectral;
    est.witness = g.eigenvector;
    est.iterations = g.iterations;
    est.residual = g.residual;
    est.indicator_seed_value = std::nan("");
    return est;
}

}  // namespace mslab
