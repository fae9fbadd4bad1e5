#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sgc {

struct EigenOptions {
    double tol = 1e-8;       // residual tolerance relative to max(1, |lambda|)
    int max_iter = 0;        // total matvec budget; 0 -> 10 * n
    std::uint64_t seed = 0;  // start-vector seed
};

struct ConvergenceError : std::runtime_error {
    double achieved_residual;
    ConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg), achieved_residual(res) {}
};

/// Eigenvectors for the K-1 smallest nonzero Laplacian eigenvalues, columns
/// ascending, plus lambda_{K+1} when it exists. All vectors orthogonal to 1.
struct SpectralEmbedding {
    Eigen::MatrixXd y;                 // n x (K-1)
    std::vector<double> eigenvalues;   // lambda_2 .. lambda_K
    double lambda_k_plus_1 = 0.0;
    bool has_lambda_k_plus_1 = false;
    int k = 0;
    bool disconnected = false;         // lambda_2 below 1e-10 * n
    int matvecs = 0;
};

/// Lanczos with full reorthogonalization against the Krylov basis, the known
/// null vector 1/sqrt(n), and previously locked eigenvectors; converged pairs
/// are locked and the iteration restarts until min(K, n-1) pairs are found.
/// Throws ConvergenceError when the matvec budget runs out first.
SpectralEmbedding smallest_eigenpairs(const Eigen::SparseMatrix<double>& l, int k,
                                      const EigenOptions& opts = {});

struct PartialEigsum {
    double value = 0.0;  // S_{2:K} = sum of lambda_2 .. lambda_K
    int k = 0;
    int n = 0;
    double normalized() const { return value / n; }
};

/// S_{2:K}(L). When K exceeds the matrix dimension the sum runs over the
/// eigenvalues that exist (lambda_2 .. lambda_n) and truncated is set.
struct PartialEigsumResult : PartialEigsum {
    bool truncated = false;
    bool disconnected = false;
};

PartialEigsumResult partial_eigenvalue_sum(const Eigen::SparseMatrix<double>& l, int k,
                                           const EigenOptions& opts = {});

}  // namespace sgc
