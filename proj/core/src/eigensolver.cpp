#include "sgc/eigensolver.hpp"

#include <algorithm>
#include <cmath>

#include "sgc/rng.hpp"

namespace sgc {

namespace {

// Orthogonalize v against the columns of each basis block, twice (classical
// Gram-Schmidt repeated once restores orthogonality to machine precision).
void orthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& locked, int n_locked,
                   const Eigen::MatrixXd& basis, int n_basis) {
    for (int pass = 0; pass < 2; ++pass) {
        if (n_locked > 0) {
            const auto q = locked.leftCols(n_locked);
            v.noalias() -= q * (q.transpose() * v);
        }
        if (n_basis > 0) {
            const auto q = basis.leftCols(n_basis);
            v.noalias() -= q * (q.transpose() * v);
        }
    }
}

struct RitzPair {
    double value;
    Eigen::VectorXd coeffs;  // in the Krylov basis
    double residual;         // |beta_j| * |last coefficient|
};

}  // namespace

SpectralEmbedding smallest_eigenpairs(const Eigen::SparseMatrix<double>& l, int k,
                                      const EigenOptions& opts) {
    const int n = static_cast<int>(l.rows());
    if (l.cols() != n) throw std::invalid_argument("matrix must be square");
    if (k < 2 || k > n) throw std::invalid_argument("need 2 <= K <= n");

    const int want = std::min(k, n - 1);  // lambda_2..lambda_{K+1} live here
    const int budget = opts.max_iter > 0 ? opts.max_iter : 10 * n;
    const double tol = opts.tol;

    // locked holds 1/sqrt(n) followed by converged eigenvectors.
    Eigen::MatrixXd locked(n, want + 1);
    locked.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> values;
    int n_locked = 1;

    Rng rng(mix_seed(opts.seed, 0x65696773ULL));
    int matvecs = 0;
    double worst_residual = 0.0;
    const double scale = std::max(1.0, l.coeffs().size() > 0 ? l.coeffs().cwiseAbs().maxCoeff() : 1.0);

    Eigen::MatrixXd basis(n, std::min(n, 2 * want + 32));
    Eigen::VectorXd alpha(basis.cols()), beta(basis.cols());
    Eigen::VectorXd w(n), v(n);

    while (static_cast<int>(values.size()) < want) {
        const int room = n - n_locked;  // dimension of the unexplored invariant subspace
        if (room <= 0) break;
        const int m_max = std::min<int>(static_cast<int>(basis.cols()), room);

        // seeded random start orthogonal to everything locked
        for (int i = 0; i < n; ++i) v[i] = rng.uniform() - 0.5;
        orthogonalize(v, locked, n_locked, basis, 0);
        double nv = v.norm();
        if (nv < 1e-12) continue;  // another draw
        v /= nv;

        int j = 0;
        bool breakdown = false;
        while (j < m_max) {
            basis.col(j) = v;
            w.noalias() = l * v;
            ++matvecs;
            alpha[j] = v.dot(w);
            orthogonalize(w, locked, n_locked, basis, j + 1);
            beta[j] = w.norm();
            ++j;
            if (beta[j - 1] < 1e-13 * scale) {
                breakdown = true;  // invariant subspace exhausted
            } else {
                v = w / beta[j - 1];
            }

            const bool check = breakdown || j == m_max || (j >= 8 && j % 4 == 0);
            if (check) {
                Eigen::MatrixXd t = Eigen::MatrixXd::Zero(j, j);
                for (int r = 0; r < j; ++r) {
                    t(r, r) = alpha[r];
                    if (r + 1 < j) t(r, r + 1) = t(r + 1, r) = beta[r];
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
                std::vector<RitzPair> ritz(j);
                for (int i = 0; i < j; ++i) {
                    ritz[i].value = es.eigenvalues()[i];
                    ritz[i].coeffs = es.eigenvectors().col(i);
                    ritz[i].residual = breakdown ? 0.0
                                                 : beta[j - 1] * std::abs(ritz[i].coeffs[j - 1]);
                }
                // lock the converged prefix, smallest first
                int locked_now = 0;
                for (int i = 0; i < j && static_cast<int>(values.size()) < want; ++i) {
                    const double thresh = tol * std::max(1.0, std::abs(ritz[i].value));
                    if (ritz[i].residual > thresh) {
                        worst_residual = ritz[i].residual;
                        break;
                    }
                    Eigen::VectorXd y = basis.leftCols(j) * ritz[i].coeffs;
                    orthogonalize(y, locked, n_locked, basis, 0);
                    const double ny = y.norm();
                    if (ny < 0.1) continue;  // direction already represented
                    y /= ny;
                    locked.col(n_locked++) = y;
                    values.push_back(ritz[i].value);
                    ++locked_now;
                }
                if (locked_now > 0 || breakdown) break;  // restart the pass
                if (matvecs >= budget)
                    throw ConvergenceError(
                        "eigensolver: matvec budget exhausted (residual " +
                            std::to_string(worst_residual) + ")",
                        worst_residual);
            }
        }
        if (matvecs >= budget && static_cast<int>(values.size()) < want)
            throw ConvergenceError("eigensolver: matvec budget exhausted (residual " +
                                       std::to_string(worst_residual) + ")",
                                   worst_residual);
    }

    // Rayleigh-Ritz cleanup over the locked block: restores exact ordering and
    // tightens orthonormality after the independent passes.
    const int nev = static_cast<int>(values.size());
    Eigen::MatrixXd q = locked.middleCols(1, nev);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(q);
    q = qr.householderQ() * Eigen::MatrixXd::Identity(n, nev);
    Eigen::MatrixXd proj = q.transpose() * (l * q).eval();
    proj = 0.5 * (proj + proj.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proj);
    q = (q * es.eigenvectors()).eval();

    SpectralEmbedding emb;
    emb.k = k;
    emb.matvecs = matvecs;
    const int n_cols = std::min(k - 1, nev);
    emb.y = q.leftCols(n_cols);
    emb.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n_cols);
    if (nev > k - 1) {
        emb.lambda_k_plus_1 = es.eigenvalues()[k - 1];
        emb.has_lambda_k_plus_1 = true;
    }
    if (!emb.eigenvalues.empty() && emb.eigenvalues.front() < 1e-10 * n) emb.disconnected = true;
    return emb;
}

PartialEigsumResult partial_eigenvalue_sum(const Eigen::SparseMatrix<double>& l, int k,
                                           const EigenOptions& opts) {
    const int n = static_cast<int>(l.rows());
    PartialEigsumResult out;
    out.n = n;
    out.k = k;
    if (n <= 1) {  // no nonzero eigenvalues exist
        out.truncated = k > n;
        return out;
    }
    const int k_eff = std::min(k, n);
    out.truncated = k > n;
    const auto emb = smallest_eigenpairs(l, k_eff, opts);
    // S_{2:K} needs lambda_2..lambda_K = the first k_eff - 1 values
    for (int i = 0; i < k_eff - 1; ++i) out.value += emb.eigenvalues[i];
    out.disconnected = emb.disconnected;
    return out;
}

}  // namespace sgc
