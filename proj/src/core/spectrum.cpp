#include "core/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace topo {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void sort_by_abs_desc(std::vector<double>& vals) {
    std::sort(vals.begin(), vals.end(), [](double a, double b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        return a > b;
    });
}

std::vector<double> dense_spectrum(const Graph& lcc) {
    const auto n = static_cast<Eigen::Index>(lcc.node_count());
    MatrixXd a = MatrixXd::Zero(n, n);
    lcc.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    });
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::internal, "spectrum: dense eigensolver failed");
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    sort_by_abs_desc(vals);
    return vals;
}

// Lanczos with full reorthogonalization; finds the eigenvalue of largest
// magnitude in the complement of the already-converged vectors.
struct LanczosOutcome {
    double value = 0.0;
    VectorXd vector;
    bool converged = false;
};

class Lanczos {
public:
    Lanczos(const Graph& lcc, double tol, std::uint64_t seed, std::uint64_t max_matvecs)
        : lcc_(lcc),
          n_(static_cast<Eigen::Index>(lcc.node_count())),
          tol_(tol),
          rng_(seed),
          matvecs_left_(max_matvecs) {}

    LanczosOutcome next_eigenpair(const std::vector<VectorXd>& converged_vecs, double scale) {
        LanczosOutcome best;
        // Restarted outer loop: each pass runs a fresh Krylov sequence from
        // the previous best Ritz vector (random on the first pass).
        VectorXd start = random_vector();
        for (int pass = 0; pass < 40 && matvecs_left_ > 0; ++pass) {
            best = run_sequence(start, converged_vecs, scale);
            if (best.converged || best.vector.size() == 0) break;
            start = best.vector;
        }
        return best;
    }

private:
    VectorXd random_vector() {
        VectorXd v(n_);
        for (Eigen::Index i = 0; i < n_; ++i) v[i] = rng_.unit() - 0.5;
        return v;
    }

    void matvec(const VectorXd& x, VectorXd& y) {
        for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(n_); ++u) {
            double s = 0.0;
            for (std::uint32_t w : lcc_.neighbors(u)) s += x[w];
            y[u] = s;
        }
    }

    static void orthogonalize(VectorXd& w, const std::vector<VectorXd>& basis) {
        for (const auto& q : basis) w -= q.dot(w) * q;
    }

    LanczosOutcome run_sequence(const VectorXd& start, const std::vector<VectorXd>& deflated,
                                double scale) {
        LanczosOutcome out;
        const Eigen::Index max_dim =
            std::min<Eigen::Index>(n_ - static_cast<Eigen::Index>(deflated.size()),
                                   std::max<Eigen::Index>(60, 2 * static_cast<Eigen::Index>(deflated.size()) + 20));
        if (max_dim <= 0) return out;

        std::vector<VectorXd> basis;
        std::vector<double> alpha, beta;  // beta[j] couples q_j and q_{j+1}
        VectorXd q = start;
        orthogonalize(q, deflated);
        if (q.norm() < 1e-12) q = random_vector(), orthogonalize(q, deflated);
        q.normalize();
        basis.push_back(q);

        VectorXd w(n_);
        for (Eigen::Index j = 0; j < max_dim && matvecs_left_ > 0; ++j) {
            --matvecs_left_;
            matvec(basis[j], w);
            const double a = basis[j].dot(w);
            alpha.push_back(a);
            w -= a * basis[j];
            if (j > 0) w -= beta[j - 1] * basis[j - 1];
            orthogonalize(w, deflated);
            orthogonalize(w, basis);  // full reorthogonalization
            const double b = w.norm();

            // Ritz pair of largest magnitude from the current tridiagonal.
            MatrixXd t = MatrixXd::Zero(j + 1, j + 1);
            for (Eigen::Index i = 0; i <= j; ++i) {
                t(i, i) = alpha[i];
                if (i > 0) t(i, i - 1) = t(i - 1, i) = beta[i - 1];
            }
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(t);
            Eigen::Index pick = 0;
            for (Eigen::Index i = 1; i <= j; ++i) {
                if (std::abs(es.eigenvalues()[i]) > std::abs(es.eigenvalues()[pick])) pick = i;
            }
            const double theta = es.eigenvalues()[pick];
            const double resid = std::abs(b * es.eigenvectors()(j, pick));

            const bool invariant = b < 1e-12;
            if (resid <= tol_ * std::max(std::abs(theta), scale) || invariant ||
                j == max_dim - 1 || matvecs_left_ == 0) {
                out.value = theta;
                out.vector = VectorXd::Zero(n_);
                for (Eigen::Index i = 0; i <= j; ++i) out.vector += es.eigenvectors()(i, pick) * basis[i];
                out.vector.normalize();
                out.converged = resid <= tol_ * std::max(std::abs(theta), scale) || invariant;
                return out;
            }
            beta.push_back(b);
            basis.push_back(w / b);
        }
        return out;
    }

    const Graph& lcc_;
    Eigen::Index n_;
    double tol_;
    Rng rng_;
    std::uint64_t matvecs_left_;
};

std::vector<double> iterative_spectrum(const Graph& lcc, std::size_t top_k,
                                       const SpectrumOptions& opts) {
    const std::size_t n = lcc.node_count();
    Lanczos lanczos(lcc, opts.tolerance, opts.rng_seed, 10 * static_cast<std::uint64_t>(n));
    std::vector<VectorXd> vectors;
    std::vector<double> values;
    double scale = 1.0;
    for (std::size_t i = 0; i < top_k; ++i) {
        auto pair = lanczos.next_eigenpair(vectors, scale);
        if (pair.vector.size() == 0) break;  // matvec budget exhausted
        values.push_back(pair.value);
        vectors.push_back(pair.vector);
        scale = std::max(scale, std::abs(pair.value));
    }
    sort_by_abs_desc(values);
    return values;
}

}  // namespace

SpectrumResult spectrum(const Graph& g, std::size_t top_k, const SpectrumOptions& opts) {
    if (g.node_count() == 0) fail(ErrorKind::invalid_argument, "spectrum: empty graph");
    SpectrumResult res;
    res.count_requested = top_k;
    const Graph lcc = largest_component_subgraph(g, &res.coverage);
    res.component_n = lcc.node_count();
    if (top_k > res.component_n) {
        top_k = res.component_n;
        res.clamped = true;
    }
    if (res.component_n <= opts.dense_threshold) {
        res.method = SpectrumMethod::dense;
        res.eigenvalues = dense_spectrum(lcc);
    } else {
        res.method = SpectrumMethod::iterative;
        res.eigenvalues = iterative_spectrum(lcc, top_k, opts);
    }
    return res;
}

}  // namespace topo
