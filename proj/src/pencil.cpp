#include "buoyancy/pencil.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace buoyancy {

PencilProblem build_pencil(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M, const Eigen::MatrixXd& G,
                           double a2) {
    const Eigen::Index n = K.rows();
    if (K.cols() != n || M.rows() != n || M.cols() != n || G.rows() != n || G.cols() != n) {
        throw std::invalid_argument("K, M and G must be square matrices of the same size");
    }
    PencilProblem p{Eigen::MatrixXd::Zero(3 * n, 3 * n), Eigen::MatrixXd::Zero(3 * n, 3 * n), n, a2};
    p.A.block(0, 0, n, n) = K;
    p.A.block(0, n, n, n) = -M;
    p.A.block(n, n, n, n) = K;
    p.A.block(2 * n, 2 * n, n, n) = K;
    p.B.block(n, 2 * n, n, n) = -a2 * G;
    p.B.block(2 * n, 0, n, n) = M;
    return p;
}

PencilProblem build_pencil(const GalerkinMatrices& mats) {
    return build_pencil(mats.K, mats.M, mats.G, mats.a2);
}

bool is_effectively_real(std::complex<double> r) {
    return std::abs(r.imag()) <= kRealityTolerance * (1.0 + std::abs(r.real()));
}

std::vector<std::complex<double>> finite_eigenvalues(const PencilProblem& pencil) {
    // A x = R (-B) x
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(pencil.A, -pencil.B, false);
    if (ges.info() != Eigen::Success) throw NoNeutralValue("QZ iteration did not converge");
    const auto& alphas = ges.alphas();
    const auto& betas = ges.betas();
    std::vector<std::complex<double>> out;
    for (Eigen::Index j = 0; j < alphas.size(); ++j) {
        if (betas(j) == 0.0) continue;
        const std::complex<double> r = alphas(j) / betas(j);
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()) || std::abs(r) > kInfiniteEigenvalue) continue;
        out.push_back(r);
    }
    return out;
}

NullVector null_vector(const PencilProblem& pencil, double r) {
    const Eigen::MatrixXd op = pencil.A + r * pencil.B;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
    NullVector out;
    out.vector = svd.matrixV().col(op.cols() - 1);
    out.residual = (op * out.vector).norm() / out.vector.norm();
    return out;
}

NeutralResult smallest_rayleigh(const PencilProblem& pencil) {
    const auto spectrum = finite_eigenvalues(pencil);
    NeutralResult result;
    std::complex<double> best{std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& r : spectrum) {
        if (!is_effectively_real(r)) {
            result.spectrum_real = false;
            continue;
        }
        if (r.real() > 0.0 && r.real() < best.real()) best = r;
    }
    if (!std::isfinite(best.real())) {
        throw NoNeutralValue("no neutral value in range: the pencil has no positive real eigenvalue");
    }
    result.r_signed = best.real();
    result.r_imag = best.imag();
    result.rayleigh_sq = best.real() * best.real();
    auto null = null_vector(pencil, best.real());
    result.eigvec = std::move(null.vector);
    result.residual = null.residual;
    if (!(result.residual < kResidualTolerance)) {
        throw NumericalFailure("eigenvector residual " + std::to_string(result.residual) + " exceeds tolerance",
                               result.residual);
    }
    return result;
}

LogDeterminant log_determinant(const PencilProblem& pencil, double r) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(pencil.A + r * pencil.B);
    const auto& lu_mat = lu.matrixLU();
    LogDeterminant out{0.0, static_cast<int>(lu.permutationP().determinant())};
    for (Eigen::Index j = 0; j < lu_mat.rows(); ++j) {
        const double d = lu_mat(j, j);
        if (d == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        if (d < 0.0) out.sign = -out.sign;
        out.log_abs += std::log(std::abs(d));
    }
    return out;
}

std::vector<Bracket> determinant_scan(const PencilProblem& pencil, double r_min, double r_max, int steps) {
    if (!(r_min > 0.0 && r_min < r_max)) throw std::invalid_argument("scan needs 0 < r_min < r_max");
    if (steps < 2) throw std::invalid_argument("scan needs at least two grid points");
    std::vector<Bracket> brackets;
    double prev_r = r_min;
    int prev_sign = log_determinant(pencil, r_min).sign;
    for (int j = 1; j < steps; ++j) {
        const double r = r_min + (r_max - r_min) * j / (steps - 1);
        const int sign = log_determinant(pencil, r).sign;
        if (sign == 0) {
            brackets.push_back({r, r});
        } else if (prev_sign != 0 && sign != prev_sign) {
            brackets.push_back({prev_r, r});
        }
        prev_r = r;
        prev_sign = sign;
    }
    return brackets;
}

double refine_root(const PencilProblem& pencil, Bracket bracket, double rel_width) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    int lo_sign = log_determinant(pencil, lo).sign;
    while (hi - lo > rel_width * std::abs(0.5 * (lo + hi))) {
        const double mid = 0.5 * (lo + hi);
        const int mid_sign = log_determinant(pencil, mid).sign;
        if (mid_sign == 0) return mid;
        if (mid_sign == lo_sign) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace buoyancy
