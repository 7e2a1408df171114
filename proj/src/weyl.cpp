#include "cliffsplit/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffsplit {

namespace {

void check_weyl_dim(i64 n) {
  if (n < 2 || n > kWeylMaxDim) {
    throw std::invalid_argument("numerical layer supports dimensions in [2, " +
                                std::to_string(kWeylMaxDim) + "], got " +
                                std::to_string(n));
  }
}

// exp(i * pi * e / N) from an integer phase exponent e, reduced mod 2N so
// the sine/cosine arguments stay small.
Complex unit_phase(i64 n, i64 e) {
  const i64 r = mod_reduce(e, 2 * n);
  const double angle =
      std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace

Complex omega(i64 n) {
  check_weyl_dim(n);
  return unit_phase(n, 2);
}

Complex tau(i64 n) {
  check_weyl_dim(n);
  return unit_phase(n, n + 1);  // -exp(i*pi/N) = exp(i*pi*(N+1)/N)
}

CMat pauli_x(i64 n) {
  check_weyl_dim(n);
  CMat x = CMat::Zero(n, n);
  for (i64 j = 0; j < n; ++j) {
    // X|j> = |j-1 mod N>: column j has its 1 in row j-1.
    x(mod_reduce(j - 1, n), j) = 1.0;
  }
  return x;
}

CMat pauli_z(i64 n) {
  check_weyl_dim(n);
  CMat z = CMat::Zero(n, n);
  for (i64 j = 0; j < n; ++j) {
    z(j, j) = unit_phase(n, 2 * j);  // omega^j
  }
  return z;
}

std::pair<CMat, CMat> pauli_matrices(i64 n) { return {pauli_x(n), pauli_z(n)}; }

CMat weyl(i64 n, i64 k, i64 ell) {
  check_weyl_dim(n);
  // W(k,l) = tau^{k*l} X^k Z^l has entries
  //   W_{i,j} = tau^{k*l} * omega^{j*l} * [i = j - k (mod N)],
  // assembled directly from integer phase exponents (tau = phase(N+1),
  // omega = phase(2)): exponent (N+1)*k*l + 2*j*l at column j.
  CMat w = CMat::Zero(n, n);
  for (i64 j = 0; j < n; ++j) {
    const i64 row = mod_reduce(j - k, n);
    // Reduce factors mod 2N before multiplying to keep products exact.
    const i64 e = mod_reduce(mod_reduce((n + 1) * mod_reduce(k, 2 * n), 2 * n) *
                                     mod_reduce(ell, 2 * n) +
                                 2 * j * mod_reduce(ell, 2 * n),
                             2 * n);
    w(row, j) = unit_phase(n, e);
  }
  return w;
}

CMat fourier_matrix(i64 n) {
  check_weyl_dim(n);
  CMat f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (i64 j = 0; j < n; ++j) {
    for (i64 k = 0; k < n; ++k) {
      f(j, k) = scale * unit_phase(n, mod_reduce(2 * j * k, 2 * n));
    }
  }
  return f;
}

CMat diagonal_phase_gate(i64 n) {
  check_weyl_dim(n);
  CMat d = CMat::Zero(n, n);
  for (i64 j = 0; j < n; ++j) {
    d(j, j) = unit_phase(n, mod_reduce((n + 1) * mod_reduce(j * j, 2 * n),
                                       2 * n));  // tau^{j^2}
  }
  return d;
}

bool is_unitary(const CMat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  CMat prod = u * u.adjoint();
  return (prod - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <
         tol;
}

bool approx_proportional(const CMat& u, const CMat& v, double tol,
                         Complex* lambda_out) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  Eigen::Index max_row = 0, max_col = 0;
  const Eigen::MatrixXd mods = v.cwiseAbs();
  const double max_mod = mods.maxCoeff(&max_row, &max_col);
  if (max_mod <= tol) return false;
  const Complex lambda = u(max_row, max_col) / v(max_row, max_col);
  if ((u - lambda * v).cwiseAbs().maxCoeff() >= tol) return false;
  if (lambda_out != nullptr) *lambda_out = lambda;
  return true;
}

Complex weyl_compose_phase(i64 n, std::pair<i64, i64> u, std::pair<i64, i64> w,
                           double tol) {
  check_weyl_dim(n);
  CMat product = weyl(n, u.first, u.second) * weyl(n, w.first, w.second);
  CMat target =
      weyl(n, mod_reduce(u.first + w.first, n), mod_reduce(u.second + w.second, n));
  Complex lambda;
  if (!approx_proportional(product, target, tol, &lambda)) {
    throw std::domain_error(
        "Weyl product is not proportional to the Weyl operator of the summed "
        "index");
  }
  return lambda;
}

std::optional<Mat2> projective_action(const CMat& u, double tol) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("projective_action requires a square matrix");
  }
  const i64 n = static_cast<i64>(u.rows());
  check_weyl_dim(n);
  if (!is_unitary(u, tol)) return std::nullopt;
  const CMat u_dag = u.adjoint();

  // Solve the two generator columns by scanning the N^2 phase-space points.
  i64 col[2][2] = {{0, 0}, {0, 0}};
  const std::pair<i64, i64> gens[2] = {{1, 0}, {0, 1}};
  for (int g = 0; g < 2; ++g) {
    CMat conj =
        u * weyl(n, gens[g].first, gens[g].second) * u_dag;
    bool found = false;
    for (i64 p = 0; p < n && !found; ++p) {
      for (i64 q = 0; q < n && !found; ++q) {
        if (approx_proportional(conj, weyl(n, p, q), tol)) {
          col[g][0] = p;
          col[g][1] = q;
          found = true;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  Mat2 action(n, col[0][0], col[1][0], col[0][1], col[1][1]);
  if (action.det() != 1) return std::nullopt;

  // The generator columns determine the map; verify linearity on every u.
  for (i64 k = 0; k < n; ++k) {
    for (i64 ell = 0; ell < n; ++ell) {
      CMat conj = u * weyl(n, k, ell) * u_dag;
      const Vec2 mapped = mat_vec(action, Vec2(n, k, ell));
      if (!approx_proportional(conj, weyl(n, mapped.x1, mapped.x2), tol)) {
        return std::nullopt;
      }
    }
  }
  return action;
}

}  // namespace cliffsplit
