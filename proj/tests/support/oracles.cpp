#include "oracles.hpp"

#include <algorithm>

#include <itk/cyclotomic.hpp>

namespace itk::test {

namespace {

// Position of an entry of smallest nonzero absolute value in the submatrix
// starting at (k, k), or (-1, -1) when it is all zero.
std::pair<int, int> smallest_pivot(const Matrix& a, int k) {
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  std::pair<int, int> best{-1, -1};
  mpz_class best_abs;
  for (int i = k; i < rows; ++i) {
    for (int j = k; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      mpz_class v = abs(a[i][j]);
      if (best.first < 0 || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(Matrix a) {
  if (a.empty() || a[0].empty()) return {};
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int steps = std::min(rows, cols);
  std::vector<mpz_class> d(steps, 0);

  for (int k = 0; k < steps; ++k) {
    for (;;) {
      auto [pi, pj] = smallest_pivot(a, k);
      if (pi < 0) break;
      std::swap(a[k], a[pi]);
      if (pj != k) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
      }

      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        mpz_class q = a[i][k] / a[k][k];
        if (q != 0) {
          for (int j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        }
        if (a[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        mpz_class q = a[k][j] / a[k][k];
        if (q != 0) {
          for (int i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        }
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the submatrix; fold a bad entry into
      // the pivot column and restart the reduction.
      bool divides_all = true;
      for (int i = k + 1; i < rows && divides_all; ++i) {
        for (int j = k + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[k][k].get_mpz_t())) {
            for (int jj = k; jj < cols; ++jj) a[k][jj] += a[i][jj];
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    d[k] = abs(a[k][k]);
  }

  std::stable_partition(d.begin(), d.end(),
                        [](const mpz_class& v) { return v != 0; });
  return d;
}

Matrix omega_mult_matrix(unsigned long p, int c, int n) {
  IntPoly phi_c = cyclotomic_phi(p, c);
  IntPoly om = cyclotomic_omega(p, n);
  int d = phi_c.degree();
  Matrix m(d, std::vector<mpz_class>(d, 0));
  for (int j = 0; j < d; ++j) {
    IntPoly q, r;
    IntPoly::divmod_monic(om.shifted(j), phi_c, &q, &r);
    for (int i = 0; i < d; ++i) m[i][j] = r.coeff(i);
  }
  return m;
}

mpz_class naive_determinant(const Matrix& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return mpz_class(1);
  if (n == 1) return a[0][0];
  mpz_class det = 0;
  for (int j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Matrix minor(n - 1, std::vector<mpz_class>(n - 1));
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor[i - 1][jj++] = a[i][k];
      }
    }
    mpz_class term = a[0][j] * naive_determinant(minor);
    det += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

}  // namespace itk::test
