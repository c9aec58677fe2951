#pragma once

#include <gmpxx.h>

#include <vector>

#include <itk/int_poly.hpp>

namespace itk::test {

using Matrix = std::vector<std::vector<mpz_class>>;

// Elementary divisors d_0 | d_1 | ... of an integer matrix (non-negative,
// zeros last), by the classical Smith reduction.  Exact.
std::vector<mpz_class> smith_normal_form(Matrix a);

// Multiplication by omega_n on Z[X]/Phi_c in the power basis 1, X, ...,
// X^(phi(p^c)-1); column j holds X^j * omega_n mod Phi_c.
Matrix omega_mult_matrix(unsigned long p, int c, int n);

// Laplace-expansion determinant, for cross-checking the eliminations on
// small matrices.
mpz_class naive_determinant(const Matrix& a);

}  // namespace itk::test
