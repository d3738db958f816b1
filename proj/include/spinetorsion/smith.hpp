#pragma once

#include <gmpxx.h>

#include <vector>

namespace spinetorsion {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix int_zero(int rows, int cols);
IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, int inner);

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<mpz_class> diagonal;  // min(rows, cols) entries
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, int rows, int cols);

/// Cokernel Z^rows / A Z^cols as torsion coefficients (> 1) and free rank.
struct AbelianGroup {
  std::vector<mpz_class> torsion;
  int free_rank = 0;
};

AbelianGroup cokernel(const IntMatrix& a, int rows, int cols);

}  // namespace spinetorsion
