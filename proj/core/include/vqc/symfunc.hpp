#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/laurent.hpp"

#include <vector>

namespace vqc {

using PointVector = std::vector<Complex>;

// e_r(x) and h_r(x) from the generating products prod(1 + x_i t) and prod 1/(1 - x_i t).
Complex elementary_eval(int r, const PointVector& x);
Complex complete_eval(int r, const PointVector& x);

// All of e_0..e_max or h_0..h_max at once.
std::vector<Complex> elementary_all(int max_r, const PointVector& x);
std::vector<Complex> complete_all(int max_r, const PointVector& x);

// Determinant of a small dense complex matrix (row-major, size m x m).
Complex complex_det(const std::vector<Complex>& a, int m);

// s_lambda(x) = det(h_{lambda_i - i + j}(x)); zero when lambda has more rows than variables.
Complex schur_eval(const Partition& lambda, const PointVector& x);
// The dual form det(e_{lambda^t_i - i + j}(x)).
Complex schur_eval_dual(const Partition& lambda, const PointVector& x);

// Number of semistandard tableaux of shape lambda and content alpha.
long long kostka(const Partition& lambda, const std::vector<int>& alpha);

// Littlewood-Richardson coefficient c_{lambda mu}^{nu}; zero when sizes do not match.
long long littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace vqc
