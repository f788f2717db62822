#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/laurent.hpp"
#include "vqc/symfunc.hpp"

#include <stdexcept>
#include <vector>

namespace vqc {

using ComplexVector = std::vector<Complex>;
// Dense row-major square matrix.
struct ComplexMatrix {
    int size = 0;
    std::vector<Complex> data;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int m) : size(m), data(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {}
    Complex& operator()(int i, int j) { return data[static_cast<std::size_t>(i * size + j)]; }
    const Complex& operator()(int i, int j) const { return data[static_cast<std::size_t>(i * size + j)]; }
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

// Raised when a floating-point sum is not close enough to the integer it should equal.
class ResidualError : public std::runtime_error {
public:
    ResidualError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

inline constexpr double kRoundingTolerance = 1e-6;

// Rounds a complex value that must be an integer; throws ResidualError past the tolerance.
long long round_to_integer(Complex value, const std::string& context, double tolerance = kRoundingTolerance);

// Bethe roots of the phase model at z = 1, labelled by sigma in the (n-1) x k box.
struct BosonRoots {
    int n = 0;
    int k = 0;
    Partition sigma;
    std::vector<double> I;  // half-integers I(sigma^t), increasing
    PointVector x;
};

// Free-fermion Bethe roots at q = 1, labelled by sigma in the n x k box.
struct FermionRoots {
    int n = 0;
    int k = 0;
    Partition sigma;
    std::vector<double> I;
    PointVector y;
};

// I(sigma^t) = ((k+1)/2 + sigma^t_k - k, ..., (k+1)/2 + sigma^t_1 - 1).
std::vector<double> bethe_momenta(const Partition& sigma, int k);

std::vector<BosonRoots> bethe_roots_boson(int n, int k);
std::vector<FermionRoots> bethe_roots_fermion(int n, int k);

// max_i |x_i^{n+k} - (-1)^{k-1} e_k(x)|.
double bae_residual(const BosonRoots& r);
// Largest violation of h_{n+1} = ... = h_{n+k-1} = h_{n+k} + (-1)^k e_k = 0 and h_n = 1; 0 when k = 0.
double bae2_residual(const BosonRoots& r);
// max_i |y_i^N - (-1)^{k-1}|.
double freebae_residual(const FermionRoots& r);
// Largest violation of h_{N-k+1} = ... = h_{N-1} = h_N + (-1)^k = 0.
double ideal_residual(const FermionRoots& r);

// Components s_{P-hat(lambda)^t}(x^{-1}) in the order of affine_weights(n, k).
ComplexVector bethe_vector_boson(const BosonRoots& r);
// Components s_lambda(y^{-1}) in the order of partitions_in_box(k, n).
ComplexVector bethe_vector_fermion(const FermionRoots& r);

ComplexVector apply_matrix(const ComplexMatrix& m, const ComplexVector& v);
Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v);

// Finite part lambda_i - |lambda|/n and the Weyl vector rho_i = (n+1)/2 - i.
std::vector<double> finite_weight(const Partition& lambda, int n);
std::vector<double> weyl_vector(int n);

// Kac-Peterson Weyl sum, indexed by affine_weights(n, k) in both slots.
ComplexMatrix smatrix(int n, int k);
// (1/sqrt(n(k+n)^{n-1})) prod_{i<j} 2 sin(pi (sigma + rho, e_i - e_j)/(k+n)).
double s0_sin_product(const Partition& sigma, int n, int k);
// |Van_sigma|^2 realised as prod_{i<j} (2 sin(pi (sigma + rho, e_i - e_j)/(k+n)))^2.
double vandermonde_sin_squared(const Partition& sigma, int n, int k);
// Diagonal of the T-matrix: exp(2 pi i m(lambda)), m = |lambda+rho|^2/(2(k+n)) - |rho|^2/(2n).
ComplexVector tmatrix(int n, int k);
// Permutation matrix of lambda -> flip(lambda).
ComplexMatrix charge_conjugation(int n, int k);

// Verlinde formula sum_sigma S_{lambda sigma} S_{mu sigma} S_{nu* sigma} / S_{0 sigma}, rounded.
long long verlinde_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu);
// Matrix element <nu, s_lambda(A) mu> at z = 1 expanded in the Bethe eigenbasis with directly computed norms.
long long bethe_fusion_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu);

struct GwValue {
    int d = 0;
    long long c = 0;
};
// Bertram-Vafa-Intriligator sum over the fermionic roots; c = 0 when the degree constraint fails.
GwValue bvi_coeff(const Partition& lambda, const Partition& mu, const Partition& nu, int k, int big_n);

// Residual between T(u) b and [1 + (-1)^k e_k(x) u^{n+k}] prod 1/(1 - u x_i) b at z = 1.
double verify_transfer_eigen(const BosonRoots& r, Complex u);

// Max |e_r(A) b - h_r(x) b| over 0 <= r <= n.
double boson_eigen_residual(const BosonRoots& r);
// Max |e_r(U) b - e_r(y) b| and |h_r(U) b - h_r(y) b| over 1 <= r < N.
double fermion_eigen_residual(const FermionRoots& r);

struct NormReport {
    std::vector<Partition> sigmas;
    std::vector<double> measured;  // <b_sigma, b_sigma>
    std::vector<double> predicted;  // empty for the fermionic report
    double max_relative_error = 0;
    double max_orthogonality = 0;  // max |<b_sigma, b_tau>| over sigma != tau
};
// Compares <b_sigma, b_sigma> with n(n+k)^{n-1}/|Van_sigma|^2.
NormReport bethe_norm_check(int n, int k);
// Records fermionic norms and orthogonality without a predicted value.
NormReport fermion_norm_report(int n, int k);

}  // namespace vqc
