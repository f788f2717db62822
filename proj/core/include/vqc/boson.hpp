#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/ncpoly.hpp"
#include "vqc/state.hpp"

#include <vector>

namespace vqc {

// A word in noncommuting generators written left to right; the rightmost letter acts first.
using GenWord = std::vector<int>;

// Which index outside a proper subset of Z_n starts the cyclic linearisation.
enum class GapChoice { first, last };

// Phase algebra on H[z]: phi*_i adds 1 to m_i, phi_i subtracts 1 or kills the label.
BosonState apply_phi_star(int i, const BosonState& v);
BosonState apply_phi(int i, const BosonState& v);

// a_i = phi*_{i+1} phi_i for i != 0 and a_0 = z phi*_1 phi_0.
BosonState apply_a(int i, const BosonState& v);
BosonState apply_a_word(const GenWord& w, const BosonState& v);

// Monomials of e_r(A) for 1 <= r <= n-1: r-subsets in anticlockwise order (a_{i+1} left of a_i).
std::vector<GenWord> nc_e_words(int r, int n, GapChoice gap = GapChoice::first);
// Monomials of h_r(A) for 1 <= r <= n-1: r-multisets in clockwise order (a_i left of a_{i+1}).
std::vector<GenWord> nc_h_words(int r, int n, GapChoice gap = GapChoice::first);

// e_0 = 1, e_n = z, e_r = 0 for r > n.
BosonState nc_e_apply(int r, const BosonState& v);
// Multiset formula for r <= n-1, determinant det(e_{1-i+j}) otherwise.
BosonState nc_h_apply(int r, const BosonState& v);
// Always through the determinant det(e_{1-i+j}).
BosonState nc_h_apply_det(int r, const BosonState& v);

// Symbol resolver for e_r(A) inside symbolic determinants: symbols 1..n-1, e_n = z.
SymPoly boson_e_symbol(int r, int n);

// s_lambda(A) with n-columns stripped into powers of z; lambda must lie in the (n-1) x k box
// after stripping, where k is the level of the state.
BosonState nc_schur_apply(const Partition& lambda, const BosonState& v);
// Raw determinant det(e_{lambda^t_i - i + j}(A)) for any lambda, without box checks.
BosonState nc_schur_apply_raw(const Partition& lambda, const BosonState& v);
// Dual determinant det(h_{lambda_i - i + j}(A)).
BosonState nc_schur_apply_dual(const Partition& lambda, const BosonState& v);

// lambda-hat (*) mu-hat = s_{P-hat(lambda)}(A) mu-hat on H_k[z].
BosonState fusion_product(const AffineWeight& lambda, const AffineWeight& mu);
// <nu, lambda (*) mu> at z = 1, after checking the z-grading (|lambda|+|mu|-|nu|)/n on P-hat sizes.
long long fusion_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu);

enum class MonodromyEntry { A, B, C, D };
// Coefficient of u^r in the entries of M(u) = L_n(u) ... L_1(u), L_i = [[1, u phi*_i], [phi_i, u]].
BosonState monodromy_apply(MonodromyEntry which, int r, const BosonState& v);
// T_r = A_r + z D_r.
BosonState transfer_apply(int r, const BosonState& v);

}  // namespace vqc
