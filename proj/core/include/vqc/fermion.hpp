#pragma once

#include "vqc/boson.hpp"
#include "vqc/combinatorics.hpp"
#include "vqc/ncpoly.hpp"
#include "vqc/state.hpp"

#include <vector>

namespace vqc {

// Clifford generators on F[q]: set or clear bit i with sign (-1)^{n_{i-1}(w)}, 1 <= i <= N.
FermionState apply_psi_star(int i, const FermionState& v);
FermionState apply_psi(int i, const FermionState& v);

// Quasi-periodic extension to any integer index:
//   psi*_{j+N} = -q e^{i pi K} psi*_j and psi_{j-N} = -q e^{i pi K} psi_j,
// with e^{i pi K} standing to the left, so K is the particle number of the result.
FermionState apply_psi_star_ext(int j, const FermionState& v);
FermionState apply_psi_ext(int j, const FermionState& v);

// Affine nil-Temperley-Lieb generators: u_i hops a particle i -> i+1, u_N hops N -> 1 with weight q.
FermionState apply_u(int i, const FermionState& v);
// Literal composition psi*_{i+1} psi_i and -q e^{i pi n_N} psi*_1 psi_N.
FermionState apply_u_clifford(int i, const FermionState& v);
FermionState apply_u_word(const GenWord& w, const FermionState& v);

// Monomials of e_r(U) (clockwise, u_i left of u_{i+1}) and h_r(U) (anticlockwise), 1 <= r <= N-1.
std::vector<GenWord> nc_e_u_words(int r, int big_n, GapChoice gap = GapChoice::first);
std::vector<GenWord> nc_h_u_words(int r, int big_n, GapChoice gap = GapChoice::first);

// e_N(U) = -q e^{i pi n_N}; h_N(U) = q on F_N and 0 elsewhere; both vanish beyond N.
FermionState nc_e_u_apply(int r, const FermionState& v);
FermionState nc_h_u_apply(int r, const FermionState& v);

enum class SchurForm { elementary, complete, automatic };
// s_lambda(U) on F_k[q]; every basis word of the state must have lambda in its k x n box.
FermionState nc_schur_u_apply(const Partition& lambda, const FermionState& v, SchurForm form = SchurForm::automatic);
// Determinant in the chosen form without box checks.
FermionState nc_schur_u_apply_raw(const Partition& lambda, const FermionState& v, SchurForm form = SchurForm::elementary);

// lambda * mu = s_lambda(U) mu in F_k[q], N = n + k.
FermionState quantum_product(const Partition& lambda, const Partition& mu, int k, int big_n);
// Coefficient C with q^d C = <nu, lambda * mu>; zero unless |lambda|+|mu|-|nu| = dN.
long long gw_invariant(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k, int big_n);
// Same matrix element using the raw determinant, for lambda possibly outside the box.
long long gw_invariant_raw(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int k, int big_n);

enum class Symmetry { P, T, C, Rot };
// P reverses words, T inverts q, C swaps letters, Rot rotates words left by one.
FermionState apply_symmetry(Symmetry s, const FermionState& v);

}  // namespace vqc
