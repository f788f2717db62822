#pragma once

#include "vqc/combinatorics.hpp"
#include "vqc/laurent.hpp"
#include "vqc/state.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace vqc {

enum class TableKind { fusion, gw };

struct CoeffKey {
    Partition lambda;
    Partition mu;
    Partition nu;
    friend bool operator==(const CoeffKey&, const CoeffKey&) = default;
    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

struct CoeffValue {
    int d = 0;
    long long c = 0;
    friend bool operator==(const CoeffValue&, const CoeffValue&) = default;
};

// Structure constants lambda * mu = sum_nu x^d C nu, keyed by partitions.
// Fusion tables use P-partitions in the (n-1) x k box and x = z; GW tables use the k x n box and x = q.
// Only nonzero entries are stored.
struct CoeffTable {
    TableKind kind = TableKind::gw;
    int n = 0;
    int k = 0;
    std::map<CoeffKey, CoeffValue> entries;

    int big_n() const { return n + k; }
    // Partitions labelling the basis, in box order.
    std::vector<Partition> basis() const;
    CoeffValue lookup(const Partition& lambda, const Partition& mu, const Partition& nu) const;
    void set(const Partition& lambda, const Partition& mu, const Partition& nu, CoeffValue v);
};

// Tables from the lattice action.
CoeffTable gw_table_lattice(int k, int big_n);
CoeffTable fusion_table_lattice(int n, int k);
// Memoised per thread.
const CoeffTable& gw_table_cached(int k, int big_n);

// Reads a state's expansion into table entries for the pair (lambda, mu); throws if a coefficient is not a monomial.
void record_product(CoeffTable& table, const Partition& lambda, const Partition& mu, const FermionState& product);
void record_product(CoeffTable& table, const Partition& lambda, const Partition& mu, const BosonState& product);

// Entries present in one table but not the other, or with different values, formatted for display.
std::vector<std::string> table_differences(const CoeffTable& a, const CoeffTable& b);

// Outcome of an identity check over a finite family of instances.
struct IdentityReport {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // first few failures

    bool ok() const { return failures == 0; }
    void fail(std::string message);
    void merge(const IdentityReport& other);
};

// q^d C_{lambda mu}^{nu-vee, d} as a Laurent monomial.
LaurentInt gw_symmetric_coeff(const CoeffTable& table, const Partition& lambda, const Partition& mu,
                              const Partition& nu);

// Rot^a on a partition in the k x n box, any integer a.
Partition rotate_partition(const Partition& lambda, int a, int k, int big_n);
// n_a of the 01-word of lambda, extended by n_{a+N} = n_a + k.
int word_count(const Partition& lambda, int a, int k, int big_n);

enum class GwIdentity { s3, levelrank, rotation, curious };
IdentityReport gw_symmetry_check(const CoeffTable& table, GwIdentity which);

enum class FusionIdentity { s3, rotation, conjugation };
IdentityReport fusion_symmetry_check(const CoeffTable& table, FusionIdentity which);

struct RecursionTerm {
    int r = 0;
    Partition rho;
    Partition mu;  // psi*_j mu or psi_j mu
    Partition nu;  // psi*_{j-r} nu or psi_{j+r} nu
    int d = 0;
    int sign = 1;
    long long c = 0;
};

struct RecursionResult {
    long long value = 0;
    std::vector<RecursionTerm> terms;  // terms whose target word is nonzero
};

// C_{lambda mu}^{nu,d}(k,N) from level k+1 via vertical strips; requires w(mu)_j = 0.
RecursionResult gw_recursion_up(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int j,
                                int k, int big_n);
// C_{lambda mu}^{nu,d}(k,N) from level k-1 via horizontal strips; requires w(mu)_j = 1.
RecursionResult gw_recursion_down(const Partition& lambda, const Partition& mu, const Partition& nu, int d, int j,
                                  int k, int big_n);

// Both recursions against the direct table for every (lambda, mu, nu, d, j) at (k, N) where they apply.
IdentityReport gw_recursion_check(int k, int big_n);

// lambda * psi*_i(mu) = sum_r sum_{lambda/nu = (r)} psi*_{i+r}(nu *' mu), with *' read from the level-k table.
FermionState hierarchy_product(const CoeffTable& level_k, const Partition& lambda, const Partition& mu, int i);
// Tables for k = 0..N built upwards from a point using only hierarchy_product.
std::vector<CoeffTable> hierarchy_build(int big_n);

// hierarchy_build(N) against the direct lattice tables for k = 0..N.
IdentityReport hierarchy_check(int big_n);

// Operator identities S_lambda psi*_i = psi*_i S'_lambda + ... and the psi_i version, on all of F[q].
// They hold for shapes fitting some k x (N-k) box; larger hooks reach the scalars e_N and h_N.
IdentityReport schurcom_check(int big_n, const std::vector<Partition>& shapes, bool annihilation);

// Level-k weight of a partition with n rows at most, after deleting its columns of height n.
AffineWeight hat(const Partition& lambda, int n, int level);

struct FusionRecursionReport {
    long long lhs = 0;
    long long rhs = 0;
    std::vector<std::vector<Partition>> chains;  // contributing sequences nu = mu^(0), ..., mu^(l) = mu
    bool ok() const { return lhs == rhs; }
};
// Level k+1 chain sum against sum_lambda K_{lambda^t alpha} N_{lambda mu}^{(k) nu}; j holds one index per part of alpha.
FusionRecursionReport fusion_recursion_check(int n, int k, const std::vector<int>& alpha, const std::vector<int>& j,
                                             const Partition& mu, const Partition& nu);

// Products of h_{alpha_i}(A) and e_{alpha_i}(A) against Kostka expansions on H_k, and the
// chain-sum identities for fusion coefficients, over all mu, nu.
IdentityReport cauchy_kostka_check(int n, int k, const std::vector<int>& alpha);

// T(u)_k Q(-u)_k = 1 + z (-1)^k u^{n+k} h_k(A)_k with Q(u)_k = sum_{r<=k} h_r(A) u^r, compared coefficient by
// coefficient in u on every basis vector of H_k.
IdentityReport tq_relation_check(int n, int k);
// phi_i T_r phi*_i = T_r on H_k at z = 1 for every i and r.
IdentityReport phi_transfer_check(int n, int k);

}  // namespace vqc
