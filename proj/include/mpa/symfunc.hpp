#pragma once

#include <map>
#include <vector>

#include "mpa/limits.hpp"
#include "mpa/qseries.hpp"
#include "mpa/rational.hpp"

namespace mpa {

/// Integer partitions: weakly decreasing positive parts.
using IntPartition = std::vector<int>;

bool is_partition(const IntPartition& p);
int partition_size(const IntPartition& p);
IntPartition conjugate(const IntPartition& p);

/// z_lambda = prod_i i^{m_i} m_i!.
Integer z_of(const IntPartition& p);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<IntPartition> partitions_of(int n);

/// Irreducible S_n character chi^lambda evaluated on cycle type gamma,
/// computed by the Murnaghan-Nakayama recursion (memoized).  Throws when
/// |lambda| != |gamma|.
long long character(const IntPartition& lambda, const IntPartition& gamma);

/// The full table for a fixed n; satisfies both orthogonality relations.
class CharacterTable {
public:
    explicit CharacterTable(int n);
    int n() const { return n_; }
    const std::vector<IntPartition>& index() const { return parts_; }
    long long value(const IntPartition& lambda, const IntPartition& gamma) const;
    long long value(size_t lambda_idx, size_t gamma_idx) const { return table_[lambda_idx][gamma_idx]; }

private:
    int n_;
    std::vector<IntPartition> parts_;
    std::vector<std::vector<long long>> table_;
};

/// g_{lambda,mu,nu} via the character sum  sum_gamma chi chi chi / z_gamma.
long long kronecker_coefficient(const IntPartition& lambda, const IntPartition& mu,
                                const IntPartition& nu);

/// Expansion of s_kappa * s_tau in the Schur basis (Littlewood-Richardson
/// rule; results memoized).
std::map<IntPartition, long long> schur_product(const IntPartition& kappa, const IntPartition& tau);

/// Expansion of s_{tau(1)} ... s_{tau(m)}; empty factors are skipped.
std::map<IntPartition, long long> schur_expand_product(const std::vector<IntPartition>& taus);

/// Multi-factor Littlewood-Richardson coefficient c^{target}_{tau(1)...tau(m)}.
long long lr_coefficient(const std::vector<IntPartition>& taus, const IntPartition& target);

/// s_lambda[1/(1-q)^k] truncated at q^max_deg, via the character-sum
/// specialization; the q^r coefficient is dim W^lambda_{A_{r,k}(n)}.
/// Coefficients are always non-negative integers.
QSeries plethysm_series(const IntPartition& lambda, int k, int max_deg);

/// Integer coefficient extraction from the series above.
Integer irrep_dimension(const IntPartition& lambda, int k, int r);

/// Smallest r with a non-zero q^r coefficient in plethysm_series(lambda,k).
long min_degree_threshold(const IntPartition& lambda, int k);

/// dim A_{r,k}(n): coefficient of z^n q^r t^r in the triple product
/// prod_{i,j} (1 - z q^i t^j)^{-binom(k+i-1,i) binom(k+j-1,j)}, truncated to
/// 0 <= i,j <= r.
Integer algebra_dim(long n, int r, int k, const Limits& limits = {});

/// Multiplicity of W^mu_{A_{r-d,k-1}(n)} in W^lambda_{A_{r,k}(n)}: the
/// Littlewood-Richardson sum over exponent sequences alpha with
/// sum alpha_i = n and sum (i-1) alpha_i = d.
long long branching_multiplicity_lr(const IntPartition& lambda, const IntPartition& mu, int d);

/// The same multiplicity as the q^d coefficient of
/// sum_nu g_{lambda,mu,nu} s_nu[1/(1-q)].
long long branching_multiplicity_char(const IntPartition& lambda, const IntPartition& mu, int d);

/// Computes both routes and insists they agree; a mismatch is an internal
/// error, not a data condition.
long long branching_multiplicity(const IntPartition& lambda, const IntPartition& mu, int d, int k = 1);

/// Multiplicity of W^nu (x) W^gamma in the restriction of W^lambda: the
/// Kronecker coefficient.
long long restriction_multiplicity(const IntPartition& lambda, const IntPartition& nu,
                                   const IntPartition& gamma);

}  // namespace mpa
