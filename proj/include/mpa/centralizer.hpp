#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mpa/limits.hpp"
#include "mpa/msp.hpp"
#include "mpa/rational.hpp"
#include "mpa/symfunc.hpp"

namespace mpa {

/// Permutation of {1..n}, stored 0-based.  compose(a, b) applies a first.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);  // 1-based points
    int n() const { return static_cast<int>(img.size()); }
    int apply(int i) const { return img[i - 1] + 1; }  // 1-based
    Permutation inverse() const;
};

Permutation compose(const Permutation& first, const Permutation& then);
std::vector<Permutation> all_permutations(int n);
IntPartition cycle_type(const Permutation& sigma);

/// Canonical index of a degree-r monomial in the variables x_{ij}: pairs
/// (i, j) with j weakly increasing and i weakly increasing within equal j.
struct MonomialIndex {
    std::vector<std::pair<int, int>> ij;  // 1-based (row i, column j)

    void canonicalize();
    bool operator==(const MonomialIndex&) const = default;
    auto operator<=>(const MonomialIndex&) const = default;
};

/// sigma . x_m: applies sigma^{-1} to every row index, then re-sorts.
MonomialIndex sigma_action(const Permutation& sigma, const MonomialIndex& m);

/// The ordered monomial basis of the degree-r polynomials in n*k variables;
/// size binom(nk + r - 1, r).
class MonomialBasis {
public:
    MonomialBasis(int n, int k, int r, const Limits& limits = {});

    int n() const { return n_; }
    int k() const { return k_; }
    int r() const { return r_; }
    int dim() const { return static_cast<int>(elements_.size()); }
    const std::vector<MonomialIndex>& elements() const { return elements_; }
    int index_of(const MonomialIndex& m) const;

private:
    int n_, k_, r_;
    std::vector<MonomialIndex> elements_;
    std::map<MonomialIndex, int> lookup_;
};

/// Sparse square matrix over the rationals acting on a monomial basis.
/// Rows are indexed by the top (unbarred) monomial of a diagram, columns by
/// the bottom one, so that plain matrix multiplication realizes the diagram
/// product (pi stacked over gamma).
class EndoMatrix {
public:
    explicit EndoMatrix(int dim) : rows_(dim) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    long long nnz() const;
    const std::map<int, Rational>& row(int i) const { return rows_[i]; }
    Rational at(int row, int col) const;
    void add(int row, int col, const Rational& v);

    EndoMatrix multiply(const EndoMatrix& o, const Limits& limits = {}) const;
    EndoMatrix operator+(const EndoMatrix& o) const;
    EndoMatrix operator*(const Rational& s) const;
    EndoMatrix operator-(const EndoMatrix& o) const;
    bool operator==(const EndoMatrix& o) const = default;

private:
    std::vector<std::map<int, Rational>> rows_;
};

/// O_pi: one matrix unit per coloring of pi; the zero matrix when
/// length(pi) > n.
EndoMatrix orbit_matrix(const MonomialBasis& basis, const MultisetPartition& pi);

/// Matrix of sigma acting on the basis.
EndoMatrix permutation_matrix(const MonomialBasis& basis, const Permutation& sigma);

/// True iff A commutes with every adjacent transposition (hence with S_n).
bool commutant_check(const MonomialBasis& basis, const EndoMatrix& a);

/// Expands an element of the centralizer in the orbit basis by reading one
/// representative matrix-unit entry per candidate partition.
std::map<MultisetPartition, Rational> orbit_expand(const MonomialBasis& basis, const EndoMatrix& m,
                                                   const std::vector<MultisetPartition>& candidates);

struct VerifyMismatch {
    MultisetPartition tau;
    Rational structural;  // coefficient from evaluate_at(multiply(X_pi, X_gamma), n)
    Rational oracle;      // coefficient of O_tau in O_pi O_gamma
};

struct VerifyResult {
    bool match = false;
    std::vector<VerifyMismatch> mismatches;
};

/// Compares the structural product of X_pi X_gamma at x = n against the
/// matrix product O_pi O_gamma expanded in the orbit basis.  Requires
/// n >= 2r (the isomorphism regime).
VerifyResult verify_isomorphism(const MultisetPartition& pi, const MultisetPartition& gamma, int n,
                                const Limits& limits = {});

struct PairVerifyReport {
    MultisetPartition pi;
    MultisetPartition gamma;
    bool match = false;
    std::vector<VerifyMismatch> mismatches;
};

/// verify_isomorphism over every pair in Pi_{r,k} x Pi_{r,k}, with orbit
/// matrices built once and pairs fanned out across a worker pool.  Results
/// are ordered by pair index regardless of thread count.
std::vector<PairVerifyReport> verify_all_pairs(int r, int k, int n, int threads = 1,
                                               const Limits& limits = {});

/// The isotypic projector for lambda (the character-weighted group average,
/// normalized to be idempotent).
EndoMatrix reynolds_projector(const MonomialBasis& basis, const IntPartition& lambda);

/// Rank of the projector over the rationals via fraction-free (Bareiss)
/// elimination on the integer matrix sum_sigma chi^lambda(sigma) P_sigma.
long reynolds_rank(const IntPartition& lambda, int n, int k, int r, const Limits& limits = {});

}  // namespace mpa
