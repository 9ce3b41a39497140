#pragma once

#include <optional>
#include <vector>

#include "mpa/limits.hpp"
#include "mpa/multiset.hpp"
#include "mpa/poly.hpp"
#include "mpa/rational.hpp"

namespace mpa {

/// A multiset partition over a banded alphabet, canonically sorted in
/// last-letter order.  rows() == 2 gives the elements of Pi_{r,k} (letters
/// 1..k and 1'..k'); rows() == 3 gives the three-row gluing objects of
/// Gamma_{r,k} (an extra band of double-barred letters).  Restrictions of
/// single rows are representable with rows() == 1.
class MultisetPartition {
public:
    /// Canonicalizes (sorts blocks) on construction; rejects empty blocks and
    /// blocks whose alphabet is not rows*k.
    MultisetPartition(int k, int rows, std::vector<Multiset> blocks);

    static MultisetPartition empty(int k, int rows) { return {k, rows, {}}; }

    int k() const { return k_; }
    int rows() const { return rows_; }
    int length() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Multiset>& blocks() const { return blocks_; }

    /// Total number of entries lying in the given row band.
    int row_size(int row) const;

    /// True when every row carries the same number of entries (the content
    /// condition for Pi_{r,k} and Gamma_{r,k}); r() is that common count.
    bool has_uniform_content() const;
    int r() const;

    /// Restriction to a subset of rows (given as row indices in display
    /// order), dropping blocks that restrict to the empty multiset and
    /// re-canonicalizing.  Row labels are re-based, so restricting a
    /// three-row partition to {mid,bot} directly yields the two-row
    /// partition "with one bar removed".
    MultisetPartition restrict(const std::vector<int>& row_indices) const;

    /// Two-row only: swap bars on every block and re-canonicalize.
    MultisetPartition bar_involution() const;

    /// Two-row only: lift pi to the three-row alphabet by adding a bar to
    /// every entry (top -> mid, bottom -> double bar).
    MultisetPartition barred_lift() const;

    /// Two-row only: every block fixed by the bar swap.
    bool is_self_symmetric() const;

    /// m(pi)! = product of factorials of block multiplicities.
    Integer multiplicity_factorial() const;

    bool operator==(const MultisetPartition& o) const = default;
    auto operator<=>(const MultisetPartition& o) const = default;

private:
    int k_ = 1;
    int rows_ = 2;
    std::vector<Multiset> blocks_;
};

/// Gluing objects live in the same representation with three rows.
using ThreeRowPartition = MultisetPartition;

/// All canonical multiset partitions whose row content matches row_budgets
/// (entries per row), optionally filtered to at most max_len blocks.
/// Deterministic order.  Refuses to materialize more than limits.max_partitions.
std::vector<MultisetPartition> enumerate_partitions(const std::vector<int>& row_budgets, int k,
                                                    std::optional<int> max_len = std::nullopt,
                                                    const Limits& limits = {});

/// Count of the above without materializing, saturated at `saturate`.
long long count_partitions(const std::vector<int>& row_budgets, int k,
                           std::optional<int> max_len = std::nullopt,
                           long long saturate = 1'000'000'000'000LL);

/// Pi_{r,k} (max_len unset) or Pi_{r,k,n} (max_len = n).
std::vector<MultisetPartition> enumerate_msp(int r, int k, std::optional<int> max_len = std::nullopt,
                                             const Limits& limits = {});

/// The distinct nu in Gamma_{r,k} with nu|{top,mid} = pi and nu|{mid,bot} =
/// gamma-bar.  Empty exactly when pi|bot != gamma|top.  Construction: blocks
/// of pi with a non-empty barred part are matched bijectively (preserving the
/// barred content) to blocks of gamma-bar with the same middle row; top-only
/// blocks of pi and bottom-only blocks of gamma-bar are joined by an
/// arbitrary partial matching; results are canonicalized and deduplicated.
std::vector<ThreeRowPartition> enumerate_gluings(const MultisetPartition& pi,
                                                 const MultisetPartition& gamma);

/// a_nu: product over the distinct non-empty restrictions S of nu to
/// {top,bot} of l(nu_S)!/m(nu_S)!.  Always a positive integer.
Integer coeff_a(const ThreeRowPartition& nu);

/// b_nu(x): falling factorial (x - l(nu|{top,bot}))_{l(beta)} / m(beta)!,
/// where beta collects the middle-row-only blocks.  Constant 1 when beta is
/// empty.
PolyX coeff_b(const ThreeRowPartition& nu);

/// A coloring of pi: distinct labels from [n], one per block, increasing
/// along runs of equal blocks so that each abstract coloring is represented
/// exactly once.
struct ColoredMultisetPartition {
    MultisetPartition base;
    std::vector<int> colors;  // 1-based, aligned with base.blocks()

    /// Validates distinctness and the increasing-on-equal-runs canonicity.
    ColoredMultisetPartition(MultisetPartition base_in, std::vector<int> colors_in);
};

/// All canonical colorings of pi with colors from [n]; empty when
/// length(pi) > n.  The count is (n)_{l(pi)} / m(pi)!.
std::vector<std::vector<int>> enumerate_colorings(const MultisetPartition& pi, int n);

}  // namespace mpa
