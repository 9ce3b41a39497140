#include "mpa/msp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace mpa {

MultisetPartition::MultisetPartition(int k, int rows, std::vector<Multiset> blocks)
    : k_(k), rows_(rows), blocks_(std::move(blocks)) {
    if (k < 1 || rows < 1) throw std::invalid_argument("multiset partition needs k >= 1, rows >= 1");
    for (const auto& b : blocks_) {
        if (b.alphabet_size() != rows_ * k_)
            throw std::invalid_argument("block alphabet does not match rows*k");
        if (b.empty()) throw std::invalid_argument("empty block in multiset partition");
    }
    std::sort(blocks_.begin(), blocks_.end());
}

int MultisetPartition::row_size(int row) const {
    int s = 0;
    for (const auto& b : blocks_) s += b.size_in(row * k_, (row + 1) * k_);
    return s;
}

bool MultisetPartition::has_uniform_content() const {
    for (int row = 1; row < rows_; ++row)
        if (row_size(row) != row_size(0)) return false;
    return true;
}

int MultisetPartition::r() const {
    if (!has_uniform_content()) throw std::logic_error("partition content is not uniform across rows");
    return row_size(0);
}

MultisetPartition MultisetPartition::restrict(const std::vector<int>& row_indices) const {
    if (row_indices.empty()) throw std::invalid_argument("restrict: empty row set");
    std::vector<int> band_los;
    for (int row : row_indices) {
        if (row < 0 || row >= rows_) throw std::invalid_argument("restrict: row out of range");
        band_los.push_back(row * k_);
    }
    std::vector<Multiset> out;
    for (const auto& b : blocks_) {
        Multiset rb = b.restrict_bands(band_los, k_);
        if (!rb.empty()) out.push_back(std::move(rb));
    }
    return {k_, static_cast<int>(row_indices.size()), std::move(out)};
}

MultisetPartition MultisetPartition::bar_involution() const {
    if (rows_ != 2) throw std::logic_error("bar_involution needs a two-row partition");
    std::vector<Multiset> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.bar_swap());
    return {k_, 2, std::move(out)};
}

MultisetPartition MultisetPartition::barred_lift() const {
    if (rows_ != 2) throw std::logic_error("barred_lift needs a two-row partition");
    std::vector<Multiset> out;
    for (const auto& b : blocks_) {
        std::vector<int> e(3 * k_, 0);
        for (int i = 0; i < 2 * k_; ++i) e[k_ + i] = b.exponents()[i];
        out.emplace_back(std::move(e));
    }
    return {k_, 3, std::move(out)};
}

bool MultisetPartition::is_self_symmetric() const {
    if (rows_ != 2) throw std::logic_error("is_self_symmetric needs a two-row partition");
    for (const auto& b : blocks_)
        if (!(b.bar_swap() == b)) return false;
    return true;
}

Integer MultisetPartition::multiplicity_factorial() const {
    Integer m = 1;
    long run = 0;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        run = (i > 0 && blocks_[i] == blocks_[i - 1]) ? run + 1 : 1;
        m *= run;
    }
    return m;
}

namespace {

// All non-empty blocks over `rows` bands of width k with per-band sizes within
// the budgets, in last-letter order.  Shared by enumeration and counting so
// that block indices agree.
std::vector<Multiset> candidate_blocks(const std::vector<int>& row_budgets, int k) {
    int rows = static_cast<int>(row_budgets.size());
    std::vector<Multiset> out;
    std::vector<int> e(rows * k, 0);
    // Odometer over exponent vectors with per-band sums capped.
    auto band_ok = [&](int pos) {
        int band = pos / k;
        int s = 0;
        for (int i = band * k; i <= pos; ++i) s += e[i];
        return s <= row_budgets[band];
    };
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rows * k) {
            Multiset m(e);
            if (!m.empty()) out.push_back(std::move(m));
            return;
        }
        for (e[pos] = 0;; ++e[pos]) {
            if (!band_ok(pos)) break;
            rec(pos + 1);
        }
        e[pos] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

struct EnumeratorContext {
    std::vector<Multiset> blocks;
    std::vector<std::vector<int>> band_sizes;  // per block, per band
    int rows = 0;
    int k = 0;
};

EnumeratorContext make_context(const std::vector<int>& row_budgets, int k) {
    EnumeratorContext ctx;
    ctx.rows = static_cast<int>(row_budgets.size());
    ctx.k = k;
    ctx.blocks = candidate_blocks(row_budgets, k);
    ctx.band_sizes.reserve(ctx.blocks.size());
    for (const auto& b : ctx.blocks) {
        std::vector<int> s(ctx.rows);
        for (int row = 0; row < ctx.rows; ++row) s[row] = b.size_in(row * k, (row + 1) * k);
        ctx.band_sizes.push_back(std::move(s));
    }
    return ctx;
}

}  // namespace

long long count_partitions(const std::vector<int>& row_budgets, int k, std::optional<int> max_len,
                           long long saturate) {
    EnumeratorContext ctx = make_context(row_budgets, k);
    int total = std::accumulate(row_budgets.begin(), row_budgets.end(), 0);
    int len_cap = max_len ? std::min(*max_len, total) : total;
    if (total == 0) return 1;  // the empty partition
    if (len_cap <= 0) return 0;

    // State: (next usable block index, remaining budget per band, remaining length).
    int nblocks = static_cast<int>(ctx.blocks.size());
    std::vector<int> radix(ctx.rows);
    long long budget_space = 1;
    for (int row = 0; row < ctx.rows; ++row) {
        radix[row] = row_budgets[row] + 1;
        budget_space *= radix[row];
    }
    auto budget_code = [&](const std::vector<int>& rem) {
        long long c = 0;
        for (int row = 0; row < ctx.rows; ++row) c = c * radix[row] + rem[row];
        return c;
    };
    std::vector<long long> memo(static_cast<size_t>(nblocks + 1) * budget_space * (len_cap + 1), -1);
    auto sat_add = [&](long long a, long long b) {
        long long s = a + b;
        return s > saturate ? saturate + 1 : s;
    };
    std::function<long long(int, std::vector<int>&, int)> rec = [&](int idx, std::vector<int>& rem,
                                                                    int len_left) -> long long {
        bool done = std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; });
        if (done) return 1;
        if (idx == nblocks || len_left == 0) return 0;
        size_t key = (static_cast<size_t>(idx) * budget_space + budget_code(rem)) *
                         (len_cap + 1) +
                     len_left;
        if (memo[key] >= 0) return memo[key];
        long long total_count = rec(idx + 1, rem, len_left);
        const auto& bs = ctx.band_sizes[idx];
        bool fits = true;
        for (int row = 0; row < ctx.rows; ++row)
            if (bs[row] > rem[row]) fits = false;
        if (fits) {
            for (int row = 0; row < ctx.rows; ++row) rem[row] -= bs[row];
            total_count = sat_add(total_count, rec(idx, rem, len_left - 1));
            for (int row = 0; row < ctx.rows; ++row) rem[row] += bs[row];
        }
        return memo[key] = total_count;
    };
    std::vector<int> rem(row_budgets);
    return rec(0, rem, len_cap);
}

std::vector<MultisetPartition> enumerate_partitions(const std::vector<int>& row_budgets, int k,
                                                    std::optional<int> max_len, const Limits& limits) {
    long long n = count_partitions(row_budgets, k, max_len, limits.max_partitions);
    if (n > limits.max_partitions)
        throw ResourceLimitError("partition enumeration exceeds cap of " +
                                 std::to_string(limits.max_partitions));

    EnumeratorContext ctx = make_context(row_budgets, k);
    int total = std::accumulate(row_budgets.begin(), row_budgets.end(), 0);
    int len_cap = max_len ? std::min(*max_len, total) : total;

    std::vector<MultisetPartition> out;
    out.reserve(static_cast<size_t>(n));
    std::vector<Multiset> chosen;
    std::vector<int> rem(row_budgets);
    int nblocks = static_cast<int>(ctx.blocks.size());
    std::function<void(int)> rec = [&](int idx) {
        if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; })) {
            out.emplace_back(k, ctx.rows, chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) == len_cap) return;
        for (int i = idx; i < nblocks; ++i) {
            const auto& bs = ctx.band_sizes[i];
            bool fits = true;
            for (int row = 0; row < ctx.rows; ++row)
                if (bs[row] > rem[row]) fits = false;
            if (!fits) continue;
            for (int row = 0; row < ctx.rows; ++row) rem[row] -= bs[row];
            chosen.push_back(ctx.blocks[i]);
            rec(i);
            chosen.pop_back();
            for (int row = 0; row < ctx.rows; ++row) rem[row] += bs[row];
        }
    };
    rec(0);
    return out;
}

std::vector<MultisetPartition> enumerate_msp(int r, int k, std::optional<int> max_len,
                                             const Limits& limits) {
    if (r < 0 || k < 1) throw std::invalid_argument("enumerate_msp: need r >= 0, k >= 1");
    return enumerate_partitions({r, r}, k, max_len, limits);
}

namespace {

// Band views of a three-row block under construction.
std::vector<int> lift_pi_block(const Multiset& b, int k) {
    std::vector<int> e(3 * k, 0);
    for (int i = 0; i < 2 * k; ++i) e[i] = b.exponents()[i];
    return e;
}

std::vector<int> lift_gamma_block(const Multiset& b, int k) {
    std::vector<int> e(3 * k, 0);
    for (int i = 0; i < 2 * k; ++i) e[k + i] = b.exponents()[i];
    return e;
}

std::vector<int> mid_band(const std::vector<int>& e, int k) {
    return {e.begin() + k, e.begin() + 2 * k};
}

std::vector<int> merge_blocks(const std::vector<int>& p, const std::vector<int>& g, int k) {
    // p carries top+mid, g carries mid+bot with the same mid; take bot from g.
    std::vector<int> e(p);
    for (int i = 2 * k; i < 3 * k; ++i) e[i] += g[i];
    return e;
}

}  // namespace

std::vector<ThreeRowPartition> enumerate_gluings(const MultisetPartition& pi,
                                                 const MultisetPartition& gamma) {
    if (pi.rows() != 2 || gamma.rows() != 2) throw std::invalid_argument("gluings need two-row inputs");
    if (pi.k() != gamma.k()) throw std::invalid_argument("gluings: max value mismatch");
    int k = pi.k();

    // Split both sides by whether the middle row (pi's bars / gamma-bar's bars)
    // is populated.
    std::map<std::vector<int>, std::vector<std::vector<int>>> pi_mid_groups, gamma_mid_groups;
    std::vector<std::vector<int>> pi_top_only, gamma_bot_only;
    for (const auto& b : pi.blocks()) {
        auto e = lift_pi_block(b, k);
        auto mid = mid_band(e, k);
        if (std::any_of(mid.begin(), mid.end(), [](int v) { return v > 0; }))
            pi_mid_groups[mid].push_back(e);
        else
            pi_top_only.push_back(e);
    }
    for (const auto& b : gamma.blocks()) {
        auto e = lift_gamma_block(b, k);
        auto mid = mid_band(e, k);
        if (std::any_of(mid.begin(), mid.end(), [](int v) { return v > 0; }))
            gamma_mid_groups[mid].push_back(e);
        else
            gamma_bot_only.push_back(e);
    }

    // Zero-product test: the multisets of middle contents must agree.
    if (pi_mid_groups.size() != gamma_mid_groups.size()) return {};
    for (const auto& [mid, group] : pi_mid_groups) {
        auto it = gamma_mid_groups.find(mid);
        if (it == gamma_mid_groups.end() || it->second.size() != group.size()) return {};
    }

    std::set<ThreeRowPartition> results;
    std::vector<std::vector<int>> merged_mid;

    // Stage two: partial matchings of top-only pi blocks against bottom-only
    // gamma blocks, run under every mid-row bijection found in stage one.
    std::function<void(size_t, std::vector<bool>&, std::vector<std::vector<int>>&)> match_free =
        [&](size_t i, std::vector<bool>& used, std::vector<std::vector<int>>& acc) {
            if (i == pi_top_only.size()) {
                std::vector<Multiset> blocks;
                for (const auto& e : merged_mid) blocks.emplace_back(e);
                for (const auto& e : acc) blocks.emplace_back(e);
                for (size_t j = 0; j < gamma_bot_only.size(); ++j)
                    if (!used[j]) blocks.emplace_back(gamma_bot_only[j]);
                results.emplace(k, 3, std::move(blocks));
                return;
            }
            acc.push_back(pi_top_only[i]);  // left unmatched
            match_free(i + 1, used, acc);
            acc.pop_back();
            for (size_t j = 0; j < gamma_bot_only.size(); ++j) {
                if (used[j]) continue;
                used[j] = true;
                acc.push_back(merge_blocks(pi_top_only[i], gamma_bot_only[j], k));
                match_free(i + 1, used, acc);
                acc.pop_back();
                used[j] = false;
            }
        };

    // Stage one: bijections within each middle-content group.
    std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> groups;
    for (auto& [mid, pg] : pi_mid_groups) groups.emplace_back(pg, gamma_mid_groups[mid]);
    std::function<void(size_t)> match_mid = [&](size_t gi) {
        if (gi == groups.size()) {
            std::vector<bool> used(gamma_bot_only.size(), false);
            std::vector<std::vector<int>> acc;
            match_free(0, used, acc);
            return;
        }
        auto& [pg, gg] = groups[gi];
        std::vector<int> perm(gg.size());
        std::iota(perm.begin(), perm.end(), 0);
        size_t base = merged_mid.size();
        do {
            for (size_t t = 0; t < pg.size(); ++t)
                merged_mid.push_back(merge_blocks(pg[t], gg[perm[t]], k));
            match_mid(gi + 1);
            merged_mid.resize(base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    match_mid(0);

    return {results.begin(), results.end()};
}

Integer coeff_a(const ThreeRowPartition& nu) {
    if (nu.rows() != 3) throw std::invalid_argument("coeff_a needs a three-row partition");
    int k = nu.k();
    // Group blocks by their non-empty {top,bot} restriction.
    std::map<Multiset, std::vector<Multiset>> groups;
    for (const auto& b : nu.blocks()) {
        Multiset s = b.restrict_bands({0, 2 * k}, k);
        if (!s.empty()) groups[s].push_back(b);
    }
    Integer a = 1;
    for (const auto& [s, group] : groups) {
        Integer num = factorial(static_cast<long>(group.size()));
        long run = 0;
        for (size_t i = 0; i < group.size(); ++i) {
            run = (i > 0 && group[i] == group[i - 1]) ? run + 1 : 1;
            num /= run;  // exact: builds the multinomial l!/m!
        }
        a *= num;
    }
    return a;
}

PolyX coeff_b(const ThreeRowPartition& nu) {
    if (nu.rows() != 3) throw std::invalid_argument("coeff_b needs a three-row partition");
    int k = nu.k();
    long l_tau = 0;
    std::vector<Multiset> beta;
    for (const auto& b : nu.blocks()) {
        if (b.restrict_bands({0, 2 * k}, k).empty())
            beta.push_back(b);
        else
            ++l_tau;
    }
    PolyX b = PolyX::falling_factorial_from(l_tau, static_cast<long>(beta.size()));
    Integer m_beta = 1;
    long run = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        run = (i > 0 && beta[i] == beta[i - 1]) ? run + 1 : 1;
        m_beta *= run;
    }
    return b * rational_of(Integer(1), m_beta);
}

ColoredMultisetPartition::ColoredMultisetPartition(MultisetPartition base_in,
                                                   std::vector<int> colors_in)
    : base(std::move(base_in)), colors(std::move(colors_in)) {
    if (static_cast<int>(colors.size()) != base.length())
        throw std::invalid_argument("coloring length does not match block count");
    std::set<int> seen;
    for (size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 1) throw std::invalid_argument("colors are 1-based");
        if (!seen.insert(colors[i]).second) throw std::invalid_argument("repeated color");
        if (i > 0 && base.blocks()[i] == base.blocks()[i - 1] && colors[i] < colors[i - 1])
            throw std::invalid_argument("colors must increase along runs of equal blocks");
    }
}

std::vector<std::vector<int>> enumerate_colorings(const MultisetPartition& pi, int n) {
    int l = pi.length();
    std::vector<std::vector<int>> out;
    if (l > n) return out;
    // Runs of equal blocks take increasing color tuples.
    std::vector<int> run_starts{0};
    for (int i = 1; i < l; ++i)
        if (!(pi.blocks()[i] == pi.blocks()[i - 1])) run_starts.push_back(i);
    run_starts.push_back(l);

    std::vector<int> colors(l, 0);
    std::vector<bool> used(n + 1, false);
    std::function<void(size_t)> per_run = [&](size_t ri) {
        if (ri + 1 == run_starts.size()) {
            out.push_back(colors);
            return;
        }
        int lo = run_starts[ri], hi = run_starts[ri + 1];
        std::function<void(int, int)> pick = [&](int pos, int min_color) {
            if (pos == hi) {
                per_run(ri + 1);
                return;
            }
            for (int c = min_color; c <= n; ++c) {
                if (used[c]) continue;
                used[c] = true;
                colors[pos] = c;
                pick(pos + 1, c + 1);
                used[c] = false;
            }
        };
        pick(lo, 1);
    };
    per_run(0);
    return out;
}

}  // namespace mpa
