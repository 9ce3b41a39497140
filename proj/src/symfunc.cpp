#include "mpa/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace mpa {

bool is_partition(const IntPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const IntPartition& p) {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

IntPartition conjugate(const IntPartition& p) {
    IntPartition c;
    for (int col = 1; !p.empty() && col <= p[0]; ++col) {
        int h = 0;
        for (int v : p)
            if (v >= col) ++h;
        c.push_back(h);
    }
    return c;
}

Integer z_of(const IntPartition& p) {
    Integer z = 1;
    int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        run = (i && p[i] == p[i - 1]) ? run + 1 : 1;
        z *= Integer(p[i]) * run;
    }
    return z;
}

std::vector<IntPartition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

void check_partition(const IntPartition& p, const char* who) {
    if (!is_partition(p)) throw std::invalid_argument(std::string(who) + ": not a partition");
}

// Beta-set form of lambda with l entries: beta_i = lambda_i + (l - 1 - i).
std::vector<int> beta_set(const IntPartition& lambda) {
    int l = static_cast<int>(lambda.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
    return beta;
}

IntPartition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    IntPartition p;
    int l = static_cast<int>(beta.size());
    for (int i = 0; i < l; ++i) {
        int part = beta[i] - (l - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

long long character_rec(const IntPartition& lambda, const IntPartition& gamma,
                        std::map<std::pair<IntPartition, IntPartition>, long long>& memo) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, gamma);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int m = gamma.front();
    IntPartition rest(gamma.begin() + 1, gamma.end());
    std::vector<int> beta = beta_set(lambda);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - m;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        long long sign = (height % 2) ? -1 : 1;
        total += sign * character_rec(from_beta(std::move(nb)), rest, memo);
    }
    return memo[key] = total;
}

}  // namespace

long long character(const IntPartition& lambda, const IntPartition& gamma) {
    check_partition(lambda, "character");
    check_partition(gamma, "character");
    if (partition_size(lambda) != partition_size(gamma))
        throw std::invalid_argument("character: size mismatch");
    static std::mutex memo_mutex;
    static std::map<std::pair<IntPartition, IntPartition>, long long> memo;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return character_rec(lambda, gamma, memo);
}

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
    table_.resize(parts_.size());
    for (size_t l = 0; l < parts_.size(); ++l) {
        table_[l].resize(parts_.size());
        for (size_t g = 0; g < parts_.size(); ++g) table_[l][g] = character(parts_[l], parts_[g]);
    }
}

long long CharacterTable::value(const IntPartition& lambda, const IntPartition& gamma) const {
    auto li = std::find(parts_.begin(), parts_.end(), lambda);
    auto gi = std::find(parts_.begin(), parts_.end(), gamma);
    if (li == parts_.end() || gi == parts_.end())
        throw std::invalid_argument("CharacterTable: partition of wrong size");
    return table_[li - parts_.begin()][gi - parts_.begin()];
}

long long kronecker_coefficient(const IntPartition& lambda, const IntPartition& mu,
                                const IntPartition& nu) {
    int n = partition_size(lambda);
    if (partition_size(mu) != n || partition_size(nu) != n)
        throw std::invalid_argument("kronecker_coefficient: size mismatch");
    Rational sum(0);
    for (const auto& gamma : partitions_of(n)) {
        long long c = character(lambda, gamma) * character(mu, gamma) * character(nu, gamma);
        sum += rational_of(Integer(static_cast<long>(c)), z_of(gamma));
    }
    Integer g = to_integer(sum);
    return static_cast<long long>(g.get_si());
}

namespace {

// Count of Littlewood-Richardson fillings of nu/kappa with content tau:
// semistandard, and the reverse reading word is a lattice word.  Cells are
// visited right-to-left within rows, top row first, so the column-strict and
// lattice constraints can be checked incrementally.
long long lr_fillings(const IntPartition& nu, const IntPartition& kappa, const IntPartition& tau) {
    int rows = static_cast<int>(nu.size());
    std::vector<int> inner(rows, 0);
    for (size_t i = 0; i < kappa.size(); ++i) inner[i] = kappa[i];
    for (int i = 0; i < rows; ++i)
        if (inner[i] > nu[i]) return 0;

    int nvals = static_cast<int>(tau.size());
    std::vector<int> remaining(tau.begin(), tau.end());
    std::vector<int> prefix(nvals + 2, 0);
    std::vector<std::vector<int>> grid(rows);
    for (int i = 0; i < rows; ++i) grid[i].assign(nu[i], 0);

    long long count = 0;
    std::function<void(int, int)> rec = [&](int row, int col) {
        while (row < rows && col < inner[row]) {
            ++row;
            col = row < rows ? nu[row] - 1 : 0;
        }
        if (row == rows) {
            ++count;
            return;
        }
        for (int v = 1; v <= nvals; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice: after placing v, #v in the word so far must not exceed #(v-1)
            if (v > 1 && prefix[v] + 1 > prefix[v - 1]) continue;
            // row weakly increasing: right neighbour already placed
            if (col + 1 < nu[row] && grid[row][col + 1] < v) continue;
            // column strictly increasing; cells above inside kappa impose nothing
            if (row > 0 && col >= inner[row - 1] && grid[row - 1][col] >= v) continue;
            grid[row][col] = v;
            --remaining[v - 1];
            ++prefix[v];
            if (col == inner[row])
                rec(row + 1, row + 1 < rows ? nu[row + 1] - 1 : 0);
            else
                rec(row, col - 1);
            ++remaining[v - 1];
            --prefix[v];
            grid[row][col] = 0;
        }
    };
    if (rows == 0) return 0;
    rec(0, nu[0] - 1);
    return count;
}

}  // namespace

std::map<IntPartition, long long> schur_product(const IntPartition& kappa, const IntPartition& tau) {
    check_partition(kappa, "schur_product");
    check_partition(tau, "schur_product");
    static std::mutex memo_mutex;
    static std::map<std::pair<IntPartition, IntPartition>, std::map<IntPartition, long long>> memo;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto key = std::make_pair(kappa, tau);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::map<IntPartition, long long> out;
    if (tau.empty()) {
        out[kappa] = 1;
        return memo[key] = out;
    }
    int total = partition_size(kappa) + partition_size(tau);
    for (const auto& nu : partitions_of(total)) {
        if (nu.size() > kappa.size() + tau.size()) continue;
        if (!nu.empty() && !kappa.empty() && nu[0] > kappa[0] + tau[0]) continue;
        if (!nu.empty() && kappa.empty() && nu[0] > tau[0]) continue;
        // containment kappa subset nu
        bool contains = kappa.size() <= nu.size();
        for (size_t i = 0; contains && i < kappa.size(); ++i)
            if (kappa[i] > nu[i]) contains = false;
        if (!contains) continue;
        long long c = lr_fillings(nu, kappa, tau);
        if (c) out[nu] = c;
    }
    return memo[key] = out;
}

std::map<IntPartition, long long> schur_expand_product(const std::vector<IntPartition>& taus) {
    std::map<IntPartition, long long> acc;
    acc[{}] = 1;
    for (const auto& tau : taus) {
        if (tau.empty()) continue;
        std::map<IntPartition, long long> next;
        for (const auto& [kappa, c] : acc)
            for (const auto& [nu, lr] : schur_product(kappa, tau)) next[nu] += c * lr;
        acc = std::move(next);
    }
    return acc;
}

long long lr_coefficient(const std::vector<IntPartition>& taus, const IntPartition& target) {
    check_partition(target, "lr_coefficient");
    int total = 0;
    for (const auto& tau : taus) {
        check_partition(tau, "lr_coefficient");
        total += partition_size(tau);
    }
    if (total != partition_size(target))
        throw std::invalid_argument("lr_coefficient: degree mismatch");
    auto e = schur_expand_product(taus);
    auto it = e.find(target);
    return it == e.end() ? 0 : it->second;
}

QSeries plethysm_series(const IntPartition& lambda, int k, int max_deg) {
    check_partition(lambda, "plethysm_series");
    if (k < 1) throw std::invalid_argument("plethysm_series: k >= 1");
    int n = partition_size(lambda);
    QSeries total({'q'}, {max_deg});
    for (const auto& gamma : partitions_of(n)) {
        long long chi = character(lambda, gamma);
        if (!chi) continue;
        QSeries prod = QSeries::one({'q'}, {max_deg});
        for (int part : gamma)
            prod = prod * QSeries::inv_power_one_minus({'q'}, {max_deg}, {part}, Integer(k));
        total = total + prod * rational_of(Integer(static_cast<long>(chi)), z_of(gamma));
    }
    for (const auto& [e, c] : total.terms())
        if (!is_integral(c) || c < 0)
            throw std::logic_error("plethysm_series: non-integer or negative multiplicity");
    return total;
}

Integer irrep_dimension(const IntPartition& lambda, int k, int r) {
    return to_integer(plethysm_series(lambda, k, r).coefficient({r}));
}

long min_degree_threshold(const IntPartition& lambda, int k) {
    check_partition(lambda, "min_degree_threshold");
    if (k < 1) throw std::invalid_argument("min_degree_threshold: k >= 1");
    // t_d = sum_{m=0}^{d-1} binom(k+m-1, m); variables x_{t_{j-1}+1}..x_{t_j}
    // carry q^{j-1}, and the leading monomial of s_lambda decides.
    long threshold = 0;
    long t_prev = 0;
    long consumed = 0;
    long len = static_cast<long>(lambda.size());
    for (long j = 1; consumed < len; ++j) {
        Integer width = binomial(k + j - 2, j - 1);
        long t_j = t_prev + static_cast<long>(width.get_si());
        for (long i = t_prev + 1; i <= t_j && consumed < len; ++i, ++consumed)
            threshold += (j - 1) * lambda[consumed];
        t_prev = t_j;
    }
    return threshold;
}

Integer algebra_dim(long n, int r, int k, const Limits& limits) {
    if (n < 0 || r < 0 || k < 1) throw std::invalid_argument("algebra_dim: bad arguments");
    long long volume = static_cast<long long>(n + 1) * (r + 1) * (r + 1);
    if (volume > limits.max_partitions)
        throw ResourceLimitError("algebra_dim: truncation volume " + std::to_string(volume) +
                                 " exceeds cap");
    std::vector<char> vars{'z', 'q', 't'};
    std::vector<int> trunc{static_cast<int>(n), r, r};
    QSeries prod = QSeries::one(vars, trunc);
    for (int i = 0; i <= r; ++i) {
        for (int j = 0; j <= r; ++j) {
            Integer m = binomial(k + i - 1, i) * binomial(k + j - 1, j);
            prod = prod * QSeries::inv_power_one_minus(vars, trunc, {1, i, j}, m);
        }
    }
    return to_integer(prod.coefficient({static_cast<int>(n), r, r}));
}

long long branching_multiplicity_lr(const IntPartition& lambda, const IntPartition& mu, int d) {
    check_partition(lambda, "branching");
    check_partition(mu, "branching");
    int n = partition_size(lambda);
    if (partition_size(mu) != n) throw std::invalid_argument("branching: size mismatch");
    if (d < 0) throw std::invalid_argument("branching: d >= 0");

    long long total = 0;
    // alpha = (alpha_1..alpha_{d+1}) with sum alpha_i = n, sum (i-1) alpha_i = d.
    std::vector<int> alpha(d + 1, 0);
    std::function<void(int, int, int)> rec = [&](int i, int weight_left, int used) {
        if (i == d + 1) {
            if (weight_left != 0) return;
            alpha[0] = n - used;
            if (alpha[0] < 0) return;
            // tuples tau(i) |- alpha_i
            std::vector<std::vector<IntPartition>> choices;
            for (int t = 0; t <= d; ++t) choices.push_back(partitions_of(alpha[t]));
            std::vector<IntPartition> taus(d + 1);
            std::function<void(int)> pick = [&](int t) {
                if (t == d + 1) {
                    auto e = schur_expand_product(taus);
                    auto im = e.find(mu);
                    auto il = e.find(lambda);
                    if (im != e.end() && il != e.end()) total += im->second * il->second;
                    return;
                }
                for (const auto& p : choices[t]) {
                    taus[t] = p;
                    pick(t + 1);
                }
            };
            pick(0);
            return;
        }
        // alpha_{i+1} contributes weight i per unit (1-based index i+1).
        for (int a = 0; a * i <= weight_left && used + a <= n; ++a) {
            alpha[i] = a;
            rec(i + 1, weight_left - a * i, used + a);
        }
        alpha[i] = 0;
    };
    rec(1, d, 0);
    return total;
}

long long branching_multiplicity_char(const IntPartition& lambda, const IntPartition& mu, int d) {
    int n = partition_size(lambda);
    if (partition_size(mu) != n) throw std::invalid_argument("branching: size mismatch");
    Rational total(0);
    for (const auto& nu : partitions_of(n)) {
        long long g = kronecker_coefficient(lambda, mu, nu);
        if (!g) continue;
        total += plethysm_series(nu, 1, d).coefficient({d}) * Rational(static_cast<long>(g));
    }
    Integer v = to_integer(total);
    return static_cast<long long>(v.get_si());
}

long long branching_multiplicity(const IntPartition& lambda, const IntPartition& mu, int d, int k) {
    if (k < 1) throw std::invalid_argument("branching: k >= 1");
    long long lr = branching_multiplicity_lr(lambda, mu, d);
    long long ch = branching_multiplicity_char(lambda, mu, d);
    if (lr != ch)
        throw std::logic_error("branching multiplicity routes disagree: lr=" + std::to_string(lr) +
                               " char=" + std::to_string(ch));
    return lr;
}

long long restriction_multiplicity(const IntPartition& lambda, const IntPartition& nu,
                                   const IntPartition& gamma) {
    return kronecker_coefficient(lambda, nu, gamma);
}

}  // namespace mpa
