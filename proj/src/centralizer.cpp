#include "mpa/centralizer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "mpa/algebra.hpp"

namespace mpa {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img[a - 1], p.img[b - 1]);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) p.img[img[i]] = static_cast<int>(i);
    return p;
}

Permutation compose(const Permutation& first, const Permutation& then) {
    Permutation p;
    p.img.resize(first.img.size());
    for (size_t i = 0; i < first.img.size(); ++i) p.img[i] = then.img[first.img[i]];
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    std::sort(p.img.begin(), p.img.end());
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

IntPartition cycle_type(const Permutation& sigma) {
    std::vector<bool> seen(sigma.img.size(), false);
    IntPartition type;
    for (size_t i = 0; i < sigma.img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = sigma.img[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

void MonomialIndex::canonicalize() {
    std::sort(ij.begin(), ij.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
}

MonomialIndex sigma_action(const Permutation& sigma, const MonomialIndex& m) {
    Permutation inv = sigma.inverse();
    MonomialIndex out = m;
    for (auto& [i, j] : out.ij) i = inv.apply(i);
    out.canonicalize();
    return out;
}

MonomialBasis::MonomialBasis(int n, int k, int r, const Limits& limits) : n_(n), k_(k), r_(r) {
    if (n < 1 || k < 1 || r < 0) throw std::invalid_argument("MonomialBasis: bad parameters");
    Integer size = binomial(static_cast<long>(n) * k + r - 1, r);
    if (size > static_cast<long>(limits.max_basis))
        throw ResourceLimitError("monomial basis of size " + size.get_str() + " exceeds cap of " +
                                 std::to_string(limits.max_basis));
    // Multisets of size r over the nk variable slots, in lexicographic order
    // of the canonical (j, i) pair sequence.
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, int)> rec = [&](int min_j, int min_i) {
        if (static_cast<int>(cur.size()) == r_) {
            MonomialIndex m{cur};
            lookup_.emplace(m, static_cast<int>(elements_.size()));
            elements_.push_back(std::move(m));
            return;
        }
        for (int j = min_j; j <= k_; ++j)
            for (int i = (j == min_j ? min_i : 1); i <= n_; ++i) {
                cur.emplace_back(i, j);
                rec(j, i);
                cur.pop_back();
            }
    };
    rec(1, 1);
}

int MonomialBasis::index_of(const MonomialIndex& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) throw std::invalid_argument("monomial outside basis");
    return it->second;
}

long long EndoMatrix::nnz() const {
    long long t = 0;
    for (const auto& row : rows_) t += static_cast<long long>(row.size());
    return t;
}

Rational EndoMatrix::at(int row, int col) const {
    const auto& r = rows_.at(row);
    auto it = r.find(col);
    return it == r.end() ? Rational(0) : it->second;
}

void EndoMatrix::add(int row, int col, const Rational& v) {
    if (v == 0) return;
    auto& r = rows_.at(row);
    auto it = r.find(col);
    if (it == r.end()) {
        r.emplace(col, v);
        return;
    }
    it->second += v;
    if (it->second == 0) r.erase(it);
}

EndoMatrix EndoMatrix::multiply(const EndoMatrix& o, const Limits& limits) const {
    if (o.dim() != dim()) throw std::invalid_argument("matrix dimension mismatch");
    EndoMatrix out(dim());
    long long nnz = 0;
    for (int i = 0; i < dim(); ++i) {
        for (const auto& [mid, v] : rows_[i]) {
            for (const auto& [j, w] : o.rows_[mid]) out.add(i, j, v * w);
        }
        nnz += static_cast<long long>(out.rows_[i].size());
        if (nnz > limits.max_nnz)
            throw ResourceLimitError("sparse product exceeds nonzero cap of " +
                                     std::to_string(limits.max_nnz));
    }
    return out;
}

EndoMatrix EndoMatrix::operator+(const EndoMatrix& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("matrix dimension mismatch");
    EndoMatrix out = *this;
    for (int i = 0; i < dim(); ++i)
        for (const auto& [j, v] : o.rows_[i]) out.add(i, j, v);
    return out;
}

EndoMatrix EndoMatrix::operator*(const Rational& s) const {
    EndoMatrix out(dim());
    if (s == 0) return out;
    for (int i = 0; i < dim(); ++i)
        for (const auto& [j, v] : rows_[i]) out.rows_[i].emplace(j, v * s);
    return out;
}

EndoMatrix EndoMatrix::operator-(const EndoMatrix& o) const { return *this + o * Rational(-1); }

namespace {

// Row/column monomials of the matrix unit for a colored partition: the top
// band elements of block t give pairs (c_t, j) for the row, the bottom band
// gives the column.
std::pair<MonomialIndex, MonomialIndex> unit_indices(const MultisetPartition& pi,
                                                     const std::vector<int>& colors) {
    int k = pi.k();
    MonomialIndex row, col;
    for (int t = 0; t < pi.length(); ++t) {
        const auto& e = pi.blocks()[t].exponents();
        for (int j = 1; j <= k; ++j) {
            for (int c = 0; c < e[j - 1]; ++c) row.ij.emplace_back(colors[t], j);
            for (int c = 0; c < e[k + j - 1]; ++c) col.ij.emplace_back(colors[t], j);
        }
    }
    row.canonicalize();
    col.canonicalize();
    return {std::move(row), std::move(col)};
}

// Recovers the underlying two-row partition of the matrix unit at
// (row, col): group variables by their row index i (the color).
MultisetPartition unit_partition(const MonomialBasis& basis, const MonomialIndex& row,
                                 const MonomialIndex& col) {
    int k = basis.k();
    std::map<int, std::vector<int>> by_color;
    for (const auto& [i, j] : row.ij) {
        auto& e = by_color.try_emplace(i, std::vector<int>(2 * k, 0)).first->second;
        ++e[j - 1];
    }
    for (const auto& [i, j] : col.ij) {
        auto& e = by_color.try_emplace(i, std::vector<int>(2 * k, 0)).first->second;
        ++e[k + j - 1];
    }
    std::vector<Multiset> blocks;
    for (auto& [color, e] : by_color) blocks.emplace_back(std::move(e));
    return {k, 2, std::move(blocks)};
}

}  // namespace

EndoMatrix orbit_matrix(const MonomialBasis& basis, const MultisetPartition& pi) {
    if (pi.rows() != 2 || pi.k() != basis.k() || pi.r() != basis.r())
        throw std::invalid_argument("orbit_matrix: partition does not match basis");
    EndoMatrix out(basis.dim());
    for (const auto& colors : enumerate_colorings(pi, basis.n())) {
        auto [row, col] = unit_indices(pi, colors);
        out.add(basis.index_of(row), basis.index_of(col), 1);
    }
    return out;
}

EndoMatrix permutation_matrix(const MonomialBasis& basis, const Permutation& sigma) {
    EndoMatrix out(basis.dim());
    for (int m = 0; m < basis.dim(); ++m)
        out.add(basis.index_of(sigma_action(sigma, basis.elements()[m])), m, 1);
    return out;
}

bool commutant_check(const MonomialBasis& basis, const EndoMatrix& a) {
    for (int t = 1; t < basis.n(); ++t) {
        EndoMatrix p = permutation_matrix(basis, Permutation::transposition(basis.n(), t, t + 1));
        if (!(a.multiply(p) == p.multiply(a))) return false;
    }
    return true;
}

std::map<MultisetPartition, Rational> orbit_expand(const MonomialBasis& basis, const EndoMatrix& m,
                                                   const std::vector<MultisetPartition>& candidates) {
    std::map<MultisetPartition, Rational> out;
    for (const auto& tau : candidates) {
        if (tau.length() > basis.n()) continue;
        std::vector<int> rep(tau.length());
        std::iota(rep.begin(), rep.end(), 1);
        auto [row, col] = unit_indices(tau, rep);
        Rational c = m.at(basis.index_of(row), basis.index_of(col));
        if (c != 0) out.emplace(tau, c);
    }
    return out;
}

namespace {

VerifyResult compare_products(const MonomialBasis& basis, const MultisetPartition& pi,
                              const MultisetPartition& gamma, const EndoMatrix& o_pi,
                              const EndoMatrix& o_gamma, int n, const Limits& limits) {
    EndoMatrix product = o_pi.multiply(o_gamma, limits);
    auto structural = multiply(AlgebraElement::basis(pi), AlgebraElement::basis(gamma)).evaluate_at(n);

    // Read matrix-side coefficients at the structural keys, then subtract the
    // reconstruction; any residue is support the structural side missed.
    VerifyResult res;
    EndoMatrix reconstruction(basis.dim());
    for (const auto& [tau, coeff] : structural) {
        std::vector<int> rep(tau.length());
        std::iota(rep.begin(), rep.end(), 1);
        auto [row, col] = unit_indices(tau, rep);
        Rational c = product.at(basis.index_of(row), basis.index_of(col));
        reconstruction = reconstruction + orbit_matrix(basis, tau) * c;
        if (c != coeff) res.mismatches.push_back({tau, coeff, c});
    }
    EndoMatrix residue = product - reconstruction;
    for (int i = 0; i < residue.dim(); ++i) {
        for (const auto& [j, v] : residue.row(i)) {
            MultisetPartition tau = unit_partition(basis, basis.elements()[i], basis.elements()[j]);
            bool dup = false;
            for (const auto& mm : res.mismatches) dup = dup || mm.tau == tau;
            if (!dup) res.mismatches.push_back({tau, Rational(0), product.at(i, j)});
        }
    }
    res.match = res.mismatches.empty();
    return res;
}

}  // namespace

VerifyResult verify_isomorphism(const MultisetPartition& pi, const MultisetPartition& gamma, int n,
                                const Limits& limits) {
    int r = pi.r();
    if (gamma.r() != r || gamma.k() != pi.k())
        throw std::invalid_argument("verify_isomorphism: mismatched parameters");
    if (n < 2 * r) throw std::invalid_argument("verify_isomorphism: requires n >= 2r");

    MonomialBasis basis(n, pi.k(), r, limits);
    return compare_products(basis, pi, gamma, orbit_matrix(basis, pi), orbit_matrix(basis, gamma), n,
                            limits);
}

std::vector<PairVerifyReport> verify_all_pairs(int r, int k, int n, int threads,
                                               const Limits& limits) {
    if (n < 2 * r) throw std::invalid_argument("verify_all_pairs: requires n >= 2r");
    auto all = enumerate_msp(r, k, std::nullopt, limits);
    MonomialBasis basis(n, k, r, limits);
    std::vector<EndoMatrix> orbits;
    orbits.reserve(all.size());
    for (const auto& pi : all) orbits.push_back(orbit_matrix(basis, pi));

    std::vector<PairVerifyReport> out;
    out.reserve(all.size() * all.size());
    for (const auto& pi : all)
        for (const auto& gamma : all) out.push_back({pi, gamma, false, {}});

    threads = std::max(1, threads);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (size_t idx = t; idx < out.size(); idx += threads) {
                    size_t a = idx / all.size(), b = idx % all.size();
                    VerifyResult res =
                        compare_products(basis, all[a], all[b], orbits[a], orbits[b], n, limits);
                    out[idx].match = res.match;
                    out[idx].mismatches = std::move(res.mismatches);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

EndoMatrix reynolds_projector(const MonomialBasis& basis, const IntPartition& lambda) {
    if (partition_size(lambda) != basis.n())
        throw std::invalid_argument("reynolds_projector: |lambda| must equal n");
    int n = basis.n();
    long long f_lambda = character(lambda, IntPartition(n, 1));
    EndoMatrix sum(basis.dim());
    for (const auto& sigma : all_permutations(n)) {
        long long chi = character(lambda, cycle_type(sigma));
        if (!chi) continue;
        // P_sigma has a single 1 per column; scale and accumulate directly.
        for (int m = 0; m < basis.dim(); ++m)
            sum.add(basis.index_of(sigma_action(sigma, basis.elements()[m])), m, Rational(static_cast<long>(chi)));
    }
    return sum * rational_of(Integer(static_cast<long>(f_lambda)), factorial(n));
}

namespace {

// Fraction-free Gaussian elimination (Bareiss); exact over the integers.
long bareiss_rank(std::vector<std::vector<Integer>>& m) {
    int nrows = static_cast<int>(m.size());
    if (nrows == 0) return 0;
    int ncols = static_cast<int>(m[0].size());
    long rank = 0;
    Integer prev = 1;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int i = static_cast<int>(rank); i < nrows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = static_cast<int>(rank) + 1; i < nrows; ++i) {
            for (int j = col + 1; j < ncols; ++j) {
                Integer t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

long reynolds_rank(const IntPartition& lambda, int n, int k, int r, const Limits& limits) {
    if (partition_size(lambda) != n) throw std::invalid_argument("reynolds_rank: |lambda| must equal n");
    MonomialBasis basis(n, k, r, limits);
    int d = basis.dim();
    // Integer multiple of the projector: sum_sigma chi^lambda(sigma) P_sigma.
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d, 0));
    for (const auto& sigma : all_permutations(n)) {
        long long chi = character(lambda, cycle_type(sigma));
        if (!chi) continue;
        for (int c = 0; c < d; ++c)
            m[basis.index_of(sigma_action(sigma, basis.elements()[c]))][c] += static_cast<long>(chi);
    }
    return bareiss_rank(m);
}

}  // namespace mpa
