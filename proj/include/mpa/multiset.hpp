#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mpa {

/// A multiset over a linearly ordered alphabet, stored as an exponent vector.
/// Index order is alphabet order: for blocks of a two-row partition with max
/// value k the letters are 1 < 2 < ... < k < 1' < ... < k' and the vector has
/// length 2k (unbarred values first, then barred); three-row blocks append a
/// third band of k double-barred letters.
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("negative multiplicity in multiset");
    }

    const std::vector<int>& exponents() const { return e_; }
    int alphabet_size() const { return static_cast<int>(e_.size()); }
    int size() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool empty() const {
        for (int v : e_)
            if (v) return false;
        return true;
    }

    /// Count of the elements whose indices fall in [lo, hi).
    int size_in(int lo, int hi) const {
        int s = 0;
        for (int i = lo; i < hi && i < alphabet_size(); ++i) s += e_[i];
        return s;
    }

    /// Restriction to the concatenation of index bands [lo, lo+width), in the
    /// listed order, re-based to a fresh alphabet.  This implements the
    /// bar-dropping conventions: restricting a three-row block to rows
    /// {mid,bot} yields a two-row block with one bar removed everywhere.
    Multiset restrict_bands(const std::vector<int>& band_los, int width) const {
        std::vector<int> out;
        out.reserve(band_los.size() * width);
        for (int lo : band_los)
            for (int i = 0; i < width; ++i) out.push_back(e_.at(lo + i));
        return Multiset(std::move(out));
    }

    Multiset disjoint_union(const Multiset& o) const {
        if (o.alphabet_size() != alphabet_size())
            throw std::invalid_argument("multiset union over mismatched alphabets");
        std::vector<int> out(e_);
        for (int i = 0; i < alphabet_size(); ++i) out[i] += o.e_[i];
        return Multiset(std::move(out));
    }

    /// Swap the two bands of a two-row block (the bar involution i <-> i').
    Multiset bar_swap() const {
        int k = alphabet_size() / 2;
        if (alphabet_size() != 2 * k) throw std::invalid_argument("bar_swap needs a two-row block");
        std::vector<int> out(e_.size());
        for (int i = 0; i < k; ++i) {
            out[i] = e_[k + i];
            out[k + i] = e_[i];
        }
        return Multiset(std::move(out));
    }

    bool operator==(const Multiset& o) const { return e_ == o.e_; }

    /// Last-letter order.  On exponent vectors this is reverse-colex: the
    /// highest letter with differing multiplicity decides, fewer copies first.
    /// Implies empty < non-empty.
    std::strong_ordering operator<=>(const Multiset& o) const {
        if (auto c = alphabet_size() <=> o.alphabet_size(); c != 0) return c;
        for (int i = alphabet_size() - 1; i >= 0; --i)
            if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::vector<int> e_;
};

enum class Ordering { LT, EQ, GT };

/// Three-way comparator form; mismatched alphabets are a contract violation.
inline Ordering last_letter_cmp(const Multiset& s, const Multiset& t) {
    if (s.alphabet_size() != t.alphabet_size())
        throw std::invalid_argument("last_letter_cmp: alphabet mismatch");
    auto c = s <=> t;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

}  // namespace mpa
