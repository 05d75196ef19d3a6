#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace hasse {

/// A basis vector e^{i_1} ^ ... ^ e^{i_k} of the k-th exterior power,
/// stored as its strictly increasing index list. The empty monomial is the
/// unit of the degree-zero part.
class Monomial {
public:
    using index_type = int;

    Monomial() = default;
    explicit Monomial(std::vector<index_type> indices) : indices_(std::move(indices)) { validate(); }
    Monomial(std::initializer_list<index_type> indices) : indices_(indices) { validate(); }

    /// Skips validation; the caller guarantees 1 <= i_1 < ... < i_k.
    static Monomial from_sorted(std::vector<index_type> indices) {
        Monomial m;
        m.indices_ = std::move(indices);
        return m;
    }

    std::span<const index_type> indices() const noexcept { return indices_; }
    std::size_t arity() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    index_type operator[](std::size_t j) const { return indices_[j]; }
    index_type front() const { return indices_.front(); }
    /// Largest index, or 0 for the empty monomial.
    index_type max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

    long long weight() const noexcept {
        long long w = 0;
        for (auto i : indices_) w += i;
        return w;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Arity first, then colexicographic (compare from the largest index
    /// down). For fixed k and n this lists the basis of the rank-n
    /// truncation as an initial segment.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.arity() <=> b.arity(); c != 0) return c;
        for (std::size_t j = a.arity(); j-- > 0;) {
            if (auto c = a.indices_[j] <=> b.indices_[j]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    void validate() const {
        for (std::size_t j = 0; j < indices_.size(); ++j) {
            if (indices_[j] < 1)
                throw std::invalid_argument("monomial index must be >= 1, got " + std::to_string(indices_[j]));
            if (j > 0 && indices_[j - 1] >= indices_[j])
                throw std::invalid_argument("monomial indices must be strictly increasing");
        }
    }

    std::vector<index_type> indices_;
};

struct SignedMonomial {
    int sign = 0;  // -1, 0 or +1
    Monomial monomial;

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// e^a ^ e^b = sign * e^m, with m the sorted merge. Shared indices give sign 0
/// and the empty monomial.
inline SignedMonomial wedge_monomials(const Monomial& a, const Monomial& b) {
    std::vector<Monomial::index_type> merged;
    merged.reserve(a.arity() + b.arity());
    auto ai = a.indices();
    auto bi = b.indices();
    std::size_t i = 0, j = 0;
    std::size_t inversions = 0;
    while (i < ai.size() && j < bi.size()) {
        if (ai[i] == bi[j]) return {0, Monomial{}};
        if (ai[i] < bi[j]) {
            merged.push_back(ai[i++]);
        } else {
            // b[j] jumps over every remaining element of a
            inversions += ai.size() - i;
            merged.push_back(bi[j++]);
        }
    }
    merged.insert(merged.end(), ai.begin() + static_cast<std::ptrdiff_t>(i), ai.end());
    merged.insert(merged.end(), bi.begin() + static_cast<std::ptrdiff_t>(j), bi.end());
    return {inversions % 2 == 0 ? 1 : -1, Monomial::from_sorted(std::move(merged))};
}

/// All monomials of arity k with indices in [1, max_index], in colex order.
inline std::vector<Monomial> monomials_of_arity(std::size_t k, int max_index) {
    std::vector<Monomial> out;
    if (static_cast<long long>(k) > max_index && k > 0) return out;
    std::vector<int> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = static_cast<int>(j) + 1;
    while (true) {
        out.push_back(Monomial::from_sorted(idx));
        // lexicographic successor
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == max_index - static_cast<int>(k - j)) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hasse
