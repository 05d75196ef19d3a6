#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

#include "monomial.hpp"

namespace hasse {

/// A partition lambda_1 >= ... >= lambda_l >= 1 labelling the Schubert
/// class sigma_lambda. Trailing zeros are trimmed; the empty partition is
/// sigma_0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    /// lambda_{j+1}, zero past the length.
    int operator[](std::size_t j) const noexcept { return j < parts_.size() ? parts_[j] : 0; }

    int size() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool fits_box(std::size_t rows, int cols) const noexcept {
        return parts_.size() <= rows && (parts_.empty() || parts_.front() <= cols);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] < 0) throw std::invalid_argument("partition parts must be non-negative");
            if (j > 0 && parts_[j] > parts_[j - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

/// sigma_lambda <-> e^{1+r_1} ^ ... ^ e^{k+r_k}, with (r_1 <= ... <= r_k)
/// being lambda read backwards and padded with zeros.
inline Monomial partition_to_monomial(const Partition& lambda, std::size_t k) {
    if (lambda.length() > k)
        throw precondition_error("partition has " + std::to_string(lambda.length()) + " parts, more than k = " +
                                 std::to_string(k));
    std::vector<int> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = static_cast<int>(j) + 1 + lambda[k - 1 - j];
    return Monomial::from_sorted(std::move(idx));
}

inline Partition monomial_to_partition(const Monomial& m) {
    const std::size_t k = m.arity();
    std::vector<int> parts(k);
    for (std::size_t j = 0; j < k; ++j) parts[j] = m[k - 1 - j] - static_cast<int>(k - j);
    return Partition(std::move(parts));
}

/// 180-degree rotated complement inside the rows x cols box.
inline Partition complement(const Partition& lambda, std::size_t rows, int cols) {
    if (!lambda.fits_box(rows, cols)) throw precondition_error("partition does not fit the box");
    std::vector<int> parts(rows);
    for (std::size_t j = 0; j < rows; ++j) parts[j] = cols - lambda[rows - 1 - j];
    return Partition(std::move(parts));
}

/// Every partition inside the rows x cols box, ascending.
inline std::vector<Partition> partitions_in_box(std::size_t rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int bound) -> void {
        out.emplace_back(cur);
        if (cur.size() == rows) return;
        for (int p = 1; p <= bound; ++p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of `total` with at most max_parts parts (max_part bounds each part).
inline std::vector<Partition> partitions_of(int total, std::size_t max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_parts) return;
        for (int p = std::min(bound, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (total >= 0) rec(rec, total, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hasse
