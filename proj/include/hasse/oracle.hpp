#pragma once

// Slow, independent reference computations. Nothing here is used by the
// main code path; tests and the `verify` command compare against it.

#include <vector>

#include "derivation.hpp"

namespace hasse::oracle {

/// e^{j_1} ^ ... ^ e^{j_k} for an arbitrary index list, canonicalized by
/// repeated wedge_monomials. Returns sign 0 on a repeated index.
inline SignedMonomial wedge_indices(const std::vector<int>& indices) {
    SignedMonomial acc{1, Monomial{}};
    for (int j : indices) {
        auto [sign, m] = wedge_monomials(acc.monomial, Monomial::from_sorted({j}));
        if (sign == 0) return {0, Monomial{}};
        acc = {acc.sign * sign, std::move(m)};
    }
    return acc;
}

/// D_h(m) as the unrestricted sum over all compositions h_1 + ... + h_k = h,
/// each term sorted with sign; cancellation happens in the sum.
inline Element d_h_leibniz(int h, const Monomial& m) {
    const std::size_t k = m.arity();
    Element out = Element::zero(k);
    if (h < 0) return out;
    if (k == 0) {
        if (h == 0) out.add_term(m, 1);
        return out;
    }
    std::vector<int> shifts(k, 0);
    auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
        if (j + 1 == k) {
            shifts[j] = remaining;
            std::vector<int> idx(k);
            for (std::size_t t = 0; t < k; ++t) idx[t] = m[t] + shifts[t];
            auto [sign, mono] = wedge_indices(idx);
            if (sign != 0) out.add_term(mono, sign);
            return;
        }
        for (int hj = 0; hj <= remaining; ++hj) {
            shifts[j] = hj;
            self(self, j + 1, remaining - hj);
        }
    };
    rec(rec, 0, h);
    return out;
}

inline Element d_h_leibniz_element(int h, const Element& x) {
    Element out(x.grade());
    for (const auto& [m, c] : x.terms()) out += d_h_leibniz(h, m) * c;
    return out;
}

/// The wedge power of e^{a n + i} -> q^a e^i (1 <= i <= n), applied term by
/// term to an element of the infinite model.
inline Element wedge_q_reduce(int n, const Element& x) {
    Element out(x.grade());
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> residues;
        unsigned qdeg = 0;
        for (int j : m.indices()) {
            qdeg += static_cast<unsigned>((j - 1) / n);
            residues.push_back((j - 1) % n + 1);
        }
        auto [sign, mono] = wedge_indices(residues);
        if (sign == 0) continue;
        out.add_term(mono, c * QPolynomial::monomial(qdeg, sign));
    }
    return out;
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of
/// semistandard fillings of nu / lambda with content mu whose reverse
/// reading word (rows top to bottom, each right to left) is a lattice word.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    for (std::size_t r = 0; r < std::max(lambda.length(), nu.length()); ++r)
        if (lambda[r] > nu[r]) return 0;
    if (mu.empty()) return nu == lambda ? 1 : 0;

    struct Cell {
        std::size_t row;
        int col;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < nu.length(); ++r)
        for (int c = lambda[r]; c < nu[r]; ++c) cells.push_back({r, c});

    const int letters = static_cast<int>(mu.length());
    std::vector<std::vector<int>> fill(nu.length());
    for (std::size_t r = 0; r < nu.length(); ++r) fill[r].assign(static_cast<std::size_t>(nu[r]), 0);

    Integer count = 0;
    auto accept = [&]() {
        std::vector<int> seen(static_cast<std::size_t>(letters) + 1, 0);
        for (std::size_t r = 0; r < nu.length(); ++r) {
            for (int c = nu[r] - 1; c >= lambda[r]; --c) {
                const int v = fill[r][static_cast<std::size_t>(c)];
                ++seen[static_cast<std::size_t>(v)];
                if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return false;
            }
        }
        for (int v = 1; v <= letters; ++v)
            if (seen[static_cast<std::size_t>(v)] != mu[static_cast<std::size_t>(v - 1)]) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            if (accept()) ++count;
            return;
        }
        const auto [r, c] = cells[at];
        int low = 1;
        if (c > lambda[r]) low = fill[r][static_cast<std::size_t>(c - 1)];
        if (r > 0 && c >= lambda[r - 1]) low = std::max(low, fill[r - 1][static_cast<std::size_t>(c)] + 1);
        for (int v = low; v <= letters; ++v) {
            fill[r][static_cast<std::size_t>(c)] = v;
            self(self, at + 1);
        }
        fill[r][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return count;
}

/// Standard Young tableaux of the rows x cols rectangle, by the hook-length
/// formula.
inline Integer syt_rectangle_count(int rows, int cols) {
    if (rows < 0 || cols < 0) throw precondition_error("rectangle dimensions must be non-negative");
    Integer numerator = 1;
    for (int t = 2; t <= rows * cols; ++t) numerator *= t;
    Integer hooks = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) hooks *= (cols - 1 - j) + (rows - 1 - i) + 1;
    return numerator / hooks;
}

}  // namespace hasse::oracle
