#pragma once

#include <vector>

#include "element.hpp"
#include "partition.hpp"

namespace hasse {

/// The Grassmannian G_k(C^n): arity k, ambient rank n, 1 <= k <= n.
/// Classes live in the k x (n-k) box.
class GrassContext {
public:
    GrassContext(std::size_t k, int n) : k_(k), n_(n) {
        if (k < 1 || static_cast<long long>(k) > n)
            throw precondition_error("Grassmannian needs 1 <= k <= n, got k = " + std::to_string(k) +
                                     ", n = " + std::to_string(n));
    }

    std::size_t k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    int cols() const noexcept { return n_ - static_cast<int>(k_); }
    int dimension() const noexcept { return static_cast<int>(k_) * cols(); }

    bool contains(const Monomial& m) const noexcept { return m.arity() == k_ && m.max_index() <= n_; }
    bool contains(const Partition& p) const noexcept { return p.fits_box(k_, cols()); }

    /// sigma_0, i.e. e^1 ^ ... ^ e^k.
    Monomial bottom() const { return partition_to_monomial(Partition{}, k_); }
    /// The point class, e^{n-k+1} ^ ... ^ e^n.
    Monomial top() const {
        std::vector<int> idx(k_);
        for (std::size_t j = 0; j < k_; ++j) idx[j] = cols() + 1 + static_cast<int>(j);
        return Monomial::from_sorted(std::move(idx));
    }

    friend bool operator==(const GrassContext&, const GrassContext&) = default;

private:
    std::size_t k_;
    int n_;
};

/// Calls visit(indices) for every (h_1, ..., h_k) in H(I, h), in
/// lexicographic order of the shifts. `indices` holds i_j + h_j and is
/// strictly increasing. Only admissible tuples are generated: h_j is
/// bounded by i_{j+1} - i_j - 1 for j < k, and h_k takes what is left.
template <class Visitor>
void for_each_pieri_term(int h, const Monomial& m, Visitor&& visit) {
    if (h < 0) return;
    const std::size_t k = m.arity();
    if (k == 0) {
        if (h == 0) visit(std::vector<int>{});
        return;
    }
    std::vector<int> shifted(m.indices().begin(), m.indices().end());
    auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
        if (j + 1 == k) {
            shifted[j] = m[j] + remaining;
            visit(std::as_const(shifted));
            return;
        }
        const int bound = std::min(remaining, m[j + 1] - m[j] - 1);
        for (int hj = 0; hj <= bound; ++hj) {
            shifted[j] = m[j] + hj;
            self(self, j + 1, remaining - hj);
        }
        shifted[j] = m[j];
    };
    rec(rec, 0, h);
}

/// D_h(m) by Pieri's formula. Every coefficient is +1.
inline Element d_h_pieri(int h, const Monomial& m) {
    Element out = Element::zero(m.arity());
    for_each_pieri_term(h, m, [&](const std::vector<int>& idx) { out.add_term(Monomial::from_sorted(idx), 1); });
    return out;
}

inline Element d_h_element(int h, const Element& x) {
    Element out(x.grade());
    for (const auto& [m, c] : x.terms()) {
        for_each_pieri_term(h, m, [&](const std::vector<int>& idx) { out.add_term(Monomial::from_sorted(idx), c); });
    }
    return out;
}

/// [D_0 x, D_1 x, ..., D_order x]: the coefficients of D_t x up to t^order.
inline std::vector<Element> d_t_truncated(int order, const Element& x) {
    if (order < 0) throw precondition_error("truncation order must be non-negative");
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int h = 0; h <= order; ++h) out.push_back(d_h_element(h, x));
    return out;
}

namespace detail {
inline void require_grade(const GrassContext& ctx, const Element& x) {
    if (x.grade() && *x.grade() != ctx.k())
        throw precondition_error("element has grade " + std::to_string(*x.grade()) + ", context expects k = " +
                                 std::to_string(ctx.k()));
    for (const auto& [m, c] : x.terms()) {
        if (m.arity() != ctx.k())
            throw precondition_error("element has a term of arity " + std::to_string(m.arity()) +
                                     ", context expects k = " + std::to_string(ctx.k()));
    }
}

inline void require_box(const GrassContext& ctx, const Element& x) {
    require_grade(ctx, x);
    for (const auto& [m, c] : x.terms()) {
        if (m.max_index() > ctx.n())
            throw precondition_error("index " + std::to_string(m.max_index()) + " exceeds n = " +
                                     std::to_string(ctx.n()));
    }
}
}  // namespace detail

/// p_n: drops every monomial whose largest index exceeds n.
inline Element project_pn(const GrassContext& ctx, const Element& x) {
    detail::require_grade(ctx, x);
    Element out = Element::zero(ctx.k());
    for (const auto& [m, c] : x.terms()) {
        if (m.max_index() <= ctx.n()) out.add_term(m, c);
    }
    return out;
}

/// p_n o D_h restricted to box-supported input.
inline Element classical_dh_element(const GrassContext& ctx, int h, const Element& x) {
    detail::require_box(ctx, x);
    Element out = Element::zero(ctx.k());
    for (const auto& [m, c] : x.terms()) {
        for_each_pieri_term(h, m, [&](const std::vector<int>& idx) {
            if (idx.back() <= ctx.n()) out.add_term(Monomial::from_sorted(idx), c);
        });
    }
    return out;
}

/// The quantum-reduced operator on the rank-n truncation with q adjoined:
/// the p_n part of D_h(m) plus (-1)^{k-1} q times the terms whose last
/// index overflows n by less than i_1, with the overflow residue moved to
/// the front. Raw sign convention; see schubert.hpp for the rescaled one.
inline Element quantum_dh(const GrassContext& ctx, int h, const Monomial& m) {
    if (m.arity() != ctx.k())
        throw precondition_error("monomial arity " + std::to_string(m.arity()) + " differs from k = " +
                                 std::to_string(ctx.k()));
    if (m.max_index() > ctx.n())
        throw precondition_error("index " + std::to_string(m.max_index()) + " lies outside the box (n = " +
                                 std::to_string(ctx.n()) + ")");
    if (h < 0 || h > ctx.n())
        throw precondition_error("quantum D_h needs 0 <= h <= n, got h = " + std::to_string(h));

    const int n = ctx.n();
    const QPolynomial quantum_coeff = QPolynomial::monomial(1, ctx.k() % 2 == 1 ? 1 : -1);
    Element out = Element::zero(ctx.k());
    for_each_pieri_term(h, m, [&](const std::vector<int>& idx) {
        const int last = idx.back();
        if (last <= n) {
            out.add_term(Monomial::from_sorted(idx), 1);
            return;
        }
        const int residue = last - n;
        if (residue >= m.front()) return;
        // e^{residue} ^ e^{i_1+h_1} ^ ... ^ e^{i_{k-1}+h_{k-1}}
        auto [sign, reduced] = wedge_monomials(Monomial::from_sorted({residue}),
                                               Monomial::from_sorted(std::vector<int>(idx.begin(), idx.end() - 1)));
        if (sign == 0) return;
        out.add_term(reduced, sign > 0 ? quantum_coeff : -quantum_coeff);
    });
    return out;
}

/// q-linear extension of quantum_dh.
inline Element quantum_dh_element(const GrassContext& ctx, int h, const Element& x) {
    detail::require_box(ctx, x);
    Element out = Element::zero(ctx.k());
    for (const auto& [m, c] : x.terms()) out += quantum_dh(ctx, h, m) * c;
    return out;
}

/// D_h(m) computed by freezing the initial consecutive run: for
/// m = (s, s+1, ..., s+j, i_{j+2}, ...), D_h only moves the suffix starting
/// at e^{s+j}, and the prefix e^s ^ ... ^ e^{s+j-1} is wedged back on.
inline Element factor_prefix(int h, const Monomial& m) {
    const auto idx = m.indices();
    std::size_t run = idx.empty() ? 0 : 1;
    while (run < idx.size() && idx[run] == idx[run - 1] + 1) ++run;
    const std::size_t frozen = run == 0 ? 0 : run - 1;
    if (frozen == 0) return d_h_pieri(h, m);

    const Monomial prefix = Monomial::from_sorted(std::vector<int>(idx.begin(), idx.begin() + frozen));
    const Monomial suffix = Monomial::from_sorted(std::vector<int>(idx.begin() + frozen, idx.end()));
    return wedge(Element(prefix), d_h_pieri(h, suffix));
}

}  // namespace hasse
