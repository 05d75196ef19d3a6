#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <variant>
#include <vector>

#include "derivation.hpp"
#include "operator_poly.hpp"

namespace hasse {

/// Giambelli operator Delta_lambda(D): the k x k determinant whose (a, b)
/// entry is D_{r_b + b - a}, where r_1 <= ... <= r_k is lambda reversed.
/// Expanded as a sum over permutations; D_i = 0 for i < 0.
inline OperatorPoly giambelli_operator(const Partition& lambda, std::size_t k) {
    if (lambda.length() > k)
        throw precondition_error("partition has " + std::to_string(lambda.length()) + " parts, more than k = " +
                                 std::to_string(k));
    std::vector<int> r(k);
    for (std::size_t b = 0; b < k; ++b) r[b] = lambda[k - 1 - b];

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    OperatorPoly out;
    if (k == 0) return OperatorPoly::identity();
    do {
        OperatorPoly::generator_list gens;
        gens.reserve(k);
        bool vanishes = false;
        for (std::size_t a = 0; a < k && !vanishes; ++a) {
            const std::size_t b = perm[a];
            const int index = r[b] + static_cast<int>(b) - static_cast<int>(a);
            if (index < 0) vanishes = true;
            gens.push_back(index);
        }
        if (vanishes) continue;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        out.add_term(std::move(gens), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// G(D) with m = G(D) (e^1 ^ ... ^ e^k).
inline OperatorPoly giambelli_solve(const Monomial& m) {
    return giambelli_operator(monomial_to_partition(m), m.arity());
}

struct InfiniteMode {};
struct ClassicalMode {
    GrassContext ctx;
};
struct QuantumMode {
    GrassContext ctx;
};
/// How each generator D_h acts: on the full exterior power, as p_n o D_h,
/// or as the quantum-reduced operator on the rank-n truncation.
using EvaluationMode = std::variant<InfiniteMode, ClassicalMode, QuantumMode>;

enum class GeneratorOrder { ascending, descending };

namespace detail {
inline Element apply_generator(const EvaluationMode& mode, int h, const Element& x) {
    return std::visit(
        [&](const auto& md) -> Element {
            using M = std::decay_t<decltype(md)>;
            if constexpr (std::is_same_v<M, InfiniteMode>) {
                return d_h_element(h, x);
            } else if constexpr (std::is_same_v<M, ClassicalMode>) {
                return classical_dh_element(md.ctx, h, x);
            } else {
                return quantum_dh_element(md.ctx, h, x);
            }
        },
        mode);
}
}  // namespace detail

/// Evaluates P(D) on x. Each commutative monomial of P is applied as a
/// composition of its generators in the requested order.
inline Element apply_operator_poly(const OperatorPoly& poly, const Element& x,
                                   const EvaluationMode& mode = InfiniteMode{},
                                   GeneratorOrder order = GeneratorOrder::ascending) {
    if (const auto* cm = std::get_if<ClassicalMode>(&mode)) detail::require_box(cm->ctx, x);
    if (const auto* qm = std::get_if<QuantumMode>(&mode)) {
        detail::require_box(qm->ctx, x);
        for (const auto& [gens, c] : poly.terms()) {
            if (!gens.empty() && gens.back() > qm->ctx.n())
                throw precondition_error("quantum generator D_" + std::to_string(gens.back()) + " exceeds n = " +
                                         std::to_string(qm->ctx.n()));
        }
    }

    Element out(x.grade());
    for (const auto& [gens, c] : poly.terms()) {
        Element acc = x;
        if (order == GeneratorOrder::ascending) {
            for (auto it = gens.begin(); it != gens.end() && !acc.is_zero(); ++it)
                acc = detail::apply_generator(mode, *it, acc);
        } else {
            for (auto it = gens.rbegin(); it != gens.rend() && !acc.is_zero(); ++it)
                acc = detail::apply_generator(mode, *it, acc);
        }
        out += acc * QPolynomial(c);
    }
    return out;
}

/// raw: q as it falls out of the quantum-reduced operator.
/// bertram: q renamed to (-1)^{k-1} q, making all structure constants
/// non-negative.
enum class QConvention { raw, bertram };

/// Schubert classes ordered for display: descending lexicographic.
using SchubertExpansion = std::map<Partition, QPolynomial, std::greater<>>;

inline QPolynomial to_convention(const QPolynomial& raw, std::size_t k, QConvention convention) {
    if (convention == QConvention::raw || k % 2 == 1) return raw;
    return raw.rescale_q(-1);
}

inline Element to_convention(const Element& raw, std::size_t k, QConvention convention) {
    if (convention == QConvention::raw || k % 2 == 1) return raw;
    Element out(raw.grade());
    for (const auto& [m, c] : raw.terms()) out.add_term(m, c.rescale_q(-1));
    return out;
}

inline SchubertExpansion to_expansion(const Element& x) {
    SchubertExpansion out;
    for (const auto& [m, c] : x.terms()) out.emplace(monomial_to_partition(m), c);
    return out;
}

namespace detail {
inline void require_class(const GrassContext& ctx, const Partition& p) {
    if (!ctx.contains(p))
        throw precondition_error("partition of length " + std::to_string(p.length()) + " and first part " +
                                 std::to_string(p[0]) + " does not fit the " + std::to_string(ctx.k()) + " x " +
                                 std::to_string(ctx.cols()) + " box");
}
}  // namespace detail

/// sigma_lambda * sigma_mu in H*(G_k(C^n)) or QH*(G_k(C^n)): Delta_mu(D)
/// applied to the monomial of lambda.
inline SchubertExpansion schubert_product(const GrassContext& ctx, const Partition& lambda, const Partition& mu,
                                          bool quantum, QConvention convention = QConvention::bertram) {
    detail::require_class(ctx, lambda);
    detail::require_class(ctx, mu);
    const Element start(partition_to_monomial(lambda, ctx.k()));
    const OperatorPoly op = giambelli_operator(mu, ctx.k());
    Element result = quantum ? apply_operator_poly(op, start, QuantumMode{ctx})
                             : apply_operator_poly(op, start, ClassicalMode{ctx});
    return to_expansion(to_convention(result, ctx.k(), convention));
}

/// Successive product of the given classes applied to sigma_0, in the
/// requested mode and raw convention.
inline Element product_of_classes(const GrassContext& ctx, const std::vector<Partition>& classes, bool quantum) {
    Element acc(ctx.bottom());
    for (const auto& lambda : classes) {
        detail::require_class(ctx, lambda);
        const OperatorPoly op = giambelli_operator(lambda, ctx.k());
        acc = quantum ? apply_operator_poly(op, acc, QuantumMode{ctx}) : apply_operator_poly(op, acc, ClassicalMode{ctx});
        if (acc.is_zero()) break;
    }
    return acc;
}

/// Coefficient of the point class in the classical product of `classes`.
/// Zero when the degrees do not add up to k(n-k).
inline Integer intersection_number(const GrassContext& ctx, const std::vector<Partition>& classes) {
    int degree = 0;
    for (const auto& lambda : classes) {
        detail::require_class(ctx, lambda);
        degree += lambda.size();
    }
    if (degree != ctx.dimension()) return 0;
    return product_of_classes(ctx, classes, false).coefficient(ctx.top()).constant_term();
}

/// Degree-d Gromov-Witten number: coefficient of q^d times the point class
/// in the quantum product (Bertram convention). Zero unless the degrees add
/// up to k(n-k) + d n.
inline Integer gw_number(const GrassContext& ctx, const std::vector<Partition>& classes, int d) {
    if (d < 0) return 0;
    long long degree = 0;
    for (const auto& lambda : classes) {
        detail::require_class(ctx, lambda);
        degree += lambda.size();
    }
    if (degree != static_cast<long long>(ctx.dimension()) + static_cast<long long>(d) * ctx.n()) return 0;
    const Element raw = product_of_classes(ctx, classes, true);
    const QPolynomial top = to_convention(raw.coefficient(ctx.top()), ctx.k(), QConvention::bertram);
    return top.coefficient(static_cast<QPolynomial::degree_type>(d));
}

}  // namespace hasse
