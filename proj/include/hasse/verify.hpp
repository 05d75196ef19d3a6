#pragma once

#include <optional>
#include <string>

#include "format.hpp"
#include "oracle.hpp"

namespace hasse::verify {

struct Report {
    Report() = default;
    explicit Report(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;

    bool passed() const noexcept { return !counterexample; }
    std::string summary() const {
        if (passed()) return "PASS (" + std::to_string(cases) + " cases)";
        return "FAIL after " + std::to_string(cases) + " cases; first counterexample: " + *counterexample;
    }
};

/// Pieri enumeration against the unrestricted Leibniz expansion, for every
/// monomial with arity <= max_k and indices <= max_index, and h <= max_h.
inline Report pieri_vs_leibniz(std::size_t max_k, int max_index, int max_h) {
    Report r{"pieri-vs-leibniz"};
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (const auto& m : monomials_of_arity(k, max_index)) {
            for (int h = 0; h <= max_h; ++h) {
                ++r.cases;
                const Element fast = d_h_pieri(h, m);
                const Element slow = oracle::d_h_leibniz(h, m);
                if (fast != slow) {
                    r.counterexample = "h=" + std::to_string(h) + " m=" + render(m) + ": pieri " + render(fast) +
                                       " vs leibniz " + render(slow);
                    return r;
                }
            }
        }
    }
    return r;
}

/// factor_prefix against d_h_pieri over the same kind of sweep.
inline Report prefix_factoring(std::size_t max_k, int max_index, int max_h) {
    Report r{"prefix"};
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (const auto& m : monomials_of_arity(k, max_index)) {
            for (int h = 0; h <= max_h; ++h) {
                ++r.cases;
                if (factor_prefix(h, m) != d_h_pieri(h, m)) {
                    r.counterexample = "h=" + std::to_string(h) + " m=" + render(m);
                    return r;
                }
            }
        }
    }
    return r;
}

/// Delta_lambda(D) (e^1 ^ ... ^ e^k) = monomial(lambda) for every lambda with
/// at most k parts, each at most max_part.
inline Report giambelli_reconstruction(std::size_t k, int max_part) {
    Report r{"giambelli"};
    const Element bottom(partition_to_monomial(Partition{}, k));
    for (const auto& lambda : partitions_in_box(k, max_part)) {
        ++r.cases;
        const Element got = apply_operator_poly(giambelli_operator(lambda, k), bottom);
        const Element want(partition_to_monomial(lambda, k));
        if (got != want) {
            r.counterexample = render(lambda) + ": got " + render(got) + ", want " + render(want);
            return r;
        }
    }
    return r;
}

/// sigma_lambda . sigma_mu pairs to 1 exactly when mu is the box complement
/// of lambda, for every pair of complementary degree.
inline Report duality(const GrassContext& ctx) {
    Report r{"duality"};
    const auto box = partitions_in_box(ctx.k(), ctx.cols());
    for (const auto& lambda : box) {
        const Partition dual = complement(lambda, ctx.k(), ctx.cols());
        for (const auto& mu : box) {
            if (lambda.size() + mu.size() != ctx.dimension()) continue;
            ++r.cases;
            const Integer got = intersection_number(ctx, {lambda, mu});
            const Integer want = mu == dual ? 1 : 0;
            if (got != want) {
                r.counterexample = render(lambda) + " . " + render(mu) + " = " + to_string(got) + ", want " +
                                   to_string(want);
                return r;
            }
        }
    }
    return r;
}

/// Classical structure constants against Littlewood-Richardson. The
/// infinite-model product must agree with the LR rule on every target with
/// at most k rows; targets wider than the box must be exactly the monomials
/// p_n removes.
inline Report littlewood_richardson(const GrassContext& ctx) {
    Report r{"lr"};
    const std::size_t k = ctx.k();
    const auto box = partitions_in_box(k, ctx.cols());
    for (const auto& lambda : box) {
        for (const auto& mu : box) {
            const SchubertExpansion classical = schubert_product(ctx, lambda, mu, false);
            const Element infinite =
                apply_operator_poly(giambelli_operator(mu, k), Element(partition_to_monomial(lambda, k)));
            const int total = lambda.size() + mu.size();
            auto fail = [&](const Partition& nu, const std::string& what) {
                r.counterexample = render(lambda) + " * " + render(mu) + " at " + render(nu) + ": " + what;
            };
            std::size_t in_box_seen = 0;
            for (const auto& nu : partitions_of(total, k, total)) {
                ++r.cases;
                const Integer lr = oracle::lr_coefficient(lambda, mu, nu);
                const Monomial target = partition_to_monomial(nu, k);
                if (infinite.coefficient(target) != QPolynomial(lr)) {
                    fail(nu, "infinite-model coefficient " + render(infinite.coefficient(target)) + " vs LR " +
                                 to_string(lr));
                    return r;
                }
                auto it = classical.find(nu);
                const Integer box_coeff = it == classical.end() ? Integer(0) : it->second.constant_term();
                if (ctx.contains(nu)) {
                    if (box_coeff != lr) {
                        fail(nu, "box coefficient " + to_string(box_coeff) + " vs LR " + to_string(lr));
                        return r;
                    }
                    if (lr != 0) ++in_box_seen;
                } else if (box_coeff != 0 || (lr != 0 && target.max_index() <= ctx.n())) {
                    fail(nu, "outside-box target not removed by p_n");
                    return r;
                }
            }
            if (in_box_seen != classical.size()) {
                r.counterexample = render(lambda) + " * " + render(mu) + ": classical product has extra terms";
                return r;
            }
        }
    }
    return r;
}

/// sigma_1^{k(n-k)} against the hook-length count.
inline Report sigma1_power(const GrassContext& ctx) {
    Report r{"syt"};
    ++r.cases;
    const Integer got = intersection_number(ctx, std::vector<Partition>(ctx.dimension(), Partition{1}));
    const Integer want = oracle::syt_rectangle_count(static_cast<int>(ctx.k()), ctx.cols());
    if (got != want) r.counterexample = to_string(got) + " vs hook-length " + to_string(want);
    return r;
}

/// p_n o D_h = 0 for h in [n+1, n+extra] on every basis vector.
inline Report null_map(const GrassContext& ctx, int extra) {
    Report r{"null-map"};
    for (const auto& m : monomials_of_arity(ctx.k(), ctx.n())) {
        for (int h = ctx.n() + 1; h <= ctx.n() + extra; ++h) {
            ++r.cases;
            const Element image = project_pn(ctx, d_h_pieri(h, m));
            if (!image.is_zero()) {
                r.counterexample = "h=" + std::to_string(h) + " m=" + render(m) + " -> " + render(image);
                return r;
            }
        }
    }
    return r;
}

/// quantum_dh against the wedge power of e^{a n + i} -> q^a e^i applied to
/// the Leibniz expansion, for every basis vector and 0 <= h < n. At h = n
/// the two differ: the residue i_k + h_k - n can equal i_1, a term the
/// closed formula drops and the reduction keeps.
inline Report quantum_reduction(const GrassContext& ctx) {
    Report r{"quantum-reduction"};
    for (const auto& m : monomials_of_arity(ctx.k(), ctx.n())) {
        for (int h = 0; h < ctx.n(); ++h) {
            ++r.cases;
            const Element fast = quantum_dh(ctx, h, m);
            const Element slow = oracle::wedge_q_reduce(ctx.n(), oracle::d_h_leibniz(h, m));
            if (fast != slow) {
                r.counterexample = "h=" + std::to_string(h) + " m=" + render(m) + ": " + render(fast) + " vs " +
                                   render(slow);
                return r;
            }
        }
    }
    return r;
}

/// Every coefficient of every q-power is non-negative in the Bertram convention.
inline Report quantum_positivity(const GrassContext& ctx) {
    Report r{"positivity"};
    const auto box = partitions_in_box(ctx.k(), ctx.cols());
    for (const auto& lambda : box) {
        for (const auto& mu : box) {
            ++r.cases;
            for (const auto& [nu, c] : schubert_product(ctx, lambda, mu, true, QConvention::bertram)) {
                for (const auto& [deg, v] : c.coefficients()) {
                    if (v < 0) {
                        r.counterexample = render(lambda) + " * " + render(mu) + " has " + render(c) + " at " +
                                           render(nu);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

}  // namespace hasse::verify
