#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "integer.hpp"

namespace hasse {

/// An element of Z[D] = Z[D_1, D_2, ...]. Each commutative monomial is the
/// sorted multiset of its generator indices; the empty multiset is D_0,
/// the identity.
class OperatorPoly {
public:
    using generator_list = std::vector<int>;
    using term_map = std::map<generator_list, Integer>;

    OperatorPoly() = default;

    static OperatorPoly identity() { return constant(1); }
    static OperatorPoly constant(const Integer& c) {
        OperatorPoly p;
        p.add_term({}, c);
        return p;
    }
    /// D_h, with D_0 the identity and D_h = 0 for h < 0.
    static OperatorPoly generator(int h) {
        OperatorPoly p;
        if (h == 0) p.add_term({}, 1);
        if (h > 0) p.add_term({h}, 1);
        return p;
    }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(generator_list gens) const {
        std::sort(gens.begin(), gens.end());
        auto it = terms_.find(gens);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Generators of index 0 are dropped (identity); negative ones are rejected.
    void add_term(generator_list gens, const Integer& c) {
        if (c == 0) return;
        if (std::any_of(gens.begin(), gens.end(), [](int g) { return g < 0; }))
            throw std::invalid_argument("operator generators must have non-negative index");
        std::erase(gens, 0);
        std::sort(gens.begin(), gens.end());
        auto [it, inserted] = terms_.try_emplace(std::move(gens), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    OperatorPoly& operator+=(const OperatorPoly& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    OperatorPoly& operator-=(const OperatorPoly& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }

    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
    friend OperatorPoly operator-(OperatorPoly a) {
        for (auto& [g, c] : a.terms_) c = -c;
        return a;
    }
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
        OperatorPoly out;
        for (const auto& [ga, ca] : a.terms_) {
            for (const auto& [gb, cb] : b.terms_) {
                generator_list merged;
                merged.reserve(ga.size() + gb.size());
                std::merge(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(merged));
                out.add_term(std::move(merged), ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

private:
    term_map terms_;
};

}  // namespace hasse
