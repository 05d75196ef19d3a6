#pragma once

#include <map>
#include <optional>

#include "monomial.hpp"
#include "qpolynomial.hpp"

namespace hasse {

/// A finitely supported combination of monomials with q-polynomial
/// coefficients. Members of the k-th exterior power of M (or of M_n[q])
/// carry their common arity in grade(); sums of mixed arity are ungraded.
class Element {
public:
    using term_map = std::map<Monomial, QPolynomial>;
    using grade_type = std::optional<std::size_t>;

    Element() = default;
    explicit Element(grade_type grade) : grade_(grade) {}
    explicit Element(const Monomial& m, const QPolynomial& coeff = 1) : grade_(m.arity()) {
        add_term(m, coeff);
    }

    static Element zero(std::size_t grade) { return Element(grade_type{grade}); }

    const term_map& terms() const noexcept { return terms_; }
    grade_type grade() const noexcept { return grade_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    QPolynomial coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? QPolynomial{} : it->second;
    }

    void add_term(const Monomial& m, const QPolynomial& coeff) {
        if (grade_ && *grade_ != m.arity())
            throw std::invalid_argument("term arity " + std::to_string(m.arity()) + " does not match grade " +
                                        std::to_string(*grade_));
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& other) {
        merge_grade(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& other) {
        merge_grade(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }
    Element& operator*=(const QPolynomial& scalar) {
        if (scalar.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= scalar;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= QPolynomial(-1); }
    friend Element operator*(Element a, const QPolynomial& s) { return a *= s; }
    friend Element operator*(const QPolynomial& s, Element a) { return a *= s; }

    /// Equality compares supports and coefficients; grade is metadata.
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    void merge_grade(const Element& other) {
        if (grade_ != other.grade_) grade_.reset();
    }

    term_map terms_;
    grade_type grade_;
};

/// Bilinear extension of wedge_monomials.
inline Element wedge(const Element& x, const Element& y) {
    Element::grade_type grade;
    if (x.grade() && y.grade()) grade = *x.grade() + *y.grade();
    Element out(grade);
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            auto [sign, m] = wedge_monomials(a, b);
            if (sign == 0) continue;
            out.add_term(m, sign > 0 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

}  // namespace hasse
