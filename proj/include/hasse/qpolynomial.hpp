#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "integer.hpp"

namespace hasse {

/// A polynomial in the formal variable q with exact integer coefficients.
/// Stored sparsely; zero coefficients are never kept, so the zero
/// polynomial has empty support and equality is structural.
class QPolynomial {
public:
    using degree_type = unsigned;
    using coeff_map = std::map<degree_type, Integer>;

    QPolynomial() = default;
    QPolynomial(int constant) : QPolynomial(Integer(constant)) {}
    QPolynomial(const Integer& constant) {
        if (constant != 0) coeffs_.emplace(0u, constant);
    }

    static QPolynomial monomial(degree_type degree, const Integer& coeff = 1) {
        QPolynomial p;
        if (coeff != 0) p.coeffs_.emplace(degree, coeff);
        return p;
    }
    static QPolynomial q() { return monomial(1); }

    const coeff_map& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    /// Highest q-degree present; 0 for the zero polynomial.
    degree_type degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Integer coefficient(degree_type degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    /// Value at q = 0.
    Integer constant_term() const { return coefficient(0); }

    /// Substitutes q -> scale * q.
    QPolynomial rescale_q(const Integer& scale) const {
        QPolynomial out;
        Integer power = 1;
        degree_type reached = 0;
        for (const auto& [deg, c] : coeffs_) {
            while (reached < deg) {
                power *= scale;
                ++reached;
            }
            out.add(deg, c * power);
        }
        return out;
    }

    void add(degree_type degree, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(degree, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    QPolynomial& operator+=(const QPolynomial& other) {
        for (const auto& [deg, c] : other.coeffs_) add(deg, c);
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& other) {
        for (const auto& [deg, c] : other.coeffs_) add(deg, -c);
        return *this;
    }
    QPolynomial& operator*=(const QPolynomial& other) {
        *this = *this * other;
        return *this;
    }

    friend QPolynomial operator-(QPolynomial p) {
        for (auto& [deg, c] : p.coeffs_) c = -c;
        return p;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
        return out;
    }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    coeff_map coeffs_;
};

}  // namespace hasse
