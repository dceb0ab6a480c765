#pragma once

#include <string>
#include <vector>

#include "schubnef/numeric.hpp"

namespace schubnef {

/// Univariate polynomial with exact rational coefficients, stored dense by
/// degree with trailing zeros trimmed. The zero polynomial has no stored
/// coefficients and degree -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rat> coeffs);

    static QPolynomial constant(const Rat& c);
    static QPolynomial variable();  // T

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coefficient(int deg) const;
    Rat leading_coefficient() const;  // 0 for the zero polynomial

    Rat operator()(const Rat& t) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    QPolynomial& operator*=(const Rat& scalar);
    QPolynomial& operator/=(const Rat& scalar);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend QPolynomial operator*(QPolynomial a, const Rat& s) { return a *= s; }
    QPolynomial operator-() const;

    bool operator==(const QPolynomial&) const = default;

    /// Renders over a common denominator, e.g. "(3*T^2 + 3*T + 2)/2", "3*T", "0".
    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace schubnef
