#include "schubnef/qpolynomial.hpp"

#include <stdexcept>

namespace schubnef {

QPolynomial::QPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const Rat& c) { return QPolynomial(std::vector<Rat>{c}); }

QPolynomial QPolynomial::variable() { return QPolynomial(std::vector<Rat>{0, 1}); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPolynomial::coefficient(int deg) const {
    if (deg < 0 || deg > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(deg)];
}

Rat QPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat QPolynomial::operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const Rat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator/=(const Rat& scalar) {
    if (scalar == 0) throw std::invalid_argument("QPolynomial: division by zero");
    for (auto& c : coeffs_) c /= scalar;
    return *this;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial neg(*this);
    for (auto& c : neg.coeffs_) c = -c;
    return neg;
}

std::string QPolynomial::to_string(const std::string& var) const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::lcm;
    if (coeffs_.empty()) return "0";

    Int den = 1;
    for (const auto& c : coeffs_) den = lcm(den, denominator(c));

    std::string body;
    for (int d = degree(); d >= 0; --d) {
        const Rat c = coefficient(d);
        if (c == 0) continue;
        Int scaled = numerator(c) * (den / denominator(c));
        if (body.empty()) {
            if (scaled < 0) body += "-";
        } else {
            body += scaled < 0 ? " - " : " + ";
        }
        Int mag = abs(scaled);
        if (d == 0) {
            body += mag.str();
        } else {
            if (mag != 1) body += mag.str() + "*";
            body += var;
            if (d > 1) body += "^" + std::to_string(d);
        }
    }
    if (den == 1) return body;
    return "(" + body + ")/" + den.str();
}

}  // namespace schubnef
