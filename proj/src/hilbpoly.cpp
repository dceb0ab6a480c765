#include "schubnef/hilbpoly.hpp"

#include <stdexcept>

#include "schubnef/combinat.hpp"

namespace schubnef {

QPolynomial binomial_polynomial(int shift, int m) {
    if (m < 0) throw std::invalid_argument("binomial_polynomial: m must be nonnegative");
    QPolynomial poly = QPolynomial::constant(1);
    for (int i = 0; i < m; ++i)
        poly *= QPolynomial(std::vector<Rat>{Rat(shift - i), 1});  // T + shift - i
    poly /= Rat(factorial(m));
    return poly;
}

QPolynomial hilb_poly(int d, int m) {
    if (d < 1) throw std::invalid_argument("hilb_poly: d must be positive");
    if (m < 1) throw std::invalid_argument("hilb_poly: m must be positive");
    return binomial_polynomial(m, m) - binomial_polynomial(m - d, m);
}

namespace {

// Walks every exponent vector (e_0, ..., e_vars-1) with sum `degree`.
Int count_monomials(int vars, int degree) {
    if (degree < 0) return 0;
    if (vars == 1) return 1;  // last exponent is forced
    Int total = 0;
    for (int e = 0; e <= degree; ++e) total += count_monomials(vars - 1, degree - e);
    return total;
}

}  // namespace

Int hilbert_function_oracle(int d, int m, int T) {
    if (d < 1 || m < 1 || T < 0)
        throw std::invalid_argument("hilbert_function_oracle: need d, m >= 1 and T >= 0");
    Int count = count_monomials(m + 1, T);
    if (T >= d) count -= count_monomials(m + 1, T - d);
    return count;
}

Int fiber_dimension(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("fiber_dimension: need d, m >= 1");
    return binom_comb(m + d, d) - 1;
}

Int through_point_dimension(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("through_point_dimension: need d, m >= 1");
    return binom_comb(m + d, d) - 2;
}

}  // namespace schubnef
