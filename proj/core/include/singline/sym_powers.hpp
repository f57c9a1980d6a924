#pragma once

#include <cstddef>
#include <vector>

#include "singline/characteristic_classes.hpp"
#include "singline/ring_series.hpp"

namespace singline {

/// ch(nu) = 2 - s1 + (s11 - s2)/2 + s21/6, where nu = (O^4 / tau)^*.
ChernCharacter ch_nu();

/// ch(wedge^2 nu) = exp(-s1).
ChernCharacter ch_wedge2_nu();

/// ch(Sym^t nu) from the closed binomial formula. Throws std::invalid_argument for t < 0.
ChernCharacter ch_sym_direct(long t);

/// The polynomial p_k(z) = ((z + z^2) d/dz)^k z, so that
/// sum_i i^k z^i = p_k(z / (1 - z)).
class PhiPolynomial {
public:
    /// Throws std::invalid_argument for k < 0.
    explicit PhiPolynomial(int k);

    int k() const { return k_; }

    /// Coefficient of z^j; zero outside 1..k+1.
    Integer coefficient(std::size_t j) const;

    const std::vector<Integer>& coefficients() const { return coeffs_; }

private:
    int k_;
    std::vector<Integer> coeffs_;  // coeffs_[j] multiplies z^j
};

/// phi_k(z) = sum_{i>=1} i^k z^i truncated at `order`, as a scalar-valued series.
/// phi_{-1} is -ln(1 - z); for k >= 0 the series is p_k evaluated at z/(1 - z).
/// Throws std::invalid_argument for k < -1.
RingSeries phi_series(int k, std::size_t order);

/// ch(Sym^t nu) as the z^t coefficient of exp(sum_j phi_{j-1}(z) ch_j(nu)),
/// the Adams-operation generating function. Throws std::invalid_argument for t < 0.
ChernCharacter ch_sym_adams(long t);

}  // namespace singline
