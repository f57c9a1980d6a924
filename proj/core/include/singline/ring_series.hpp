#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singline/schubert.hpp"

namespace singline {

/// Truncated power series sum_{i<=order} a_i z^i with coefficients in H*(Gr(2,4); Q).
///
/// Binary operations require equal orders and throw std::invalid_argument otherwise.
class RingSeries {
public:
    explicit RingSeries(std::size_t order);

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    RingSeries(std::size_t order, std::vector<CohClass> coeffs);

    /// Scalar-valued series from rational coefficients.
    static RingSeries from_scalars(std::size_t order, const std::vector<Scalar>& coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of z^i; zero past the truncation order.
    const CohClass& operator[](std::size_t i) const;

    /// Index of the first nonzero coefficient; empty for the zero series.
    std::optional<std::size_t> valuation() const;

    RingSeries operator-() const;
    RingSeries& operator+=(const RingSeries& other);
    RingSeries& operator-=(const RingSeries& other);

    friend RingSeries operator+(RingSeries a, const RingSeries& b) { return a += b; }
    friend RingSeries operator-(RingSeries a, const RingSeries& b) { return a -= b; }
    friend RingSeries operator*(const RingSeries& a, const RingSeries& b);

    /// Multiplies every coefficient by a fixed class.
    friend RingSeries operator*(const CohClass& c, const RingSeries& a);
    friend RingSeries operator*(const Scalar& c, const RingSeries& a);

    friend bool operator==(const RingSeries&, const RingSeries&) = default;

private:
    std::vector<CohClass> coeffs_;
};

/// exp(a) truncated at a's order. Requires a_0 = 0; throws std::domain_error otherwise.
RingSeries exp(const RingSeries& a);

}  // namespace singline
