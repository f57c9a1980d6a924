#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "singline/scalar.hpp"

namespace singline {

/// Schubert basis of H*(Gr(2,4); Q). Degrees are complex codimensions.
enum class Schubert : std::uint8_t { One, S1, S11, S2, S21, S22 };

inline constexpr std::size_t kBasisSize = 6;
inline constexpr int kTopDegree = 4;

inline constexpr std::array<Schubert, kBasisSize> kBasis{
    Schubert::One, Schubert::S1, Schubert::S11, Schubert::S2, Schubert::S21, Schubert::S22};

constexpr std::size_t index(Schubert b) noexcept { return static_cast<std::size_t>(b); }

constexpr int degree(Schubert b) noexcept {
    constexpr std::array<int, kBasisSize> degrees{0, 1, 2, 2, 3, 4};
    return degrees[index(b)];
}

std::string_view name(Schubert b) noexcept;

/// Integer structure constants of the Schubert basis.
///
/// `standard()` is the ring actually used everywhere; a modified copy exists
/// only so verification can be pointed at a broken table and shown to fail.
class ProductTable {
public:
    using Row = std::array<int, kBasisSize>;

    static const ProductTable& standard();

    const Row& product(Schubert a, Schubert b) const { return rows_[index(a)][index(b)]; }

    /// Overwrites a*b and b*a.
    void set_product(Schubert a, Schubert b, const Row& row);

private:
    std::array<std::array<Row, kBasisSize>, kBasisSize> rows_{};
};

/// An element of H*(Gr(2,4); Q) in Schubert coordinates.
///
/// Stored densely: six coefficients, zero meaning absent. Values are
/// immutable once built; arithmetic returns new classes.
class CohClass {
public:
    CohClass() = default;
    CohClass(Schubert b, Scalar c = 1);
    CohClass(std::initializer_list<std::pair<Schubert, Scalar>> terms);

    /// c times the unit class.
    static CohClass constant(const Scalar& c) { return CohClass(Schubert::One, c); }

    const Scalar& coefficient(Schubert b) const { return coeffs_[index(b)]; }

    /// Projection onto basis elements of degree j; throws std::out_of_range unless 0 <= j <= 4.
    CohClass degree_part(int j) const;

    bool is_zero() const;

    /// True iff every nonzero coefficient sits in degree j. The zero class is homogeneous of every degree.
    bool is_homogeneous(int j) const;

    CohClass operator-() const;
    CohClass& operator+=(const CohClass& other);
    CohClass& operator-=(const CohClass& other);
    CohClass& operator*=(const Scalar& a);

    friend CohClass operator+(CohClass p, const CohClass& q) { return p += q; }
    friend CohClass operator-(CohClass p, const CohClass& q) { return p -= q; }
    friend CohClass operator*(const Scalar& a, CohClass p) { return p *= a; }
    friend CohClass operator*(CohClass p, const Scalar& a) { return p *= a; }
    /// Throws std::domain_error on division by zero.
    friend CohClass operator/(CohClass p, const Scalar& a);
    friend CohClass operator*(const CohClass& p, const CohClass& q);
    friend CohClass mul(const CohClass& p, const CohClass& q, const ProductTable& table);

    friend bool operator==(const CohClass& p, const CohClass& q) { return p.coeffs_ == q.coeffs_; }

private:
    std::array<Scalar, kBasisSize> coeffs_{};
};

CohClass add(const CohClass& p, const CohClass& q);
CohClass scale(const Scalar& a, const CohClass& p);

/// Ring product truncated above degree 4, using the given structure constants.
CohClass mul(const CohClass& p, const CohClass& q, const ProductTable& table = ProductTable::standard());

CohClass pow(const CohClass& p, unsigned n);

inline const Scalar& coefficient_of(const CohClass& p, Schubert b) { return p.coefficient(b); }
inline CohClass degree_component(const CohClass& p, int j) { return p.degree_part(j); }

/// Human-readable form such as "2 - s1 + 1/2 s11 - 1/2 s2 + 1/6 s21".
std::string to_string(const CohClass& p);
std::ostream& operator<<(std::ostream& os, const CohClass& p);

// Shorthand for the basis classes.
inline CohClass one() { return CohClass(Schubert::One); }
inline CohClass s1() { return CohClass(Schubert::S1); }
inline CohClass s11() { return CohClass(Schubert::S11); }
inline CohClass s2() { return CohClass(Schubert::S2); }
inline CohClass s21() { return CohClass(Schubert::S21); }
inline CohClass s22() { return CohClass(Schubert::S22); }

}  // namespace singline
