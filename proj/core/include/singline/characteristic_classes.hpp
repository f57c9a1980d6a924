#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "singline/schubert.hpp"

namespace singline {

/// A class split into its graded pieces 0..4, piece j homogeneous of degree j.
template <class Tag>
class Graded {
public:
    Graded() = default;

    /// Throws std::invalid_argument if some piece is not homogeneous of its index.
    explicit Graded(std::array<CohClass, kTopDegree + 1> pieces) : pieces_(std::move(pieces)) {
        for (int j = 0; j <= kTopDegree; ++j) {
            if (!pieces_[j].is_homogeneous(j)) {
                throw std::invalid_argument("graded piece " + std::to_string(j) + " is not homogeneous: " +
                                            to_string(pieces_[j]));
            }
        }
    }

    static Graded from_total(const CohClass& c) {
        std::array<CohClass, kTopDegree + 1> pieces;
        for (int j = 0; j <= kTopDegree; ++j) {
            pieces[j] = c.degree_part(j);
        }
        return Graded(std::move(pieces));
    }

    /// Piece of degree j; throws std::out_of_range outside 0..4.
    const CohClass& operator[](int j) const {
        if (j < 0 || j > kTopDegree) {
            throw std::out_of_range("graded piece index " + std::to_string(j) + " outside 0..4");
        }
        return pieces_[j];
    }

    CohClass total() const {
        CohClass out;
        for (const auto& p : pieces_) {
            out += p;
        }
        return out;
    }

    friend bool operator==(const Graded&, const Graded&) = default;

private:
    std::array<CohClass, kTopDegree + 1> pieces_{};
};

struct ChernClassTag;
struct ChernCharacterTag;

/// Total Chern class 1 + c1 + ... + c4. The rank is not recorded here.
using TotalChernClass = Graded<ChernClassTag>;

/// Chern character ch0 + ... + ch4; ch0 is the (virtual) rank times the unit.
using ChernCharacter = Graded<ChernCharacterTag>;

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator*(const Scalar& a, const ChernCharacter& ch);

/// ch is a ring homomorphism: the character of a tensor product.
ChernCharacter operator*(const ChernCharacter& a, const ChernCharacter& b);

/// Integer rank read off ch0; throws std::domain_error if ch0 is not an integer multiple of 1.
Integer rank(const ChernCharacter& ch);

/// Power sums s1..s4 of the Chern roots, s_l homogeneous of degree l.
class PowerSums {
public:
    PowerSums() = default;

    /// Entries are s1..s4 in order; throws std::invalid_argument on a non-homogeneous entry.
    explicit PowerSums(std::array<CohClass, 4> sums);

    /// s_l for l in 1..4; throws std::out_of_range otherwise.
    const CohClass& operator()(int l) const;

    PowerSums operator-() const;

    friend bool operator==(const PowerSums&, const PowerSums&) = default;

private:
    std::array<CohClass, 4> sums_{};
};

TotalChernClass chern_class_of_tau_star();
TotalChernClass chern_class_of_nu();

/// Multiplicative inverse 1 + d1 + ... + d4 in the truncated ring.
/// Throws std::invalid_argument if c0 != 1.
TotalChernClass invert_total(const TotalChernClass& c);

/// s_l = l! ch_l.
PowerSums power_sums_from_character(const ChernCharacter& ch);

/// Power sums of the negated K-class: s_l = -(l! ch_l).
PowerSums power_sums_from_negated_character(const ChernCharacter& ch);

/// c4 = (s1^4 + 8 s3 s1 - 6 s1^2 s2 + 3 s2^2 - 6 s4) / 24.
CohClass c4_from_power_sums(const PowerSums& s);

/// Full total Chern class from power sums via the Newton recursion
/// j c_j = sum_{i=1..j} (-1)^(i-1) c_{j-i} s_i.
TotalChernClass lower_chern_from_power_sums(const PowerSums& s);

}  // namespace singline
