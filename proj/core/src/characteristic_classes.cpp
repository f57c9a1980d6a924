#include "singline/characteristic_classes.hpp"

#include <utility>

namespace singline {

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return ChernCharacter::from_total(a.total() + b.total());
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
    return ChernCharacter::from_total(a.total() - b.total());
}

ChernCharacter operator*(const Scalar& a, const ChernCharacter& ch) {
    return ChernCharacter::from_total(a * ch.total());
}

ChernCharacter operator*(const ChernCharacter& a, const ChernCharacter& b) {
    return ChernCharacter::from_total(a.total() * b.total());
}

Integer rank(const ChernCharacter& ch) {
    const Scalar& r = ch[0].coefficient(Schubert::One);
    if (!is_integral(r)) {
        throw std::domain_error("rank: ch0 = " + r.get_str() + " is not an integer");
    }
    return r.get_num();
}

PowerSums::PowerSums(std::array<CohClass, 4> sums) : sums_(std::move(sums)) {
    for (int l = 1; l <= 4; ++l) {
        if (!sums_[l - 1].is_homogeneous(l)) {
            throw std::invalid_argument("power sum s" + std::to_string(l) +
                                        " is not homogeneous: " + to_string(sums_[l - 1]));
        }
    }
}

const CohClass& PowerSums::operator()(int l) const {
    if (l < 1 || l > 4) {
        throw std::out_of_range("power sum index " + std::to_string(l) + " outside 1..4");
    }
    return sums_[l - 1];
}

PowerSums PowerSums::operator-() const {
    PowerSums out = *this;
    for (auto& s : out.sums_) {
        s = -s;
    }
    return out;
}

TotalChernClass chern_class_of_tau_star() { return TotalChernClass({one(), s1(), s11(), {}, {}}); }

TotalChernClass chern_class_of_nu() { return TotalChernClass({one(), -s1(), s2(), {}, {}}); }

TotalChernClass invert_total(const TotalChernClass& c) {
    if (c[0] != one()) {
        throw std::invalid_argument("invert_total: constant term must be 1, got " + to_string(c[0]));
    }
    // Degree j of c * d = 1 gives d_j = -sum_{i=1..j} c_i d_{j-i}.
    std::array<CohClass, kTopDegree + 1> d;
    d[0] = one();
    for (int j = 1; j <= kTopDegree; ++j) {
        CohClass acc;
        for (int i = 1; i <= j; ++i) {
            acc += c[i] * d[j - i];
        }
        d[j] = -acc;
    }
    return TotalChernClass(std::move(d));
}

PowerSums power_sums_from_character(const ChernCharacter& ch) {
    std::array<CohClass, 4> s;
    for (int l = 1; l <= 4; ++l) {
        s[l - 1] = Scalar(factorial(l)) * ch[l];
    }
    return PowerSums(std::move(s));
}

PowerSums power_sums_from_negated_character(const ChernCharacter& ch) {
    return -power_sums_from_character(ch);
}

CohClass c4_from_power_sums(const PowerSums& s) {
    const CohClass& s1 = s(1);
    const CohClass& s2 = s(2);
    const CohClass& s3 = s(3);
    const CohClass& s4 = s(4);
    const CohClass s1sq = s1 * s1;
    CohClass num = s1sq * s1sq;
    num += Scalar(8) * (s3 * s1);
    num -= Scalar(6) * (s1sq * s2);
    num += Scalar(3) * (s2 * s2);
    num -= Scalar(6) * s4;
    return num / 24;
}

TotalChernClass lower_chern_from_power_sums(const PowerSums& s) {
    std::array<CohClass, kTopDegree + 1> c;
    c[0] = one();
    for (int j = 1; j <= kTopDegree; ++j) {
        CohClass acc;
        for (int i = 1; i <= j; ++i) {
            CohClass term = c[j - i] * s(i);
            if (i % 2 == 0) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        c[j] = acc / j;
    }
    return TotalChernClass(std::move(c));
}

}  // namespace singline
