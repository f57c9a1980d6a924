#include "singline/sym_powers.hpp"

#include <stdexcept>
#include <string>

namespace singline {

namespace {

void require_nonnegative(long t, const char* what) {
    if (t < 0) {
        throw std::invalid_argument(std::string(what) + ": negative exponent " + std::to_string(t));
    }
}

}  // namespace

ChernCharacter ch_nu() {
    return ChernCharacter({
        CohClass::constant(2),
        -s1(),
        (s11() - s2()) / 2,
        s21() / 6,
        {},
    });
}

ChernCharacter ch_wedge2_nu() {
    return ChernCharacter({
        one(),
        -s1(),
        (s11() + s2()) / 2,
        -s21() / 3,
        s22() / 12,
    });
}

ChernCharacter ch_sym_direct(long t) {
    require_nonnegative(t, "ch_sym_direct");
    const Scalar c2(choose(t + 1, 2));
    const Scalar c3(choose(t + 1, 3));
    return ChernCharacter({
        CohClass::constant(t + 1),
        -c2 * s1(),
        (c2 / 2 + c3) * s11() - (c2 / 2) * s2(),
        (c2 / 6 + c3 / 2) * s21(),
        (c3 / 12) * s22(),
    });
}

PhiPolynomial::PhiPolynomial(int k) : k_(k) {
    if (k < 0) {
        throw std::invalid_argument("PhiPolynomial: negative index " + std::to_string(k));
    }
    coeffs_ = {0, 1};  // p_0 = z
    for (int step = 0; step < k; ++step) {
        // (z + z^2) d/dz sends a_j z^j to j a_j z^j + j a_j z^(j+1).
        std::vector<Integer> next(coeffs_.size() + 1);
        for (std::size_t j = 1; j < coeffs_.size(); ++j) {
            next[j] += coeffs_[j] * static_cast<unsigned long>(j);
            next[j + 1] += coeffs_[j] * static_cast<unsigned long>(j);
        }
        coeffs_ = std::move(next);
    }
}

Integer PhiPolynomial::coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }

RingSeries phi_series(int k, std::size_t order) {
    if (k < -1) {
        throw std::invalid_argument("phi_series: index " + std::to_string(k) + " below -1");
    }
    if (k == -1) {
        std::vector<Scalar> log_coeffs(order + 1);
        for (std::size_t i = 1; i <= order; ++i) {
            log_coeffs[i] = Scalar(1, static_cast<unsigned long>(i));
        }
        return RingSeries::from_scalars(order, log_coeffs);
    }
    // f = z / (1 - z) = z + z^2 + ...
    std::vector<Scalar> f_coeffs(order + 1, Scalar(1));
    f_coeffs[0] = 0;
    const RingSeries f = RingSeries::from_scalars(order, f_coeffs);

    // Horner evaluation of p_k at f.
    const PhiPolynomial p(k);
    const auto& a = p.coefficients();
    RingSeries acc(order);
    for (std::size_t j = a.size(); j-- > 0;) {
        acc = acc * f;
        if (a[j] != 0) {
            acc += RingSeries::from_scalars(order, {Scalar(a[j])});
        }
    }
    return acc;
}

ChernCharacter ch_sym_adams(long t) {
    require_nonnegative(t, "ch_sym_adams");
    const auto order = static_cast<std::size_t>(t);
    const ChernCharacter ch = ch_nu();

    // sum_j phi_{j-1}(z) ch_j; the j = 0 term is rank * (-ln(1 - z)).
    RingSeries arg(order);
    for (int j = 0; j <= kTopDegree; ++j) {
        if (!ch[j].is_zero()) {
            arg += ch[j] * phi_series(j - 1, order);
        }
    }
    return ChernCharacter::from_total(exp(arg)[order]);
}

}  // namespace singline
