#include "singline/ring_series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace singline {

namespace {

void require_same_order(const RingSeries& a, const RingSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("RingSeries: order mismatch " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
}

const CohClass& zero_class() {
    static const CohClass zero;
    return zero;
}

}  // namespace

RingSeries::RingSeries(std::size_t order) : coeffs_(order + 1) {}

RingSeries::RingSeries(std::size_t order, std::vector<CohClass> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

RingSeries RingSeries::from_scalars(std::size_t order, const std::vector<Scalar>& coeffs) {
    RingSeries out(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) {
        out.coeffs_[i] = CohClass::constant(coeffs[i]);
    }
    return out;
}

const CohClass& RingSeries::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_class();
}

std::optional<std::size_t> RingSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return i;
        }
    }
    return std::nullopt;
}

RingSeries RingSeries::operator-() const {
    RingSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

RingSeries& RingSeries::operator+=(const RingSeries& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

RingSeries& RingSeries::operator-=(const RingSeries& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

RingSeries operator*(const RingSeries& a, const RingSeries& b) {
    require_same_order(a, b);
    RingSeries out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

RingSeries operator*(const CohClass& c, const RingSeries& a) {
    RingSeries out = a;
    for (auto& x : out.coeffs_) {
        x = c * x;
    }
    return out;
}

RingSeries operator*(const Scalar& c, const RingSeries& a) {
    RingSeries out = a;
    for (auto& x : out.coeffs_) {
        x *= c;
    }
    return out;
}

RingSeries exp(const RingSeries& a) {
    if (!a[0].is_zero()) {
        throw std::domain_error("exp: series must have zero constant term");
    }
    // E = exp(a) satisfies z E' = (z a') E, so n E_n = sum_{i=1..n} i a_i E_{n-i}.
    const std::size_t order = a.order();
    std::vector<CohClass> e(order + 1);
    e[0] = one();
    for (std::size_t n = 1; n <= order; ++n) {
        CohClass acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            acc += Scalar(static_cast<unsigned long>(i)) * (a[i] * e[n - i]);
        }
        e[n] = acc / static_cast<unsigned long>(n);
    }
    return RingSeries(order, std::move(e));
}

}  // namespace singline
