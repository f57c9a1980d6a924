#include "singline/schubert.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace singline {

std::string_view name(Schubert b) noexcept {
    switch (b) {
        case Schubert::One: return "1";
        case Schubert::S1: return "s1";
        case Schubert::S11: return "s11";
        case Schubert::S2: return "s2";
        case Schubert::S21: return "s21";
        case Schubert::S22: return "s22";
    }
    return "?";
}

namespace {

ProductTable::Row unit_row(Schubert b) {
    ProductTable::Row row{};
    row[index(b)] = 1;
    return row;
}

ProductTable make_standard_table() {
    using enum Schubert;
    ProductTable t;
    for (Schubert b : kBasis) {
        t.set_product(One, b, unit_row(b));
    }
    ProductTable::Row s1s1{};
    s1s1[index(S11)] = 1;
    s1s1[index(S2)] = 1;
    t.set_product(S1, S1, s1s1);
    t.set_product(S1, S11, unit_row(S21));
    t.set_product(S1, S2, unit_row(S21));
    t.set_product(S1, S21, unit_row(S22));
    t.set_product(S11, S11, unit_row(S22));
    t.set_product(S2, S2, unit_row(S22));
    t.set_product(S11, S2, ProductTable::Row{});
    // Every other product lands above degree 4 and stays zero.
    return t;
}

}  // namespace

const ProductTable& ProductTable::standard() {
    static const ProductTable table = make_standard_table();
    return table;
}

void ProductTable::set_product(Schubert a, Schubert b, const Row& row) {
    rows_[index(a)][index(b)] = row;
    rows_[index(b)][index(a)] = row;
}

CohClass::CohClass(Schubert b, Scalar c) { coeffs_[index(b)] = std::move(c); }

CohClass::CohClass(std::initializer_list<std::pair<Schubert, Scalar>> terms) {
    for (const auto& [b, c] : terms) {
        coeffs_[index(b)] += c;
    }
}

CohClass CohClass::degree_part(int j) const {
    if (j < 0 || j > kTopDegree) {
        throw std::out_of_range("degree_part: degree " + std::to_string(j) + " outside 0..4");
    }
    CohClass out;
    for (Schubert b : kBasis) {
        if (degree(b) == j) {
            out.coeffs_[index(b)] = coeffs_[index(b)];
        }
    }
    return out;
}

bool CohClass::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CohClass::is_homogeneous(int j) const {
    for (Schubert b : kBasis) {
        if (degree(b) != j && coeffs_[index(b)] != 0) {
            return false;
        }
    }
    return true;
}

CohClass CohClass::operator-() const {
    CohClass out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CohClass& CohClass::operator+=(const CohClass& other) {
    for (std::size_t i = 0; i < kBasisSize; ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
    for (std::size_t i = 0; i < kBasisSize; ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

CohClass& CohClass::operator*=(const Scalar& a) {
    for (auto& c : coeffs_) {
        c *= a;
    }
    return *this;
}

CohClass operator/(CohClass p, const Scalar& a) {
    if (a == 0) {
        throw std::domain_error("CohClass: division by zero");
    }
    for (auto& c : p.coeffs_) {
        c /= a;
    }
    return p;
}

CohClass operator*(const CohClass& p, const CohClass& q) { return mul(p, q); }

CohClass add(const CohClass& p, const CohClass& q) { return p + q; }

CohClass scale(const Scalar& a, const CohClass& p) { return a * p; }

CohClass mul(const CohClass& p, const CohClass& q, const ProductTable& table) {
    CohClass out;
    Scalar term;
    for (Schubert a : kBasis) {
        const Scalar& pa = p.coefficient(a);
        if (pa == 0) {
            continue;
        }
        for (Schubert b : kBasis) {
            const Scalar& qb = q.coefficient(b);
            if (qb == 0) {
                continue;
            }
            term = pa * qb;
            const auto& row = table.product(a, b);
            for (Schubert c : kBasis) {
                if (int k = row[index(c)]; k != 0) {
                    out.coeffs_[index(c)] += term * k;
                }
            }
        }
    }
    return out;
}

CohClass pow(const CohClass& p, unsigned n) {
    CohClass out = one();
    for (unsigned i = 0; i < n; ++i) {
        out = out * p;
    }
    return out;
}

std::string to_string(const CohClass& p) {
    std::ostringstream os;
    bool first = true;
    for (Schubert b : kBasis) {
        Scalar c = p.coefficient(b);
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (b == Schubert::One) {
            os << c.get_str();
        } else {
            if (c != 1) {
                os << c.get_str() << " ";
            }
            os << name(b);
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CohClass& p) { return os << to_string(p); }

}  // namespace singline
