#include "singline/oracles.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace singline {

namespace {

void require_positive(long k, const char* what) {
    if (k < 1) {
        throw std::invalid_argument(std::string(what) + ": k must be >= 1, got " + std::to_string(k));
    }
}

/// n (n-1) ... (n-len+1); zero as soon as a factor is zero.
Integer falling(long n, long len) {
    Integer out = 1;
    for (long i = 0; i < len; ++i) {
        out *= n - i;
    }
    return out;
}

Integer exact_div(const Integer& num, const Integer& den) {
    if (num % den != 0) {
        throw std::logic_error("non-integral plane count " + num.get_str() + " / " + den.get_str());
    }
    return num / den;
}

constexpr std::array<TableEntry, 27> kTable{{
    {2, 1, 0},       {2, 2, 10},
    {3, 1, 27},      {3, 2, 522},      {3, 3, 175},
    {4, 1, 320},     {4, 2, 7674},     {4, 3, 9624},     {4, 4, 1330},
    {5, 1, 1990},    {5, 2, 58315},    {5, 3, 139572},   {5, 4, 76335},   {5, 5, 6510},
    {6, 1, 8680},    {6, 2, 296190},   {6, 3, 1043290},  {6, 4, 1115310}, {6, 5, 387360},
    {6, 6, 24150},
    {7, 1, 29960},   {7, 2, 1147440},  {7, 3, 5224695},  {7, 4, 8332500}, {7, 5, 5710755},
    {7, 6, 1480920}, {7, 7, 73920},
}};

}  // namespace

Integer planes_count_closed(long k) {
    require_positive(k, "planes_count_closed");
    const Integer num = falling(k + 4, 6) * (3 * Integer(k) * k - 3 * k + 2);
    return exact_div(num, 24 * 24);
}

Integer planes_count_cases(long k) {
    require_positive(k, "planes_count_cases");
    // (k+4)! / (k-j)! is the falling factorial of length 4 + j; it vanishes
    // exactly when there are too few points for the configuration.
    const Integer two_triples = exact_div(falling(k + 4, 6), 6 * 6 * 2);
    const Integer triple_two_pairs = exact_div(falling(k + 4, 7), 6 * 8);
    const Integer four_pairs = exact_div(falling(k + 4, 8), 24 * 8);
    return two_triples + triple_two_pairs + four_pairs;
}

long rank_monomial_oracle(long d, long k) {
    if (k < 1 || d < k) {
        throw std::invalid_argument("rank_monomial_oracle: need 1 <= k <= d, got d=" + std::to_string(d) +
                                    " k=" + std::to_string(k));
    }
    long count = 0;
    for (long p = 0; p <= d; ++p) {
        for (long q = 0; p + q <= d; ++q) {
            for (long r = 0; p + q + r <= d; ++r) {
                // s = d - p - q - r is forced.
                if (p + q >= k) {
                    ++count;
                }
            }
        }
    }
    return count;
}

Scalar count_by_localization(long d, long k, const std::array<long, 4>& weights) {
    if (k < 1 || d < k) {
        throw std::invalid_argument("count_by_localization: need 1 <= k <= d, got d=" + std::to_string(d) +
                                    " k=" + std::to_string(k));
    }
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (weights[a] == weights[b]) {
                throw std::invalid_argument("count_by_localization: weights must be distinct");
            }
        }
    }

    Scalar total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            // The two coordinates not on the line {x_i, x_j} span cut it out.
            std::array<std::size_t, 2> normal{};
            std::size_t n = 0;
            for (std::size_t a = 0; a < 4; ++a) {
                if (a != i && a != j) {
                    normal[n++] = a;
                }
            }

            // Power sums p_1..p_4 of the fiber weights -sum m_a w_a.
            std::array<Integer, 5> p{};
            std::array<long, 4> m{};
            for (m[0] = 0; m[0] <= d; ++m[0]) {
                for (m[1] = 0; m[0] + m[1] <= d; ++m[1]) {
                    for (m[2] = 0; m[0] + m[1] + m[2] <= d; ++m[2]) {
                        m[3] = d - m[0] - m[1] - m[2];
                        if (m[normal[0]] + m[normal[1]] < k) {
                            continue;
                        }
                        long w = 0;
                        for (std::size_t a = 0; a < 4; ++a) {
                            w -= m[a] * weights[a];
                        }
                        Integer power = 1;
                        for (int e = 1; e <= 4; ++e) {
                            power *= w;
                            p[e] += power;
                        }
                    }
                }
            }
            // Complete homogeneous h_4, i.e. c_4 of the negated class.
            const Integer h4_times_24 =
                p[1] * p[1] * p[1] * p[1] + 6 * p[1] * p[1] * p[2] + 3 * p[2] * p[2] + 8 * p[1] * p[3] + 6 * p[4];

            // Tangent weights Hom(L, C^4 / L).
            Integer euler = 1;
            for (std::size_t a : {i, j}) {
                for (std::size_t b : normal) {
                    euler *= weights[b] - weights[a];
                }
            }
            total += Scalar(h4_times_24) / Scalar(24 * euler);
        }
    }
    return total;
}

std::span<const TableEntry> ReferenceTable::entries() const { return kTable; }

std::optional<long long> ReferenceTable::lookup(long d, long k) const {
    for (const auto& e : kTable) {
        if (e.d == d && e.k == k) {
            return e.n;
        }
    }
    return std::nullopt;
}

const ReferenceTable& reference_table() {
    static const ReferenceTable table;
    return table;
}

}  // namespace singline
