#pragma once

#include <array>
#include <optional>
#include <span>

#include "singline/scalar.hpp"

namespace singline {

/// Number of unions of k planes through a common line passing through k + 4
/// generic points, from the factored closed formula. Throws std::invalid_argument for k < 1.
Integer planes_count_closed(long k);

/// The same count summed over the three ways k + 4 points can fall on k planes:
/// two triples, one triple and two pairs, or four pairs (two transversals each).
Integer planes_count_cases(long k);

/// Brute-force count of monomials x^p y^q z^r t^s of degree d with p + q >= k.
/// Throws std::invalid_argument unless 1 <= k <= d.
long rank_monomial_oracle(long d, long k);

/// N(d, k) by torus localization on Gr(2,4): the sum over the six coordinate
/// lines L of h_4(weights of V_{k,d} at L) / e(T_L Gr), where the fiber at L is
/// spanned by monomials of degree d of order >= k in the two forms cutting out L.
/// Uses neither K-theory nor Chern characters. The result does not depend on
/// the weights, which must be pairwise distinct.
/// Throws std::invalid_argument unless 1 <= k <= d and the weights are distinct.
Scalar count_by_localization(long d, long k, const std::array<long, 4>& weights = {0, 1, 3, 7});

struct TableEntry {
    long d;
    long k;
    long long n;
};

/// Published small values N(d, k) for 1 <= k <= d <= 7, (d, k) != (1, 1).
class ReferenceTable {
public:
    std::span<const TableEntry> entries() const;
    std::optional<long long> lookup(long d, long k) const;
};

const ReferenceTable& reference_table();

}  // namespace singline
