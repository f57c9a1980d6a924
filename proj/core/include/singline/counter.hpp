#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singline/characteristic_classes.hpp"

namespace singline {

/// Raised for (d, k) outside 1 <= k <= d.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations of the same quantity disagreed, or a count came out non-integral.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Degree-d surfaces in P^3 with multiplicity k along a line; u = d - k.
class SurfaceQuery {
public:
    /// Throws DomainError unless k >= 1 and d >= k.
    SurfaceQuery(long d, long k);

    long d() const { return d_; }
    long k() const { return k_; }
    long u() const { return d_ - k_; }

    friend bool operator==(const SurfaceQuery&, const SurfaceQuery&) = default;

private:
    long d_;
    long k_;
};

enum class Warning {
    InfiniteLinesD2K1,
    NonuniqueLineD3K1,
};

std::string_view warning_code(Warning w);
std::string warning_text(Warning w);
std::vector<Warning> warnings_for(const SurfaceQuery& q);

struct CountResult {
    Integer n;
    long delta = 0;
    long rank = 0;
    Scalar phi;
    std::vector<Warning> warnings;
};

/// phi = (u + 2)(u + 1)(k + 1)k / 12.
Scalar phi(const SurfaceQuery& q);

/// ch(V_{k,d}) = C(u+3,3) ch(Sym^k nu) - C(u+2,3) ch(wedge^2 nu) ch(Sym^(k-1) nu).
ChernCharacter ch_vkd(const SurfaceQuery& q);

/// The same character from its five coefficient formulas, without going through Sym^t.
ChernCharacter ch_vkd_closedform(const SurfaceQuery& q);

/// Rank of V_{k,d}, i.e. ch0.
long rank_vkd(const SurfaceQuery& q);

/// Number of generic points imposed: rank + 3.
long delta(const SurfaceQuery& q);

/// Power sums of -[V_{k,d}] written in terms of phi.
PowerSums power_sums_phi_form(const SurfaceQuery& q);

/// Full intersection-theoretic count. N is the s22 coefficient of d4, the top
/// piece of 1 / c(V_{k,d}); it is computed both by inverting the total Chern
/// class and by the Newton identity for c4 of -[V_{k,d}], and the two must agree.
/// Throws InternalInconsistency if they do not, or if N is not an integer.
CountResult count_via_pipeline(const SurfaceQuery& q);

/// N = (phi/4) [ (3 phi)^3 - 2 (9 phi^2 + 1)(u - k + 1) + phi (2u^2 + 2k^2 - 6u - 10k + 5) ].
Integer count_closed_form(const SurfaceQuery& q);

}  // namespace singline
