#include "singline/counter.hpp"

#include "singline/sym_powers.hpp"

namespace singline {

namespace {

long to_long(const Integer& x, const char* what) {
    if (!x.fits_slong_p()) {
        throw DomainError(std::string(what) + " does not fit in a machine integer");
    }
    return x.get_si();
}

Integer require_integer(const Scalar& x, const char* what) {
    if (!is_integral(x)) {
        throw InternalInconsistency(std::string(what) + " is not an integer: " + x.get_str());
    }
    return x.get_num();
}

}  // namespace

SurfaceQuery::SurfaceQuery(long d, long k) : d_(d), k_(k) {
    if (k < 1) {
        throw DomainError("invalid query (d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                          "): constraint k >= 1 violated");
    }
    if (d < k) {
        throw DomainError("invalid query (d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                          "): constraint d >= k violated");
    }
}

std::string_view warning_code(Warning w) {
    switch (w) {
        case Warning::InfiniteLinesD2K1: return "INFINITE_LINES_D2K1";
        case Warning::NonuniqueLineD3K1: return "NONUNIQUE_LINE_D3K1";
    }
    return "UNKNOWN";
}

std::string warning_text(Warning w) {
    switch (w) {
        case Warning::InfiniteLinesD2K1:
            return "INFINITE_LINES_D2K1: every quadric surface contains infinitely many lines; "
                   "N is the formal intersection number, not an enumerative count";
        case Warning::NonuniqueLineD3K1:
            return "NONUNIQUE_LINE_D3K1: every smooth cubic surface contains 27 lines, so N counts "
                   "(surface, line) pairs; divide by 27 for distinct surfaces (27 / 27 = 1 surface)";
    }
    return "UNKNOWN";
}

std::vector<Warning> warnings_for(const SurfaceQuery& q) {
    if (q.d() == 2 && q.k() == 1) {
        return {Warning::InfiniteLinesD2K1};
    }
    if (q.d() == 3 && q.k() == 1) {
        return {Warning::NonuniqueLineD3K1};
    }
    return {};
}

Scalar phi(const SurfaceQuery& q) {
    const Integer u = q.u();
    const Integer k = q.k();
    Scalar out((u + 2) * (u + 1) * (k + 1) * k);
    return out / 12;
}

ChernCharacter ch_vkd(const SurfaceQuery& q) {
    const Scalar forms(choose(q.u() + 3, 3));
    const Scalar syzygies(choose(q.u() + 2, 3));
    return forms * ch_sym_direct(q.k()) - syzygies * (ch_wedge2_nu() * ch_sym_direct(q.k() - 1));
}

ChernCharacter ch_vkd_closedform(const SurfaceQuery& q) {
    const long u = q.u();
    const long k = q.k();
    const Scalar u33(choose(u + 3, 3));
    const Scalar u22(choose(u + 2, 2));
    const Scalar u23(choose(u + 2, 3));
    const Scalar k12(choose(k + 1, 2));
    const Scalar k13(choose(k + 1, 3));
    const Scalar k23(choose(k + 2, 3));

    return ChernCharacter({
        CohClass::constant(u33 + k * u22),
        -(u22 * k12) * s1(),
        (u22 * (k12 / 2 + k13)) * s11() - ((u33 + u23) * k12 / 2) * s2(),
        ((u33 + 2 * u23) * k12 / 6 + u22 * k13 / 2) * s21(),
        ((u33 * k13 - u23 * k23) / 12) * s22(),
    });
}

long rank_vkd(const SurfaceQuery& q) {
    const Integer r = choose(q.u() + 3, 3) + q.k() * choose(q.u() + 2, 2);
    return to_long(r, "rank");
}

long delta(const SurfaceQuery& q) { return rank_vkd(q) + 3; }

PowerSums power_sums_phi_form(const SurfaceQuery& q) {
    const Scalar f = phi(q);
    const long u = q.u();
    const long k = q.k();
    return PowerSums({
        3 * f * s1(),
        f * (Scalar(2 * u + 3) * s2() - Scalar(2 * k + 1) * s11()),
        -3 * f * Scalar(u + k) * s21(),
        2 * f * Scalar(u - k + 1) * s22(),
    });
}

CountResult count_via_pipeline(const SurfaceQuery& q) {
    const ChernCharacter ch = ch_vkd(q);

    // c(-V) = 1 / c(V): its top piece by Newton on the negated class ...
    const CohClass c4_negated = c4_from_power_sums(power_sums_from_negated_character(ch));
    // ... and by inverting the total Chern class of V itself.
    const TotalChernClass inverse = invert_total(lower_chern_from_power_sums(power_sums_from_character(ch)));

    if (inverse[4] != c4_negated) {
        throw InternalInconsistency("d=" + std::to_string(q.d()) + " k=" + std::to_string(q.k()) +
                                    ": inverse Chern class gives " + to_string(inverse[4]) +
                                    " but Newton identity gives " + to_string(c4_negated));
    }

    CountResult out;
    out.n = require_integer(inverse[4].coefficient(Schubert::S22), "N");
    const Integer r = rank(ch);
    out.rank = to_long(r, "rank");
    out.delta = out.rank + 3;
    out.phi = phi(q);
    out.warnings = warnings_for(q);
    return out;
}

Integer count_closed_form(const SurfaceQuery& q) {
    const Scalar f = phi(q);
    const Scalar u(q.u());
    const Scalar k(q.k());
    const Scalar bracket = (3 * f) * (3 * f) * (3 * f) - 2 * (9 * f * f + 1) * (u - k + 1) +
                           f * (2 * u * u + 2 * k * k - 6 * u - 10 * k + 5);
    return require_integer(f / 4 * bracket, "closed-form N");
}

}  // namespace singline
