#include "singline/verification.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

#include "singline/characteristic_classes.hpp"
#include "singline/counter.hpp"
#include "singline/oracles.hpp"
#include "singline/sym_powers.hpp"

namespace singline {

namespace {

constexpr std::size_t kMaxMessages = 8;

std::string at(long d, long k) { return "(d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")"; }

SuiteResult named(std::string n) {
    SuiteResult r;
    r.name = std::move(n);
    return r;
}

template <class Body>
void guarded(SuiteResult& r, const std::string& where, Body&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.check(false, where + ": " + e.what());
    }
}

SuiteResult ring_suite(const VerifyOptions& o) {
    SuiteResult r = named("ring");
    const ProductTable& t = *o.table;
    auto m = [&](const CohClass& a, const CohClass& b) { return mul(a, b, t); };

    for (Schubert a : kBasis) {
        const CohClass ca(a);
        r.check(m(one(), ca) == ca && m(ca, one()) == ca, std::string("identity on ") + std::string(name(a)));
        for (Schubert b : kBasis) {
            const CohClass cb(b);
            const CohClass ab = m(ca, cb);
            r.check(ab == m(cb, ca), "commutativity " + std::string(name(a)) + "*" + std::string(name(b)));
            const int deg = degree(a) + degree(b);
            r.check(deg > kTopDegree ? ab.is_zero() : ab.is_homogeneous(deg),
                    "gradedness " + std::string(name(a)) + "*" + std::string(name(b)));
            for (Schubert c : kBasis) {
                const CohClass cc(c);
                r.check(m(ab, cc) == m(ca, m(cb, cc)), "associativity " + std::string(name(a)) + "," +
                                                           std::string(name(b)) + "," + std::string(name(c)));
            }
        }
    }

    const std::array<std::pair<std::pair<Schubert, Schubert>, CohClass>, 5> expected{{
        {{Schubert::S1, Schubert::S1}, s11() + s2()},
        {{Schubert::S1, Schubert::S21}, s22()},
        {{Schubert::S11, Schubert::S11}, s22()},
        {{Schubert::S2, Schubert::S2}, s22()},
        {{Schubert::S11, Schubert::S2}, CohClass()},
    }};
    for (const auto& [pair, value] : expected) {
        r.check(m(CohClass(pair.first), CohClass(pair.second)) == value,
                "pairing " + std::string(name(pair.first)) + "*" + std::string(name(pair.second)));
    }
    return r;
}

SuiteResult table_suite(const VerifyOptions&) {
    SuiteResult r = named("table");
    for (const auto& e : reference_table().entries()) {
        guarded(r, at(e.d, e.k), [&] {
            const auto got = count_via_pipeline(SurfaceQuery(e.d, e.k)).n;
            r.check(got == Integer(std::to_string(e.n)),
                    at(e.d, e.k) + ": got " + got.get_str() + ", table " + std::to_string(e.n));
        });
    }
    return r;
}

SuiteResult closed_form_suite(const VerifyOptions& o) {
    SuiteResult r = named("closed-form");
    for (long d = 1; d <= o.grid_max; ++d) {
        for (long k = 1; k <= d; ++k) {
            guarded(r, at(d, k), [&] {
                const SurfaceQuery q(d, k);
                const ChernCharacter ch = ch_vkd(q);
                r.check(ch == ch_vkd_closedform(q), at(d, k) + ": ch(V) routes differ");
                r.check(power_sums_phi_form(q) == power_sums_from_negated_character(ch),
                        at(d, k) + ": phi-form power sums differ");
                const CountResult c = count_via_pipeline(q);
                r.check(c.n == count_closed_form(q), at(d, k) + ": pipeline N differs from closed form");
                r.check(c.n >= 0, at(d, k) + ": negative N " + c.n.get_str());
            });
        }
    }
    return r;
}

SuiteResult inverse_chern_suite(const VerifyOptions& o) {
    SuiteResult r = named("inverse-chern");
    for (long d = 1; d <= o.grid_max; ++d) {
        for (long k = 1; k <= d; ++k) {
            guarded(r, at(d, k), [&] {
                const ChernCharacter ch = ch_vkd(SurfaceQuery(d, k));
                const TotalChernClass inv =
                    invert_total(lower_chern_from_power_sums(power_sums_from_character(ch)));
                r.check(inv[4] == c4_from_power_sums(power_sums_from_negated_character(ch)),
                        at(d, k) + ": d4 differs from Newton c4 of -[V]");
            });
        }
    }
    return r;
}

SuiteResult sym_suite(const VerifyOptions& o) {
    SuiteResult r = named("sym");
    for (long t = 0; t <= o.sym_max; ++t) {
        guarded(r, "t=" + std::to_string(t), [&] {
            const ChernCharacter direct = ch_sym_direct(t);
            r.check(ch_sym_adams(t) == direct, "t=" + std::to_string(t) + ": Adams route differs");
            r.check(rank(direct) == t + 1, "t=" + std::to_string(t) + ": rank");
        });
    }
    return r;
}

SuiteResult rank_suite(const VerifyOptions& o) {
    SuiteResult r = named("rank");
    for (long d = 1; d <= o.grid_max; ++d) {
        for (long k = 1; k <= d; ++k) {
            guarded(r, at(d, k), [&] {
                const SurfaceQuery q(d, k);
                r.check(rank(ch_vkd(q)) == rank_monomial_oracle(d, k), at(d, k) + ": ch0 vs monomial count");
                r.check(delta(q) == rank_monomial_oracle(d, k) + 3, at(d, k) + ": delta");
            });
        }
    }
    for (long k = 1; k <= o.grid_max; ++k) {
        r.check(delta(SurfaceQuery(k, k)) == k + 4, at(k, k) + ": delta(k,k) = k + 4");
    }
    return r;
}

SuiteResult planes_suite(const VerifyOptions& o) {
    SuiteResult r = named("planes");
    for (long k = 1; k <= o.planes_max; ++k) {
        guarded(r, "k=" + std::to_string(k), [&] {
            const Integer closed = planes_count_closed(k);
            r.check(planes_count_cases(k) == closed, "k=" + std::to_string(k) + ": case sum vs closed");
            if (k >= 2) {
                r.check(count_closed_form(SurfaceQuery(k, k)) == closed,
                        "k=" + std::to_string(k) + ": general formula at d=k");
            }
        });
    }
    return r;
}

SuiteResult localization_suite(const VerifyOptions& o) {
    SuiteResult r = named("localization");
    for (long d = 1; d <= o.localization_max; ++d) {
        for (long k = 1; k <= d; ++k) {
            guarded(r, at(d, k), [&] {
                const Scalar by_torus = count_by_localization(d, k);
                r.check(by_torus == count_by_localization(d, k, {-2, 5, 11, 4}),
                        at(d, k) + ": localization depends on weights");
                r.check(by_torus == Scalar(count_via_pipeline(SurfaceQuery(d, k)).n),
                        at(d, k) + ": pipeline N " + count_via_pipeline(SurfaceQuery(d, k)).n.get_str() +
                            " vs localization " + by_torus.get_str());
            });
        }
    }
    return r;
}

CohClass random_homogeneous(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    CohClass out;
    for (Schubert b : kBasis) {
        if (degree(b) == deg) {
            out += Scalar(coeff(rng)) * CohClass(b);
        }
    }
    return out;
}

SuiteResult newton_suite(const VerifyOptions& o) {
    SuiteResult r = named("newton");
    std::mt19937 rng(o.seed);
    for (unsigned i = 0; i < o.newton_samples; ++i) {
        const PowerSums s({random_homogeneous(rng, 1), random_homogeneous(rng, 2), random_homogeneous(rng, 3),
                           random_homogeneous(rng, 4)});
        const TotalChernClass c = lower_chern_from_power_sums(s);
        const std::string tag = "sample " + std::to_string(i);
        r.check(lower_chern_from_power_sums(-s) == invert_total(c), tag + ": c(-s) != 1/c(s)");
        r.check(c4_from_power_sums(s) == c[4], tag + ": c4 identity disagrees with recursion");
        r.check(c.total() * invert_total(c).total() == one(), tag + ": c * c^-1 != 1");
    }
    return r;
}

using SuiteFn = std::function<SuiteResult(const VerifyOptions&)>;

const std::vector<std::pair<std::string_view, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string_view, SuiteFn>> suites{
        {"ring", ring_suite},       {"table", table_suite},
        {"closed-form", closed_form_suite}, {"inverse-chern", inverse_chern_suite},
        {"sym", sym_suite},         {"rank", rank_suite},
        {"planes", planes_suite},   {"newton", newton_suite},
        {"localization", localization_suite},
    };
    return suites;
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failed;
        if (messages.size() < kMaxMessages) {
            messages.push_back(what);
        }
    }
}

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [n, fn] : registry()) {
            out.push_back(n);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            return fn(options);
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    for (const auto& [n, fn] : registry()) {
        out.push_back(fn(options));
    }
    return out;
}

}  // namespace singline
