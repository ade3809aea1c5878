// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria cover exact five-route count agreement with runtime caps,
// anchored count values, the reflection-sum and fixator-multiplicity
// identities, closed forms and irreducibility of the exterior-power rows,
// table orthogonality, structural degree identities, and fault-injection
// sensitivity of the verification battery.

#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "crg/catalog.hpp"
#include "crg/characters.hpp"
#include "crg/counting.hpp"
#include "crg/errors.hpp"
#include "crg/numutil.hpp"
#include "crg/verify.hpp"

using crg::CharacterTable;
using crg::CountMethod;
using crg::Cyclotomic;
using crg::GradedMultiplicity;
using crg::Int;
using crg::Rational;
using crg::ReflectionGroup;

namespace {

struct GroupData {
    ReflectionGroup W;
    CharacterTable table;
    std::vector<std::vector<Cyclotomic>> wedges;
    std::vector<GradedMultiplicity> graded;
    std::vector<unsigned> degrees;
    long long spent_ms = 0;  // accumulated per-group work time
};

long long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int failures = 0;

void line(int number, bool ok, const std::string& label, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

void append(std::string& detail, const std::string& item) {
    if (!detail.empty()) detail += "; ";
    detail += item;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> names = {"A1",    "A2", "A3",       "A4",       "B2",
                                            "B3",    "D4", "G2",       "I2(5)",    "I2(7)",
                                            "H3",    "G(3,3,3)", "G(4,2,2)", "ST4"};
    std::vector<std::pair<std::string, GroupData>> groups;
    for (const std::string& name : names) {
        const auto start = std::chrono::steady_clock::now();
        ReflectionGroup W = crg::build_catalog_group(name, 1000000);
        CharacterTable table = crg::character_table(W);
        auto wedges = crg::wedge_rows(W);
        auto graded = crg::graded_multiplicities(W, table);
        auto degrees = crg::invariant_degrees(W);
        groups.emplace_back(name, GroupData{std::move(W), std::move(table), std::move(wedges),
                                            std::move(graded), std::move(degrees),
                                            ms_since(start)});
    }

    // 1: the five counting routes agree exactly for 0 <= l <= rank + 6, each
    // group within 60 s, everything within 5 minutes.
    {
        std::string detail;
        for (auto& [name, g] : groups) {
            const auto start = std::chrono::steady_clock::now();
            const unsigned L = g.W.rank() + 6;
            std::vector<std::vector<Int>> routes;
            std::string route_error;
            for (CountMethod m : crg::all_methods()) {
                try {
                    routes.push_back(m == CountMethod::spectral
                                         ? crg::count_spectral(g.W, g.table, L)
                                         : crg::count(g.W, m, L));
                } catch (const std::exception& e) {
                    route_error = std::string("route ") + crg::method_name(m) +
                                  " failed: " + e.what();
                    break;
                }
            }
            if (!route_error.empty()) {
                append(detail, name + ": " + route_error);
            } else {
                for (std::size_t m = 1; m < routes.size() && route_error.empty(); ++m)
                    for (unsigned l = 0; l <= L; ++l)
                        if (routes[m][l] != routes[0][l]) {
                            append(detail, name + ": routes disagree at length " +
                                               std::to_string(l));
                            m = routes.size();
                            break;
                        }
            }
            g.spent_ms += ms_since(start);
            if (g.spent_ms >= 60000)
                append(detail, name + " took " + std::to_string(g.spent_ms) + " ms");
        }
        if (ms_since(t0) >= 300000)
            append(detail, "total runtime " + std::to_string(ms_since(t0)) + " ms");
        line(1, detail.empty(),
             "dp, spectral, exterior, closed, and egf counts agree exactly up to rank+6 for "
             "all 14 groups within the time caps",
             detail);
    }

    // 2: anchored values straight from the transfer-matrix walk.
    {
        std::string detail;
        const auto expect = [&](const char* name, unsigned l, long want) {
            for (auto& [n, g] : groups)
                if (n == name) {
                    const Int got = crg::count_dp(g.W, l)[l];
                    if (got != want)
                        append(detail, std::string(name) + " length " + std::to_string(l) +
                                           ": got " + got.get_str() + ", want " +
                                           std::to_string(want));
                    return;
                }
            append(detail, std::string("missing group ") + name);
        };
        expect("A2", 2, 3);
        expect("A2", 4, 27);
        expect("A3", 3, 16);
        expect("B2", 2, 4);
        expect("B2", 4, 64);
        expect("G2", 2, 6);
        expect("ST4", 2, 3);
        for (unsigned l = 0; l <= 7; ++l) expect("A1", l, l % 2 == 0 ? 0 : 1);
        line(2, detail.empty(),
             "anchored counts hold (A2: 3, 27; A3: 16; B2: 4, 64; G2: 6; ST4: 3; A1 "
             "alternates 0, 1)",
             detail);
    }

    // 3: reflection-sum identity and the two fixator-multiplicity identities
    // for every irreducible of every group with one common fixator order.
    {
        std::string detail;
        for (auto& [name, g] : groups) {
            if (!g.W.constant_fixator_order()) continue;
            const unsigned e = g.W.common_fixator_order();
            const Int nrefl(static_cast<unsigned long>(g.W.num_reflections()));
            for (std::size_t r = 0; r < g.table.rows.size(); ++r) {
                const Int paired =
                    g.graded[r].weighted_degree_sum() +
                    g.graded[crg::conjugate_row(g.table, static_cast<unsigned>(r))]
                        .weighted_degree_sum();
                if (crg::sum_over_reflections(g.W, g.table.rows[r]) !=
                    nrefl * g.table.degrees[r] - paired) {
                    append(detail, name + " row " + std::to_string(r) +
                                       ": reflection sum misses the occurrence-degree form");
                    continue;
                }
                Int fixed(0), moved(0);
                bool restriction_ok = true;
                for (const crg::Hyperplane& H : g.W.hyperplanes()) {
                    Int seen(0);
                    for (unsigned j = 0; j < e; ++j) {
                        const Int m = crg::fixator_multiplicity(H, g.table.rows[r], j);
                        seen += m;
                        (j == 0 ? fixed : moved) += m;
                    }
                    restriction_ok = restriction_ok && seen == g.table.degrees[r];
                }
                if (!restriction_ok)
                    append(detail, name + " row " + std::to_string(r) +
                                       ": fixator restriction loses dimensions");
                if (Rational(moved) != Rational(paired, Int(e)))
                    append(detail, name + " row " + std::to_string(r) +
                                       ": non-trivial eigencharacter total is off");
                if (Rational(fixed) != Rational(nrefl * g.table.degrees[r], Int(e - 1)) -
                                           Rational(paired, Int(e)))
                    append(detail, name + " row " + std::to_string(r) +
                                       ": trivial eigencharacter total is off");
            }
        }
        line(3, detail.empty(),
             "reflection sums and fixator multiplicities match the occurrence-degree "
             "formulas for every irreducible",
             detail);
    }

    // 4: exterior-power reflection sums equal their closed forms, also after
    // dividing by the dimension.
    {
        std::string detail;
        for (auto& [name, g] : groups) {
            const unsigned n = g.W.rank();
            const Int nrefl(static_cast<unsigned long>(g.W.num_reflections()));
            const Int nhyp(static_cast<unsigned long>(g.W.num_hyperplanes()));
            for (unsigned i = 0; i <= n; ++i) {
                const Int direct = crg::sum_over_reflections(g.W, g.wedges[i]);
                if (direct != crg::wedge_sum_closed(n, nrefl, nhyp, i))
                    append(detail, name + ": exterior power " + std::to_string(i) +
                                       " misses its closed sum");
                if (Rational(direct, crg::binomial(n, i)) !=
                    Rational(nrefl * (n - i) - nhyp * i, Int(n)))
                    append(detail, name + ": normalized exterior sum " + std::to_string(i) +
                                       " misses its closed form");
            }
        }
        line(4, detail.empty(),
             "exterior-power reflection sums match their closed forms in the reflection and "
             "hyperplane counts",
             detail);
    }

    // 5: every exterior power of the natural representation is irreducible.
    {
        std::string detail;
        for (auto& [name, g] : groups)
            for (unsigned i = 0; i <= g.W.rank(); ++i)
                if (!(crg::inner_product(g.W, g.wedges[i], g.wedges[i]) == Cyclotomic(1L)))
                    append(detail,
                           name + ": exterior power " + std::to_string(i) + " is reducible");
        line(5, detail.empty(), "every exterior power of the natural representation is "
                                "irreducible (self inner product 1)",
             detail);
    }

    // 6: orthogonality of rows and columns, and the degree-square sum.
    {
        std::string detail;
        for (auto& [name, g] : groups) {
            const std::size_t K = g.W.num_classes();
            bool ok = g.table.rows.size() == K;
            for (std::size_t a = 0; ok && a < K; ++a)
                for (std::size_t b = a; ok && b < K; ++b)
                    ok = crg::inner_product(g.W, g.table.rows[a], g.table.rows[b]) ==
                         Cyclotomic(a == b ? 1L : 0L);
            for (unsigned k = 0; ok && k < K; ++k)
                for (unsigned k2 = k; ok && k2 < K; ++k2) {
                    Cyclotomic sum(0L);
                    for (std::size_t r = 0; r < K; ++r)
                        sum += g.table.rows[r][k] * g.table.rows[r][k2].conj();
                    const Cyclotomic want =
                        k == k2 ? Cyclotomic(Rational(
                                      Int(static_cast<unsigned long>(g.W.order())),
                                      Int(static_cast<unsigned long>(g.W.class_size(k)))))
                                : Cyclotomic(0L);
                    ok = sum == want;
                }
            Int squares(0);
            for (const Int& d : g.table.degrees) squares += d * d;
            ok = ok && squares == Int(static_cast<unsigned long>(g.W.order()));
            if (!ok) append(detail, name + ": table fails orthogonality");
        }
        line(6, detail.empty(),
             "character tables are orthogonal in rows and columns and degree squares sum to "
             "the group order",
             detail);
    }

    // 7: structural identities of the arrangement, the degrees, and the
    // generator product.
    {
        std::string detail;
        for (auto& [name, g] : groups) {
            Int from_fixators(0);
            for (const crg::Hyperplane& H : g.W.hyperplanes()) from_fixators += H.e - 1;
            if (from_fixators != Int(static_cast<unsigned long>(g.W.num_reflections())))
                append(detail, name + ": fixator orders do not account for the reflections");
            Int prod(1);
            Int excess(0);
            for (unsigned d : g.degrees) {
                prod *= d;
                excess += Int(d) - 1;
            }
            if (prod != Int(static_cast<unsigned long>(g.W.order())))
                append(detail, name + ": degree product misses the group order");
            if (excess != Int(static_cast<unsigned long>(g.W.num_reflections())))
                append(detail, name + ": degree excess misses the reflection count");
            const unsigned h = g.W.coxeter_number();
            if (g.W.element_order(g.W.coxeter()) != h || g.degrees.back() != h)
                append(detail, name + ": generator product order is not the top degree");
            for (unsigned k = 0; k < h; ++k) {
                Cyclotomic expectation(0L);
                for (unsigned d : g.degrees)
                    expectation +=
                        Cyclotomic::zeta(h, (static_cast<unsigned long>(k) * (d - 1)) % h);
                if (!(g.W.matrix(g.W.power(g.W.coxeter(), k)).trace() == expectation)) {
                    append(detail, name + ": generator product eigenvalues are off");
                    break;
                }
            }
        }
        line(7, detail.empty(),
             "fixator, degree, and generator-product identities all hold exactly",
             detail);
    }

    // 8: a single corrupted table value never slips through the battery.
    {
        std::string detail;
        for (std::uint64_t seed : {5ULL, 17ULL}) {
            crg::VerifyOptions opts;
            opts.inject_fault = true;
            opts.fault_seed = seed;
            if (crg::run_suite("A2", opts).all_passed())
                append(detail, "A2 with seed " + std::to_string(seed) + " passed everything");
        }
        line(8, detail.empty(),
             "deliberately corrupting one table value makes the verification battery fail",
             detail);
    }

    std::cout << (8 - failures) << " of 8 criteria satisfied in " << ms_since(t0) << " ms"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
