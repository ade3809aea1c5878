#include "crg/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "crg/catalog.hpp"
#include "crg/characters.hpp"
#include "crg/counting.hpp"
#include "crg/errors.hpp"
#include "crg/numutil.hpp"

namespace crg {

namespace {

std::string str(const Int& v) { return v.get_str(); }

struct Context {
    const ReflectionGroup& W;
    CharacterTable table;  // possibly perturbed by fault injection
    std::vector<std::vector<Cyclotomic>> wedges;
    std::vector<unsigned> recovered_degrees;
    unsigned max_l = 0;

    std::optional<std::vector<GradedMultiplicity>> graded;
    const std::vector<GradedMultiplicity>& graded_rows() {
        if (!graded) graded = graded_multiplicities(W, table);
        return *graded;
    }

    Int occurrence_sum(unsigned r) { return graded_rows()[r].weighted_degree_sum(); }
    Int paired_occurrence_sum(unsigned r) {
        return occurrence_sum(r) + occurrence_sum(conjugate_row(table, r));
    }
};

CheckResult pass() { return CheckResult{"", CheckStatus::pass, "", 0}; }
CheckResult fail(std::string witness) {
    return CheckResult{"", CheckStatus::fail, std::move(witness), 0};
}
CheckResult skip(std::string reason) {
    return CheckResult{"", CheckStatus::not_applicable, std::move(reason), 0};
}

Int order_int(const ReflectionGroup& W) { return Int(static_cast<unsigned long>(W.order())); }

CheckResult check_group_order(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    if (order_int(W) != W.spec().expected_order)
        return fail("enumerated " + str(order_int(W)) + " elements, catalog predicts " +
                    str(W.spec().expected_order));
    Int prod(1);
    for (unsigned d : ctx.recovered_degrees) prod *= d;
    if (prod != order_int(W))
        return fail("product of recovered invariant degrees is " + str(prod) +
                    ", group has " + str(order_int(W)) + " elements");
    return pass();
}

CheckResult check_reflection_partition(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    std::vector<unsigned> hits(W.order(), 0);
    std::size_t total = 0;
    for (std::size_t h = 0; h < W.num_hyperplanes(); ++h) {
        const Hyperplane& H = W.hyperplanes()[h];
        if (H.members.size() + 1 != H.e)
            return fail("hyperplane " + std::to_string(h) + " fixator order " +
                        std::to_string(H.e) + " does not match its " +
                        std::to_string(H.members.size()) + " non-identity members");
        bool found = false;
        for (unsigned m : H.members) {
            ++hits[m];
            found = found || m == H.distinguished;
        }
        if (!found)
            return fail("distinguished member of hyperplane " + std::to_string(h) +
                        " is missing from its member list");
        total += H.members.size();
    }
    if (total != W.num_reflections())
        return fail("hyperplane member lists cover " + std::to_string(total) + " of " +
                    std::to_string(W.num_reflections()) + " reflections");
    for (unsigned r : W.reflections())
        if (hits[r] != 1)
            return fail("reflection " + std::to_string(r) + " lies on " +
                        std::to_string(hits[r]) + " recorded hyperplanes");
    for (unsigned k = 0; k < W.num_classes(); ++k) {
        const std::size_t in_class = W.reflections_per_class()[k];
        if (in_class != 0 && in_class != W.class_size(k))
            return fail("class " + std::to_string(k) + " contains " + std::to_string(in_class) +
                        " reflections but " + std::to_string(W.class_size(k)) + " elements");
    }
    return pass();
}

CheckResult check_class_equation(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const Int order = order_int(W);
    Int sum(0);
    for (unsigned k = 0; k < W.num_classes(); ++k) {
        const Int size(static_cast<unsigned long>(W.class_size(k)));
        sum += size;
        if (order % size != 0)
            return fail("class " + std::to_string(k) + " has size " + str(size) +
                        ", which does not divide the group order " + str(order));
        if (W.class_of(W.class_rep(k)) != k)
            return fail("representative of class " + std::to_string(k) +
                        " is assigned to class " + std::to_string(W.class_of(W.class_rep(k))));
    }
    if (sum != order)
        return fail("class sizes sum to " + str(sum) + ", group has " + str(order) +
                    " elements");
    return pass();
}

CheckResult check_degrees_identities(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    if (ctx.recovered_degrees.size() != W.rank())
        return fail("recovered " + std::to_string(ctx.recovered_degrees.size()) +
                    " invariant degrees for rank " + std::to_string(W.rank()));
    if (ctx.recovered_degrees != W.spec().expected_degrees) {
        std::string got;
        for (unsigned d : ctx.recovered_degrees) got += (got.empty() ? "" : ",") + std::to_string(d);
        return fail("recovered invariant degrees {" + got + "} differ from the catalog");
    }
    Int excess(0);
    for (unsigned d : ctx.recovered_degrees) excess += Int(d) - 1;
    if (excess != Int(static_cast<unsigned long>(W.num_reflections())))
        return fail("degrees minus one sum to " + str(excess) + ", group has " +
                    std::to_string(W.num_reflections()) + " reflections");
    return pass();
}

CheckResult check_coxeter_element(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const unsigned c = W.coxeter();
    const unsigned h = W.coxeter_number();
    if (W.element_order(c) != h)
        return fail("generator product has order " + std::to_string(W.element_order(c)) +
                    ", largest degree is " + std::to_string(h));
    if (ctx.recovered_degrees.back() != h)
        return fail("largest recovered degree " + std::to_string(ctx.recovered_degrees.back()) +
                    " differs from the generator product order " + std::to_string(h));
    // Traces of all powers pin down the full eigenvalue multiset.
    for (unsigned k = 0; k < h; ++k) {
        Cyclotomic expect(0L);
        for (unsigned d : ctx.recovered_degrees)
            expect += Cyclotomic::zeta(h, (static_cast<unsigned long>(k) * (d - 1)) % h);
        const Cyclotomic got = W.matrix(W.power(c, k)).trace();
        if (!(got == expect))
            return fail("generator product power " + std::to_string(k) + " has trace " +
                        got.str() + ", eigenvalue pattern predicts " + expect.str());
    }
    return pass();
}

CheckResult check_table_orthogonality(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const CharacterTable& t = ctx.table;
    if (t.rows.size() != W.num_classes())
        return fail("table has " + std::to_string(t.rows.size()) + " rows for " +
                    std::to_string(W.num_classes()) + " classes");
    for (std::size_t a = 0; a < t.rows.size(); ++a)
        for (std::size_t b = a; b < t.rows.size(); ++b) {
            const Cyclotomic ip = inner_product(W, t.rows[a], t.rows[b]);
            const Cyclotomic want(a == b ? 1L : 0L);
            if (!(ip == want))
                return fail("rows " + std::to_string(a) + " and " + std::to_string(b) +
                            " have inner product " + ip.str());
        }
    const Int order = order_int(W);
    for (unsigned k = 0; k < W.num_classes(); ++k)
        for (unsigned k2 = k; k2 < W.num_classes(); ++k2) {
            Cyclotomic sum(0L);
            for (std::size_t r = 0; r < t.rows.size(); ++r)
                sum += t.rows[r][k] * t.rows[r][k2].conj();
            const Cyclotomic want =
                k == k2 ? Cyclotomic(Rational(order, Int(static_cast<unsigned long>(W.class_size(k)))))
                        : Cyclotomic(0L);
            if (!(sum == want))
                return fail("columns " + std::to_string(k) + " and " + std::to_string(k2) +
                            " have pairing " + sum.str() + ", expected " + want.str());
        }
    return pass();
}

CheckResult check_conjugate_rows(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const CharacterTable& t = ctx.table;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const unsigned rc = conjugate_row(t, static_cast<unsigned>(r));
        if (conjugate_row(t, rc) != r)
            return fail("conjugation pairs row " + std::to_string(r) + " with row " +
                        std::to_string(rc) + " but not back");
        for (unsigned k = 0; k < W.num_classes(); ++k)
            if (!(t.rows[r][W.inverse_class(k)] == t.rows[r][k].conj()))
                return fail("row " + std::to_string(r) + " at the inverse of class " +
                            std::to_string(k) + " is not the conjugate value");
    }
    return pass();
}

CheckResult check_fake_degrees(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const CharacterTable& t = ctx.table;
    const std::vector<GradedMultiplicity>& g = ctx.graded_rows();
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r].value_at_one() != t.degrees[r])
            return fail("graded multiplicity of row " + std::to_string(r) + " totals " +
                        str(g[r].value_at_one()) + ", row degree is " + str(t.degrees[r]));
        if (g[r].coeffs.size() > W.num_reflections() + 1)
            return fail("graded multiplicity of row " + std::to_string(r) +
                        " has occurrences beyond degree " +
                        std::to_string(W.num_reflections()));
        for (const Int& cfft : g[r].coeffs)
            if (cfft < 0)
                return fail("graded multiplicity of row " + std::to_string(r) +
                            " has a negative coefficient");
        bool trivial = t.degrees[r] == 1;
        for (unsigned k = 0; trivial && k < W.num_classes(); ++k)
            trivial = t.rows[r][k] == Cyclotomic(1L);
        if (trivial && !(g[r].coeffs.size() == 1 && g[r].coeffs[0] == 1))
            return fail("the all-ones row must occur exactly once, in degree zero");
    }
    // Row-weighted sum of the multiplicity polynomials against the product of
    // truncated geometric series in the degrees.
    std::vector<Int> lhs;
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r].coeffs.size() > lhs.size()) lhs.resize(g[r].coeffs.size(), Int(0));
        for (std::size_t i = 0; i < g[r].coeffs.size(); ++i) lhs[i] += t.degrees[r] * g[r].coeffs[i];
    }
    std::vector<Int> rhs{Int(1)};
    for (unsigned d : ctx.recovered_degrees) {
        std::vector<Int> next(rhs.size() + d - 1, Int(0));
        for (std::size_t i = 0; i < rhs.size(); ++i)
            for (unsigned j = 0; j < d; ++j) next[i + j] += rhs[i];
        rhs = std::move(next);
    }
    while (lhs.size() < rhs.size()) lhs.push_back(Int(0));
    while (rhs.size() < lhs.size()) rhs.push_back(Int(0));
    if (lhs != rhs)
        return fail("row-weighted graded multiplicities do not reproduce the coinvariant "
                    "dimension series");
    return pass();
}

CheckResult check_reflection_sum(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    if (!W.constant_fixator_order())
        return skip("hyperplane fixator orders are not all equal");
    const CharacterTable& t = ctx.table;
    const Int nrefl(static_cast<unsigned long>(W.num_reflections()));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const Int lhs = sum_over_reflections(W, t.rows[r]);
        const Int rhs = nrefl * t.degrees[r] - ctx.paired_occurrence_sum(static_cast<unsigned>(r));
        if (lhs != rhs)
            return fail("row " + std::to_string(r) + " sums to " + str(lhs) +
                        " over the reflections, occurrence degrees predict " + str(rhs));
    }
    return pass();
}

CheckResult check_multiplicity_identities(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    if (!W.constant_fixator_order())
        return skip("hyperplane fixator orders are not all equal");
    const unsigned e = W.common_fixator_order();
    const CharacterTable& t = ctx.table;
    const Int nrefl(static_cast<unsigned long>(W.num_reflections()));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        Int fixed(0), moved(0);
        for (const Hyperplane& H : W.hyperplanes()) {
            Int seen(0);
            for (unsigned j = 0; j < e; ++j) {
                const Int m = fixator_multiplicity(H, t.rows[r], j);
                if (m < 0 || m > t.degrees[r])
                    return fail("row " + std::to_string(r) + " has eigencharacter multiplicity " +
                                str(m) + " outside 0.." + str(t.degrees[r]));
                seen += m;
                (j == 0 ? fixed : moved) += m;
            }
            if (seen != t.degrees[r])
                return fail("row " + std::to_string(r) +
                            " restricted to a fixator has multiplicities summing to " + str(seen) +
                            ", row degree is " + str(t.degrees[r]));
        }
        const Int paired = ctx.paired_occurrence_sum(static_cast<unsigned>(r));
        if (Rational(moved) != Rational(paired, Int(e)))
            return fail("row " + std::to_string(r) + " has " + str(moved) +
                        " non-trivial eigencharacter occurrences, occurrence degrees predict " +
                        Rational(paired, Int(e)).str());
        const Rational predicted_fixed =
            Rational(nrefl * t.degrees[r], Int(e - 1)) - Rational(paired, Int(e));
        if (Rational(fixed) != predicted_fixed)
            return fail("row " + std::to_string(r) + " has " + str(fixed) +
                        " trivial eigencharacter occurrences, occurrence degrees predict " +
                        predicted_fixed.str());
    }
    return pass();
}

CheckResult check_wedge_closed_form(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const Int nrefl(static_cast<unsigned long>(W.num_reflections()));
    const Int nhyp(static_cast<unsigned long>(W.num_hyperplanes()));
    for (unsigned i = 0; i <= W.rank(); ++i) {
        const Int direct = sum_over_reflections(W, ctx.wedges[i]);
        const Int closed = wedge_sum_closed(W.rank(), nrefl, nhyp, i);
        if (direct != closed)
            return fail("exterior power " + std::to_string(i) + " sums to " + str(direct) +
                        " over the reflections, closed form gives " + str(closed));
    }
    return pass();
}

CheckResult check_wedge_irreducibility(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    for (unsigned i = 0; i <= W.rank(); ++i) {
        const Cyclotomic ip = inner_product(W, ctx.wedges[i], ctx.wedges[i]);
        if (!(ip == Cyclotomic(1L)))
            return fail("exterior power " + std::to_string(i) +
                        " of the natural representation has self inner product " + ip.str());
    }
    return pass();
}

CheckResult check_counts_agreement(Context& ctx) {
    const ReflectionGroup& W = ctx.W;
    const unsigned L = ctx.max_l;
    std::vector<std::vector<Int>> got;
    for (CountMethod m : all_methods()) {
        try {
            got.push_back(m == CountMethod::spectral ? count_spectral(W, ctx.table, L)
                                                     : count(W, m, L));
        } catch (const std::exception& e) {
            return fail(std::string("route ") + method_name(m) + " failed: " + e.what());
        }
    }
    for (std::size_t m = 1; m < got.size(); ++m)
        for (unsigned l = 0; l <= L; ++l)
            if (got[m][l] != got[0][l])
                return fail("length " + std::to_string(l) + ": route " +
                            method_name(all_methods()[m]) + " counts " + str(got[m][l]) +
                            ", route dp counts " + str(got[0][l]));
    for (unsigned l = 0; l < W.rank() && l <= L; ++l)
        if (got[0][l] != 0)
            return fail("found " + str(got[0][l]) + " factorizations of length " +
                        std::to_string(l) + " below the rank");

    // The full spectral sum must collapse onto the exterior-power terms before
    // any division happens, length by length.
    const unsigned target = W.inverse_class(W.class_of(W.coxeter()));
    std::vector<Rational> sp_bases;
    std::vector<Cyclotomic> sp_weights;
    for (std::size_t r = 0; r < ctx.table.rows.size(); ++r) {
        sp_bases.push_back(
            Rational(sum_over_reflections(W, ctx.table.rows[r]), ctx.table.degrees[r]));
        sp_weights.push_back(Cyclotomic(Rational(ctx.table.degrees[r])) *
                             ctx.table.rows[r][target]);
    }
    std::vector<Rational> ex_bases, ex_weights;
    for (unsigned i = 0; i <= W.rank(); ++i) {
        const Int dim = binomial(W.rank(), i);
        ex_weights.push_back(Rational(i % 2 == 0 ? dim : Int(-dim)));
        ex_bases.push_back(Rational(sum_over_reflections(W, ctx.wedges[i]), dim));
    }
    std::vector<Rational> sp_pow(sp_bases.size(), Rational(1));
    std::vector<Rational> ex_pow(ex_bases.size(), Rational(1));
    for (unsigned l = 0; l <= L; ++l) {
        Cyclotomic sp(0L);
        for (std::size_t r = 0; r < sp_bases.size(); ++r) {
            if (!sp_pow[r].is_zero()) sp += sp_weights[r] * Cyclotomic(sp_pow[r]);
            sp_pow[r] *= sp_bases[r];
        }
        Rational ex;
        for (std::size_t i = 0; i < ex_bases.size(); ++i) {
            ex += ex_weights[i] * ex_pow[i];
            ex_pow[i] *= ex_bases[i];
        }
        if (!sp.is_rational() || !(sp.to_rational() == ex))
            return fail("length " + std::to_string(l) + ": full table expansion totals " +
                        sp.str() + ", exterior-power expansion totals " + ex.str());
    }
    return pass();
}

} // namespace

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    throw usage_error("unknown check status");
}

CheckStatus parse_status(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "not-applicable") return CheckStatus::not_applicable;
    throw usage_error("unknown check status '" + s + "'");
}

bool VerificationReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

VerificationReport run_suite(const std::string& group_name, const VerifyOptions& opts) {
    const ReflectionGroup W = build_catalog_group(group_name, opts.max_order);
    Context ctx{W, character_table(W), wedge_rows(W), invariant_degrees(W),
                opts.max_l != 0 ? opts.max_l : W.rank() + 6};
    if (opts.inject_fault) {
        std::mt19937_64 gen(opts.fault_seed);
        const std::size_t r = gen() % ctx.table.rows.size();
        const std::size_t k = 1 + gen() % (W.num_classes() - 1);
        ctx.table.rows[r][k] = ctx.table.rows[r][k] + Cyclotomic(1L);
    }

    struct Entry {
        const char* id;
        CheckResult (*fn)(Context&);
    };
    static const Entry entries[] = {
        {"01-group-order", check_group_order},
        {"02-reflection-partition", check_reflection_partition},
        {"03-class-equation", check_class_equation},
        {"04-degrees-identities", check_degrees_identities},
        {"05-coxeter-element", check_coxeter_element},
        {"06-table-orthogonality", check_table_orthogonality},
        {"07-conjugate-row-consistency", check_conjugate_rows},
        {"08-fake-degrees", check_fake_degrees},
        {"09-reflection-sum-identity", check_reflection_sum},
        {"10-multiplicity-identities", check_multiplicity_identities},
        {"11-wedge-closed-form", check_wedge_closed_form},
        {"12-wedge-irreducibility", check_wedge_irreducibility},
        {"13-counts-agreement", check_counts_agreement},
    };

    VerificationReport report;
    report.group = W.name();
    for (const Entry& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = entry.fn(ctx);
        } catch (const std::exception& e) {
            result = fail(e.what());
        }
        result.id = entry.id;
        result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace crg
