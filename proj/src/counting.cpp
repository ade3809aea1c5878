#include "crg/counting.hpp"

#include "crg/egf.hpp"
#include "crg/errors.hpp"
#include "crg/numutil.hpp"

namespace crg {

namespace {

Int order_int(const ReflectionGroup& W) { return Int(static_cast<unsigned long>(W.order())); }

// Shared tail of the three expansion routes: counts[l] = (sum_j weight_j *
// base_j^l) / |W|, with the divisibility checked at every length.
std::vector<Int> expansion_counts(const ReflectionGroup& W, const std::vector<Rational>& weights,
                                  const std::vector<Rational>& bases, unsigned max_l,
                                  const char* route) {
    const Rational order(order_int(W));
    std::vector<Rational> powers(bases.size(), Rational(1));
    std::vector<Int> counts;
    counts.reserve(max_l + 1);
    for (unsigned l = 0; l <= max_l; ++l) {
        Rational sum;
        for (std::size_t j = 0; j < bases.size(); ++j) {
            sum += weights[j] * powers[j];
            powers[j] *= bases[j];
        }
        const Rational q = sum / order;
        if (!q.is_integer())
            throw consistency_error("factorization count of " + W.name() + " at length " +
                                    std::to_string(l) + " from the " + route +
                                    " route is not an integer: " + sum.str() + " / " +
                                    order.str());
        counts.push_back(q.to_integer());
    }
    return counts;
}

} // namespace

std::string method_name(CountMethod m) {
    switch (m) {
        case CountMethod::dp: return "dp";
        case CountMethod::spectral: return "spectral";
        case CountMethod::exterior: return "exterior";
        case CountMethod::closed: return "closed";
        case CountMethod::egf: return "egf";
    }
    throw usage_error("unknown counting method");
}

CountMethod parse_method(const std::string& s) {
    for (CountMethod m : all_methods())
        if (s == method_name(m)) return m;
    throw usage_error("unknown counting method '" + s +
                      "'; expected dp, spectral, exterior, closed, or egf");
}

const std::vector<CountMethod>& all_methods() {
    static const std::vector<CountMethod> ms{CountMethod::dp, CountMethod::spectral,
                                            CountMethod::exterior, CountMethod::closed,
                                            CountMethod::egf};
    return ms;
}

std::vector<Int> count_dp(const ReflectionGroup& W, unsigned max_l) {
    // One translation table per reflection: stepping a partial product by r
    // moves the remaining requirement from g to g r^-1.
    std::vector<std::vector<unsigned>> step;
    step.reserve(W.num_reflections());
    for (unsigned r : W.reflections()) step.push_back(W.right_translation(W.inverse(r)));

    std::vector<Int> reach(W.order(), Int(0));
    reach[0] = 1;
    std::vector<Int> counts{reach[W.coxeter()]};
    for (unsigned l = 1; l <= max_l; ++l) {
        std::vector<Int> next(W.order(), Int(0));
        for (unsigned g = 0; g < W.order(); ++g) {
            if (reach[g] == 0) continue;
            for (const std::vector<unsigned>& t : step) next[t[g]] += reach[g];
        }
        reach = std::move(next);
        counts.push_back(reach[W.coxeter()]);
    }
    return counts;
}

std::vector<Int> count_spectral(const ReflectionGroup& W, const CharacterTable& table,
                                unsigned max_l) {
    const unsigned target = W.inverse_class(W.class_of(W.coxeter()));
    // Per row: base = (reflection sum / degree), a rational by closure of the
    // reflection set under field automorphisms; weight = degree * value at
    // the inverse target class, which may be irrational on its own, so the
    // expansion runs in the cyclotomic field and rationality is demanded only
    // of each total.
    std::vector<Rational> bases;
    std::vector<Cyclotomic> weight_c;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        bases.push_back(Rational(sum_over_reflections(W, table.rows[r]), table.degrees[r]));
        weight_c.push_back(Cyclotomic(Rational(table.degrees[r])) * table.rows[r][target]);
    }
    const Rational order(order_int(W));

    std::vector<Rational> powers(table.rows.size(), Rational(1));
    std::vector<Int> counts;
    counts.reserve(max_l + 1);
    for (unsigned l = 0; l <= max_l; ++l) {
        Cyclotomic sum(0L);
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            if (!powers[r].is_zero()) sum += weight_c[r] * Cyclotomic(powers[r]);
            powers[r] *= bases[r];
        }
        const Rational total = sum.to_rational();
        const Rational q = total / order;
        if (!q.is_integer())
            throw consistency_error("factorization count of " + W.name() + " at length " +
                                    std::to_string(l) +
                                    " from the spectral route is not an integer: " + total.str() +
                                    " / " + order.str());
        counts.push_back(q.to_integer());
    }
    return counts;
}

std::vector<Int> count_exterior(const ReflectionGroup& W, unsigned max_l) {
    const unsigned n = W.rank();
    const std::vector<std::vector<Cyclotomic>> wedges = wedge_rows(W);
    std::vector<Rational> weights, bases;
    for (unsigned i = 0; i <= n; ++i) {
        const Int dim = binomial(n, i);
        const Int sum = sum_over_reflections(W, wedges[i]);
        weights.push_back(Rational(i % 2 == 0 ? dim : Int(-dim)));
        bases.push_back(Rational(sum, dim));
    }
    return expansion_counts(W, weights, bases, max_l, "exterior");
}

std::vector<Int> count_closed(const ReflectionGroup& W, unsigned max_l) {
    const unsigned n = W.rank();
    const Int nrefl(static_cast<unsigned long>(W.num_reflections()));
    const Int nhyp(static_cast<unsigned long>(W.num_hyperplanes()));
    std::vector<Rational> weights, bases;
    for (unsigned i = 0; i <= n; ++i) {
        const Int dim = binomial(n, i);
        weights.push_back(Rational(i % 2 == 0 ? dim : Int(-dim)));
        // (|R| (n - i) - |R*| i) / n
        bases.push_back(Rational(nrefl * (n - i) - nhyp * i, Int(n)));
    }
    return expansion_counts(W, weights, bases, max_l, "closed");
}

std::vector<Int> count_egf(const ReflectionGroup& W, unsigned max_l) {
    const unsigned n = W.rank();
    const Rational up(Int(static_cast<unsigned long>(W.num_reflections())), Int(n));
    const Rational down(Int(static_cast<unsigned long>(W.num_hyperplanes())), Int(n));
    const DPSeries diff =
        DPSeries::exp_series(up, max_l) - DPSeries::exp_series(-down, max_l);
    const DPSeries total = diff.pow(n).scaled(Rational(Int(1), order_int(W)));
    std::vector<Int> counts;
    counts.reserve(max_l + 1);
    for (unsigned l = 0; l <= max_l; ++l) {
        const Rational& c = total.coeff(l);
        if (!c.is_integer())
            throw consistency_error("factorization count of " + W.name() + " at length " +
                                    std::to_string(l) +
                                    " from the egf route is not an integer: " + c.str());
        counts.push_back(c.to_integer());
    }
    return counts;
}

std::vector<Int> count(const ReflectionGroup& W, CountMethod method, unsigned max_l) {
    switch (method) {
        case CountMethod::dp: return count_dp(W, max_l);
        case CountMethod::spectral: return count_spectral(W, character_table(W), max_l);
        case CountMethod::exterior: return count_exterior(W, max_l);
        case CountMethod::closed: return count_closed(W, max_l);
        case CountMethod::egf: return count_egf(W, max_l);
    }
    throw usage_error("unknown counting method");
}

Int wedge_sum_closed(unsigned n, const Int& reflections, const Int& hyperplanes, unsigned i) {
    const Int outer = binomial(n, i);
    const Int inner = (i == 0 || i > n) ? Int(0) : binomial(n - 1, i - 1);
    return reflections * (outer - inner) - hyperplanes * inner;
}

} // namespace crg
