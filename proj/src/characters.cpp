#include "crg/characters.hpp"

#include <algorithm>

#include "crg/errors.hpp"
#include "crg/modular.hpp"
#include "crg/numutil.hpp"

namespace crg {

namespace {

// ---------------------------------------------------------------------------
// Eigenvector splitting of the class algebra over F_p.

// Column k counts, for a representative z_k of class k, how the products
// x^-1 z_k with x running over class i distribute across classes j; these are
// the structure-constant operators of the class algebra, and every character
// induces a common eigenvector.
std::vector<FpMatrix> class_operators(const ReflectionGroup& W, std::uint64_t p) {
    const unsigned K = static_cast<unsigned>(W.num_classes());
    std::vector<FpMatrix> ops(K, FpMatrix(K, K, p));
    for (unsigned k = 0; k < K; ++k) {
        const std::vector<unsigned> t = W.right_translation(W.class_rep(k));
        for (unsigned x = 0; x < W.order(); ++x) {
            const unsigned i = W.class_of(x);
            const unsigned j = W.class_of(t[W.inverse(x)]);
            std::uint64_t& cell = ops[i].at(j, k);
            cell = (cell + 1) % p;
        }
    }
    return ops;
}

// Refine the full space into one-dimensional common eigenspaces of the class
// operators; columns of the result are the (unnormalized) eigenvectors.
std::vector<std::vector<std::uint64_t>> split_eigenvectors(const std::vector<FpMatrix>& ops,
                                                           std::uint64_t p) {
    const unsigned K = ops.empty() ? 0 : ops[0].rows();
    std::vector<FpMatrix> blocks{FpMatrix::identity(K, p)};
    for (unsigned i = 1; i < ops.size(); ++i) {
        bool done = true;
        for (const FpMatrix& b : blocks)
            if (b.cols() > 1) done = false;
        if (done) break;
        std::vector<FpMatrix> next;
        for (const FpMatrix& b : blocks) {
            if (b.cols() == 1) {
                next.push_back(b);
                continue;
            }
            const FpMatrix X = solve_in_span(b, ops[i] * b);
            const std::vector<std::uint64_t> cp = charpoly_mod(X);
            unsigned carved = 0;
            for (std::uint64_t lam = 0; lam < p; ++lam) {
                if (poly_eval_mod(cp, lam, p) != 0) continue;
                const FpMatrix ker = kernel_basis(X.minus_scalar(lam));
                if (ker.cols() == 0) continue;
                next.push_back(b * ker);
                carved += ker.cols();
            }
            if (carved != b.cols())
                throw consistency_error("class operator failed to diagonalize at modulus " +
                                        std::to_string(p));
        }
        blocks = std::move(next);
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (const FpMatrix& b : blocks) {
        if (b.cols() != 1)
            throw consistency_error("class operators share an eigenspace of dimension " +
                                    std::to_string(b.cols()) + " at modulus " + std::to_string(p));
        std::vector<std::uint64_t> v(b.rows());
        for (unsigned r = 0; r < b.rows(); ++r) v[r] = b.at(r, 0);
        out.push_back(std::move(v));
    }
    return out;
}

// Unique square root of dd in [1, p/2); characters have degree below p/2.
std::uint64_t lift_degree(std::uint64_t dd, std::uint64_t p) {
    for (std::uint64_t x = 1; 2 * x < p; ++x)
        if (x * x % p == dd) return x;
    throw consistency_error("no admissible degree lift for residue " + std::to_string(dd) +
                            " at modulus " + std::to_string(p));
}

struct RawRow {
    Int degree;
    std::vector<Cyclotomic> values;
};

RawRow lift_row(const ReflectionGroup& W, const std::vector<std::uint64_t>& omega,
                std::uint64_t p, std::uint64_t zeta_mod) {
    const unsigned K = static_cast<unsigned>(W.num_classes());
    const unsigned m = W.exponent();

    // Degree from the orthogonality relation: d^2 * sum_i w_i w_{i*} / |C_i|
    // is the group order.
    std::uint64_t s = 0;
    for (unsigned i = 0; i < K; ++i) {
        const std::uint64_t ci = W.class_size(i) % p;
        s = (s + omega[i] * omega[W.inverse_class(i)] % p * mod_inv(ci, p)) % p;
    }
    const std::uint64_t dd = W.order() % p * mod_inv(s, p) % p;
    const std::uint64_t d = lift_degree(dd, p);

    std::vector<std::uint64_t> value_mod(K);
    for (unsigned i = 0; i < K; ++i)
        value_mod[i] = d * omega[i] % p * mod_inv(W.class_size(i) % p, p) % p;

    RawRow row;
    row.degree = Int(static_cast<unsigned long>(d));
    row.values.reserve(K);
    for (unsigned i = 0; i < K; ++i) {
        const unsigned rep = W.class_rep(i);
        const unsigned e = W.element_order(rep);
        // Residues of the value on every power of the representative.
        std::vector<std::uint64_t> on_powers(e);
        for (unsigned t = 0; t < e; ++t)
            on_powers[t] = value_mod[W.class_of(W.power(rep, static_cast<long>(t)))];
        // Multiplicity of each eigenvalue of the representative acting in the
        // module: a discrete Fourier inversion over F_p, exact because every
        // multiplicity is at most d < p/2.
        const std::uint64_t ze = mod_pow(zeta_mod, m / e, p);
        const std::uint64_t ze_inv = mod_inv(ze, p);
        const std::uint64_t e_inv = mod_inv(e % p, p);
        Cyclotomic value(0L);
        Int mult_total = 0;
        for (unsigned j = 0; j < e; ++j) {
            std::uint64_t acc = 0;
            const std::uint64_t step = mod_pow(ze_inv, j, p);
            std::uint64_t w = 1;
            for (unsigned t = 0; t < e; ++t) {
                acc = (acc + on_powers[t] * w) % p;
                w = w * step % p;
            }
            const std::uint64_t mult = acc * e_inv % p;
            if (mult > d)
                throw consistency_error("eigenvalue multiplicity " + std::to_string(mult) +
                                        " exceeds the degree " + std::to_string(d) +
                                        " at modulus " + std::to_string(p));
            if (mult == 0) continue;
            mult_total += static_cast<unsigned long>(mult);
            value += Cyclotomic(Rational(static_cast<long>(mult))) * Cyclotomic::zeta(e, j);
        }
        if (mult_total != row.degree)
            throw consistency_error("eigenvalue multiplicities sum to " + mult_total.get_str() +
                                    " instead of the degree " + row.degree.get_str() +
                                    " at modulus " + std::to_string(p));
        row.values.push_back(value);
    }
    return row;
}

bool value_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

CharacterTable table_at_modulus(const ReflectionGroup& W, std::uint64_t p) {
    const std::vector<FpMatrix> ops = class_operators(W, p);
    std::vector<std::vector<std::uint64_t>> vecs = split_eigenvectors(ops, p);
    if (vecs.size() != W.num_classes())
        throw consistency_error("found " + std::to_string(vecs.size()) +
                                " class-algebra eigenvectors, expected " +
                                std::to_string(W.num_classes()));

    // The identity-class coordinate of a character eigenvector is never zero;
    // scale it to 1.
    const std::uint64_t zeta_mod =
        mod_pow(smallest_primitive_root(p), (p - 1) / W.exponent(), p);
    std::vector<RawRow> raws;
    for (auto& v : vecs) {
        if (v[0] == 0)
            throw consistency_error("class-algebra eigenvector with vanishing identity coordinate "
                                    "at modulus " + std::to_string(p));
        const std::uint64_t scale = mod_inv(v[0], p);
        for (auto& x : v) x = x * scale % p;
        raws.push_back(lift_row(W, v, p, zeta_mod));
    }

    Int degree_square_sum = 0;
    for (const RawRow& r : raws) degree_square_sum += r.degree * r.degree;
    if (degree_square_sum != Int(static_cast<unsigned long>(W.order())))
        throw consistency_error("degree squares sum to " + degree_square_sum.get_str() +
                                " instead of the group order at modulus " + std::to_string(p));

    std::sort(raws.begin(), raws.end(), [](const RawRow& a, const RawRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t k = 0; k < a.values.size(); ++k)
            if (a.values[k] != b.values[k]) return value_less(a.values[k], b.values[k]);
        return false;
    });

    CharacterTable table;
    table.prime = p;
    for (RawRow& r : raws) {
        table.degrees.push_back(r.degree);
        table.rows.push_back(std::move(r.values));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Graded series helpers.

// det(1 - t M) for a class representative, as ascending coefficients
// (+1, -e_1, +e_2, ...).
std::vector<Cyclotomic> det_one_minus_t(const CMatrix& m) {
    const std::vector<Cyclotomic> elem = elementary_traces(m);
    std::vector<Cyclotomic> c(elem.size());
    for (std::size_t j = 0; j < elem.size(); ++j)
        c[j] = (j % 2 == 0) ? elem[j] : -elem[j];
    return c;
}

// Coefficients 0..truncation of the reciprocal power series.
std::vector<Cyclotomic> series_inverse(const std::vector<Cyclotomic>& a, unsigned truncation) {
    std::vector<Cyclotomic> b(truncation + 1, Cyclotomic(0L));
    b[0] = Cyclotomic(1L);
    for (unsigned k = 1; k <= truncation; ++k) {
        Cyclotomic acc(0L);
        for (unsigned j = 1; j < a.size() && j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc;
    }
    return b;
}

std::vector<std::vector<Cyclotomic>> per_class_inverse_series(const ReflectionGroup& W,
                                                              unsigned truncation) {
    std::vector<std::vector<Cyclotomic>> out;
    for (unsigned k = 0; k < W.num_classes(); ++k)
        out.push_back(series_inverse(det_one_minus_t(W.matrix(W.class_rep(k))), truncation));
    return out;
}

} // namespace

CharacterTable character_table(const ReflectionGroup& W) {
    // Modulus: 1 mod exponent so eigenvalue residues exist, and large enough
    // that squared degrees lift uniquely.
    const std::uint64_t m = W.exponent();
    std::uint64_t p = m + 1;
    while (p * p <= 4 * static_cast<std::uint64_t>(W.order()) || !is_prime_u64(p)) p += m;
    std::string last;
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            return table_at_modulus(W, p);
        } catch (const consistency_error& err) {
            last = err.what();
        } catch (const arithmetic_error& err) {
            last = err.what();
        }
        do p += m;
        while (!is_prime_u64(p));
    }
    throw consistency_error("character table of " + W.name() +
                            " failed at eight admissible moduli; last failure: " + last);
}

Cyclotomic inner_product(const ReflectionGroup& W, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b) {
    Cyclotomic acc(0L);
    for (unsigned k = 0; k < W.num_classes(); ++k)
        acc += Cyclotomic(Rational(static_cast<long>(W.class_size(k)))) * a[k] * b[k].conj();
    return acc * Cyclotomic(Rational(1, static_cast<long>(W.order())));
}

std::vector<Cyclotomic> natural_character(const ReflectionGroup& W) {
    std::vector<Cyclotomic> row;
    for (unsigned k = 0; k < W.num_classes(); ++k) row.push_back(W.matrix(W.class_rep(k)).trace());
    return row;
}

std::vector<std::vector<Cyclotomic>> wedge_rows(const ReflectionGroup& W) {
    const unsigned n = W.rank();
    std::vector<std::vector<Cyclotomic>> rows(n + 1);
    for (unsigned k = 0; k < W.num_classes(); ++k) {
        const std::vector<Cyclotomic> elem = elementary_traces(W.matrix(W.class_rep(k)));
        for (unsigned i = 0; i <= n; ++i) rows[i].push_back(elem[i]);
    }
    return rows;
}

Int sum_over_reflections(const ReflectionGroup& W, const std::vector<Cyclotomic>& row) {
    Cyclotomic acc(0L);
    const std::vector<std::size_t>& per_class = W.reflections_per_class();
    for (unsigned k = 0; k < W.num_classes(); ++k) {
        if (per_class[k] == 0) continue;
        acc += Cyclotomic(Rational(static_cast<long>(per_class[k]))) * row[k];
    }
    return acc.to_integer();
}

unsigned conjugate_row(const CharacterTable& table, unsigned r) {
    for (unsigned s = 0; s < table.rows.size(); ++s) {
        bool match = true;
        for (std::size_t k = 0; k < table.rows[r].size() && match; ++k)
            if (table.rows[s][k] != table.rows[r][k].conj()) match = false;
        if (match) return s;
    }
    throw consistency_error("table row " + std::to_string(r) + " has no conjugate row");
}

std::vector<unsigned> invariant_degrees(const ReflectionGroup& W) {
    const unsigned truncation = static_cast<unsigned>(W.num_reflections()) + 2;
    const std::vector<std::vector<Cyclotomic>> inv = per_class_inverse_series(W, truncation);

    // Average over the group: dimension of the degree-k invariants.
    std::vector<Rational> dims(truncation + 1);
    const Rational scale(1, static_cast<long>(W.order()));
    for (unsigned t = 0; t <= truncation; ++t) {
        Cyclotomic acc(0L);
        for (unsigned k = 0; k < W.num_classes(); ++k)
            acc += Cyclotomic(Rational(static_cast<long>(W.class_size(k)))) * inv[k][t];
        dims[t] = acc.to_rational() * scale;
    }

    // Deflate: each factor 1/(1 - t^d) contributes its d as the least nonzero
    // degree remaining.
    std::vector<unsigned> degrees;
    for (unsigned factor = 0; factor < W.rank(); ++factor) {
        unsigned d = 0;
        for (unsigned t = 1; t <= truncation && d == 0; ++t)
            if (!dims[t].is_zero()) d = t;
        if (d == 0)
            throw build_error("graded invariant series of " + W.name() +
                              " deflates early: not a reflection group in its ambient space");
        degrees.push_back(d);
        for (unsigned t = truncation; t >= d; --t) dims[t] -= dims[t - d];
    }
    if (!dims[0].is_one())
        throw build_error("graded invariant series of " + W.name() + " has constant term " +
                          dims[0].str());
    for (unsigned t = 1; t <= truncation; ++t)
        if (!dims[t].is_zero())
            throw build_error("graded invariant series of " + W.name() +
                              " does not deflate to 1 (degree " + std::to_string(t) +
                              " remainder " + dims[t].str() + "): not a reflection group");
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

Int GradedMultiplicity::value_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs) s += c;
    return s;
}

Int GradedMultiplicity::weighted_degree_sum() const {
    Int s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += Int(static_cast<unsigned long>(k)) * coeffs[k];
    return s;
}

std::vector<GradedMultiplicity> graded_multiplicities(const ReflectionGroup& W,
                                                      const CharacterTable& table) {
    const unsigned nrefl = static_cast<unsigned>(W.num_reflections());
    const unsigned truncation = nrefl + 2;
    const std::vector<std::vector<Cyclotomic>> inv = per_class_inverse_series(W, truncation);
    const std::vector<unsigned> degs = invariant_degrees(W);

    // prefactor = product over the invariant degrees of (1 - q^d), the
    // graded "denominator" of the coinvariant algebra.
    std::vector<Rational> pref(truncation + 1);
    pref[0] = Rational(1);
    for (unsigned d : degs)
        for (unsigned t = truncation; t >= d; --t) pref[t] -= pref[t - d];

    const Rational scale(1, static_cast<long>(W.order()));
    std::vector<GradedMultiplicity> out;
    for (const std::vector<Cyclotomic>& row : table.rows) {
        std::vector<Cyclotomic> avg(truncation + 1, Cyclotomic(0L));
        for (unsigned k = 0; k < W.num_classes(); ++k) {
            const Cyclotomic weight =
                Cyclotomic(Rational(static_cast<long>(W.class_size(k)))) * row[k].conj();
            if (weight.is_zero()) continue;
            for (unsigned t = 0; t <= truncation; ++t) avg[t] += weight * inv[k][t];
        }
        GradedMultiplicity gm;
        for (unsigned t = 0; t <= truncation; ++t) {
            Cyclotomic acc(0L);
            for (unsigned a = 0; a <= t; ++a) {
                if (pref[a].is_zero()) continue;
                acc += Cyclotomic(pref[a]) * avg[t - a];
            }
            const Int coeff = (acc * Cyclotomic(scale)).to_integer();
            if (t > nrefl) {
                if (coeff != 0)
                    throw consistency_error("graded multiplicity of a row of " + W.name() +
                                            " persists beyond the top degree " +
                                            std::to_string(nrefl));
                continue;
            }
            if (coeff < 0)
                throw consistency_error("negative graded multiplicity " + coeff.get_str() +
                                        " in degree " + std::to_string(t) + " for " + W.name());
            gm.coeffs.push_back(coeff);
        }
        while (gm.coeffs.size() > 1 && gm.coeffs.back() == 0) gm.coeffs.pop_back();
        out.push_back(std::move(gm));
    }
    return out;
}

Int fixator_multiplicity(const Hyperplane& h, const std::vector<Cyclotomic>& row, unsigned j) {
    Cyclotomic acc(0L);
    for (unsigned t = 0; t < h.e; ++t)
        acc += row[h.power_class[t]] *
               Cyclotomic::zeta(h.e, -static_cast<long>(j) * static_cast<long>(t));
    return (acc * Cyclotomic(Rational(1, static_cast<long>(h.e)))).to_integer();
}

} // namespace crg
