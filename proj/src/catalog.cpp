#include "crg/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "crg/errors.hpp"
#include "crg/numutil.hpp"

namespace crg {

namespace {

[[noreturn]] void bad_name(const std::string& name, const std::string& why) {
    throw usage_error("unsupported group '" + name + "': " + why +
                      "; expected A<n> (n<=5), B<n> (2<=n<=4), D4, G2, F4, H3, "
                      "I2(<m>) (2<=m<=12), G(<de>,<e>,<n>) (e | de, de>=2), or ST4");
}

bool parse_uint(const std::string& s, unsigned& out) {
    if (s.empty() || s.size() > 7) return false;
    unsigned v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    out = v;
    return true;
}

// Generator j of a Cartan/Gram datum C: the identity with row j replaced by
// (delta_jk - C[k][j]).  Columns of C hold the pairing against the j-th root.
std::vector<CMatrix> pairing_generators(const std::vector<std::vector<Cyclotomic>>& C) {
    const unsigned n = static_cast<unsigned>(C.size());
    std::vector<CMatrix> gens;
    for (unsigned j = 0; j < n; ++j) {
        std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n, Cyclotomic(0L)));
        for (unsigned i = 0; i < n; ++i) rows[i][i] = Cyclotomic(1L);
        for (unsigned k = 0; k < n; ++k)
            rows[j][k] = (j == k ? Cyclotomic(1L) : Cyclotomic(0L)) - C[k][j];
        gens.push_back(CMatrix::from_rows(rows));
    }
    return gens;
}

std::vector<std::vector<Cyclotomic>> integer_cartan(const std::vector<std::vector<long>>& a) {
    std::vector<std::vector<Cyclotomic>> c;
    for (const auto& row : a) {
        c.emplace_back();
        for (long v : row) c.back().emplace_back(v);
    }
    return c;
}

CMatrix diag_first(unsigned n, const Cyclotomic& v) {
    std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n, Cyclotomic(0L)));
    rows[0][0] = v;
    for (unsigned i = 1; i < n; ++i) rows[i][i] = Cyclotomic(1L);
    return CMatrix::from_rows(rows);
}

CMatrix swap_block(unsigned n, unsigned i, unsigned j, const Cyclotomic& alpha) {
    std::vector<std::vector<Cyclotomic>> rows(n, std::vector<Cyclotomic>(n, Cyclotomic(0L)));
    for (unsigned k = 0; k < n; ++k)
        if (k != i && k != j) rows[k][k] = Cyclotomic(1L);
    rows[i][j] = alpha;
    rows[j][i] = alpha.inverse();
    return CMatrix::from_rows(rows);
}

Int int_pow(unsigned base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

GroupSpec weyl_spec(const std::string& name, const std::vector<std::vector<long>>& cartan,
                    const Int& order, std::vector<unsigned> degrees) {
    GroupSpec spec;
    spec.name = name;
    spec.rank = static_cast<unsigned>(cartan.size());
    spec.generators = pairing_generators(integer_cartan(cartan));
    spec.expected_order = order;
    spec.expected_degrees = std::move(degrees);
    return spec;
}

GroupSpec spec_A(unsigned n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    std::vector<unsigned> deg;
    for (unsigned d = 2; d <= n + 1; ++d) deg.push_back(d);
    return weyl_spec("A" + std::to_string(n), c, factorial(n + 1), std::move(deg));
}

GroupSpec spec_B(unsigned n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    c[n - 2][n - 1] = -2;
    std::vector<unsigned> deg;
    for (unsigned d = 1; d <= n; ++d) deg.push_back(2 * d);
    return weyl_spec("B" + std::to_string(n), c, int_pow(2, n) * factorial(n), std::move(deg));
}

GroupSpec spec_D4() {
    std::vector<std::vector<long>> c(4, std::vector<long>(4, 0));
    for (unsigned i = 0; i < 4; ++i) c[i][i] = 2;
    for (unsigned leaf : {0u, 2u, 3u}) c[leaf][1] = c[1][leaf] = -1;
    return weyl_spec("D4", c, Int(192), {2, 4, 4, 6});
}

GroupSpec spec_G2() { return weyl_spec("G2", {{2, -1}, {-3, 2}}, Int(12), {2, 6}); }

GroupSpec spec_F4() {
    return weyl_spec("F4",
                     {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
                     Int(1152), {2, 6, 8, 12});
}

GroupSpec spec_H3() {
    // -2cos(pi/5) = zeta_5^2 + zeta_5^3.
    const Cyclotomic a = Cyclotomic::from_coeffs(
        5, {Rational(0), Rational(0), Rational(1), Rational(1)});
    const Cyclotomic two(2L), none(-1L), zero(0L);
    std::vector<std::vector<Cyclotomic>> gram = {
        {two, a, zero}, {a, two, none}, {zero, none, two}};
    GroupSpec spec;
    spec.name = "H3";
    spec.rank = 3;
    spec.generators = pairing_generators(gram);
    spec.expected_order = 120;
    spec.expected_degrees = {2, 6, 10};
    return spec;
}

GroupSpec spec_I2(unsigned m) {
    if (m < 2 || m > 12) bad_name("I2(" + std::to_string(m) + ")", "m out of range");
    const Cyclotomic b = -(Cyclotomic::zeta(2 * m) + Cyclotomic::zeta(2 * m, -1));
    const Cyclotomic two(2L);
    GroupSpec spec;
    spec.name = "I2(" + std::to_string(m) + ")";
    spec.rank = 2;
    spec.generators = pairing_generators({{two, b}, {b, two}});
    spec.expected_order = 2 * m;
    spec.expected_degrees = {2, m};
    std::sort(spec.expected_degrees.begin(), spec.expected_degrees.end());
    return spec;
}

GroupSpec spec_ST4() {
    const Cyclotomic w = Cyclotomic::zeta(3);
    const Cyclotomic w2 = w * w;
    const Rational third(1, 3);
    GroupSpec spec;
    spec.name = "ST4";
    spec.rank = 2;
    spec.generators.push_back(CMatrix::from_rows({
        {Cyclotomic(1L), Cyclotomic(0L)},
        {Cyclotomic(0L), w2},
    }));
    spec.generators.push_back(CMatrix::from_rows({
        {(w2 - w) * Cyclotomic(third), Cyclotomic(1L)},
        {Cyclotomic(-2L) * w2 * Cyclotomic(third), (Cyclotomic(2L) + w2) * Cyclotomic(third)},
    }));
    spec.expected_order = 24;
    spec.expected_degrees = {4, 6};
    return spec;
}

GroupSpec spec_G_family(const std::string& name, unsigned de, unsigned e, unsigned n) {
    if (de == 0 || e == 0 || n == 0) bad_name(name, "parameters must be positive");
    if (de % e != 0) bad_name(name, "e must divide de");
    if (de < 2) bad_name(name, "de must be at least 2");
    const unsigned d = de / e;
    if (n == 1 && d < 2) bad_name(name, "G(e,e,1) is the trivial group");

    GroupSpec spec;
    spec.name = "G(" + std::to_string(de) + "," + std::to_string(e) + "," + std::to_string(n) + ")";
    spec.rank = n;
    if (d > 1) spec.generators.push_back(diag_first(n, Cyclotomic::zeta(d, -1)));
    if (e > 1 && n >= 2) spec.generators.push_back(swap_block(n, 0, 1, Cyclotomic::zeta(de)));
    for (unsigned i = 0; i + 1 < n; ++i)
        spec.generators.push_back(swap_block(n, i, i + 1, Cyclotomic(1L)));

    spec.expected_order = int_pow(de, n) * factorial(n) / e;
    for (unsigned k = 1; k < n; ++k) spec.expected_degrees.push_back(k * de);
    spec.expected_degrees.push_back(n * de / e);
    std::sort(spec.expected_degrees.begin(), spec.expected_degrees.end());
    return spec;
}

} // namespace

GroupSpec catalog_spec(const std::string& name) {
    if (name == "G2") return spec_G2();
    if (name == "F4") return spec_F4();
    if (name == "H3") return spec_H3();
    if (name == "ST4") return spec_ST4();

    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D') &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
        unsigned n = 0;
        if (!parse_uint(name.substr(1), n)) bad_name(name, "bad rank");
        if (name[0] == 'A') {
            if (n < 1 || n > 5) bad_name(name, "rank out of range");
            return spec_A(n);
        }
        if (name[0] == 'B') {
            if (n < 2 || n > 4) bad_name(name, "rank out of range");
            return spec_B(n);
        }
        if (n != 4) bad_name(name, "only D4 is in the catalog");
        return spec_D4();
    }

    if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
        unsigned m = 0;
        if (!parse_uint(name.substr(3, name.size() - 4), m)) bad_name(name, "bad parameter");
        return spec_I2(m);
    }

    if (name.rfind("G(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(2, name.size() - 3);
        std::vector<std::string> parts;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        unsigned de = 0, e = 0, n = 0;
        if (parts.size() != 3 || !parse_uint(parts[0], de) || !parse_uint(parts[1], e) ||
            !parse_uint(parts[2], n))
            bad_name(name, "expected G(<de>,<e>,<n>)");
        return spec_G_family(name, de, e, n);
    }

    bad_name(name, "unrecognized name");
}

ReflectionGroup build_catalog_group(const std::string& name, std::size_t max_order) {
    return ReflectionGroup::build(catalog_spec(name), max_order);
}

} // namespace crg
