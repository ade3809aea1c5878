#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crg/matrix.hpp"

using crg::CMatrix;
using crg::Cyclotomic;
using crg::Rational;

namespace {

CMatrix rat_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Cyclotomic>> c;
    for (const auto& r : rows) {
        c.emplace_back();
        for (long v : r) c.back().emplace_back(v);
    }
    return CMatrix::from_rows(c);
}

// Evaluate a monic polynomial at a matrix argument (Horner).
CMatrix eval_at(const crg::UniPoly<Cyclotomic>& p, const CMatrix& m) {
    const unsigned n = m.size();
    const unsigned ord = m.entry_order();
    CMatrix acc(n, ord);
    for (long k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        const Cyclotomic ck = p.coeff(static_cast<std::size_t>(k));
        for (unsigned i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return acc;
}

} // namespace

TEST_CASE("product, identity, trace") {
    const CMatrix a = rat_matrix({{1, 2}, {3, 4}});
    const CMatrix b = rat_matrix({{0, 1}, {1, 0}});
    const CMatrix ab = a * b;
    CHECK(ab == rat_matrix({{2, 1}, {4, 3}}));
    CHECK(a * CMatrix::identity(2, 1) == a);
    CHECK(a.trace() == Cyclotomic(5L));
    CHECK(a.pow(0) == CMatrix::identity(2, 1));
    CHECK(a.pow(2) == a * a);
}

TEST_CASE("reflection matrix sanity") {
    // Order-two map fixing a line: s = [[-1, 1], [0, 1]].
    const CMatrix s = rat_matrix({{-1, 1}, {0, 1}});
    CHECK(s * s == CMatrix::identity(2, 1));
    const CMatrix d = s - CMatrix::identity(2, 1);
    CHECK(crg::rank(d) == 1);
    const auto key = crg::row_space_key(d);
    REQUIRE(key.size() == 2);
    CHECK(key[0] == Cyclotomic(1L));
    CHECK(key[1] == Cyclotomic(Rational(-1, 2)));
    // Nontrivial eigenvalue read off the trace.
    CHECK(s.trace() - Cyclotomic(1L) == Cyclotomic(-1L));
}

TEST_CASE("rank extremes") {
    CHECK(crg::rank(CMatrix::identity(3, 1)) == 3);
    CHECK(crg::rank(CMatrix(3, 1)) == 0);
    const CMatrix m = rat_matrix({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}});
    CHECK(crg::rank(m) == 1);
    CHECK_THROWS_AS(crg::row_space_key(rat_matrix({{1, 0}, {0, 1}})), crg::arithmetic_error);
}

TEST_CASE("determinant is multiplicative over Q(zeta_5)") {
    const Cyclotomic z = Cyclotomic::zeta(5);
    const CMatrix a = CMatrix::from_rows({
        {z, Cyclotomic(1L), Cyclotomic(0L)},
        {Cyclotomic(2L), z * z, Cyclotomic(1L)},
        {Cyclotomic(0L), Cyclotomic(Rational(1, 2)), z.conj()},
    });
    const CMatrix b = CMatrix::from_rows({
        {Cyclotomic(1L), z, z},
        {Cyclotomic(0L), Cyclotomic(3L), Cyclotomic(1L)},
        {z, Cyclotomic(0L), Cyclotomic(1L)},
    });
    CHECK(crg::det(a * b) == crg::det(a) * crg::det(b));
    CHECK(crg::det(CMatrix::identity(3, 5)) == Cyclotomic(1L));
}

TEST_CASE("power traces and elementary symmetric functions") {
    const Cyclotomic w = Cyclotomic::zeta(3);
    const CMatrix d = CMatrix::from_rows({
        {w, Cyclotomic(0L)},
        {Cyclotomic(0L), w * w},
    });
    const auto p = crg::power_traces(d, 3);
    CHECK(p[0] == w + w * w);
    CHECK(p[1] == w * w + w);
    CHECK(p[2] == Cyclotomic(2L));
    const auto e = crg::elementary_traces(d);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Cyclotomic(1L));
    CHECK(e[1] == Cyclotomic(-1L));
    CHECK(e[2] == Cyclotomic(1L));
    CHECK(crg::det(d) == Cyclotomic(1L));
}

TEST_CASE("characteristic polynomial anchors") {
    // Rotation of order three: x^2 + x + 1.
    const CMatrix c = rat_matrix({{0, -1}, {1, -1}});
    const auto p = crg::charpoly(c);
    REQUIRE(p.degree() == 2);
    CHECK(p.coeff(2) == Cyclotomic(1L));
    CHECK(p.coeff(1) == Cyclotomic(1L));
    CHECK(p.coeff(0) == Cyclotomic(1L));
    CHECK(c.pow(3) == CMatrix::identity(2, 1));
}

TEST_CASE("Cayley-Hamilton") {
    const Cyclotomic z = Cyclotomic::zeta(8);
    const CMatrix m = CMatrix::from_rows({
        {z, Cyclotomic(2L), Cyclotomic(0L)},
        {Cyclotomic(Rational(1, 3)), z.pow(3), Cyclotomic(1L)},
        {Cyclotomic(1L), Cyclotomic(0L), z.conj()},
    });
    const CMatrix res = eval_at(crg::charpoly(m), m);
    CHECK(res == CMatrix(3, m.entry_order()));
}

TEST_CASE("embedding and hashing at a shared order") {
    const CMatrix a = rat_matrix({{1, 0}, {0, 1}});
    const CMatrix b = a.embedded(4);
    CHECK(a == b);
    CHECK(b.entry_order() == 4);
    CHECK(b.hash() == CMatrix::identity(2, 4).hash());
}
