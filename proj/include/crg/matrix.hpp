#pragma once

// Dense square matrices over the exact cyclotomic scalars, plus the linear
// algebra the group and character layers need: products, power traces,
// characteristic polynomials via Newton's identities, elementary symmetric
// functions of eigenvalues (traces of exterior powers), fraction-free rank,
// and a canonical key for the row space of a rank-one matrix.
//
// Matrices used as hash keys must keep every entry at one shared cyclotomic
// order; products and sums of same-order matrices stay at that order, so the
// group closure maintains the invariant for free once generators and the
// identity are normalized with embedded().

#include <cstddef>
#include <string>
#include <vector>

#include "crg/cyclotomic.hpp"
#include "crg/polynomial.hpp"

namespace crg {

class CMatrix {
public:
    CMatrix() : n_(0) {}
    // Zero matrix with entries at the given cyclotomic order.
    CMatrix(unsigned n, unsigned order) : n_(n), e_(std::size_t(n) * n, Cyclotomic::zero(order)) {}

    static CMatrix identity(unsigned n, unsigned order);
    static CMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

    unsigned size() const { return n_; }

    Cyclotomic& at(unsigned i, unsigned j) { return e_[std::size_t(i) * n_ + j]; }
    const Cyclotomic& at(unsigned i, unsigned j) const { return e_[std::size_t(i) * n_ + j]; }

    // Largest cyclotomic order appearing among the entries (their lcm).
    unsigned entry_order() const;
    // Every entry re-embedded at `target`, which must be a multiple of each
    // entry's order.
    CMatrix embedded(unsigned target) const;

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

    Cyclotomic trace() const;
    CMatrix pow(unsigned long e) const;

    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    // Combines entry hashes; callers must have normalized entries to a shared
    // order for hash consistency with ==.
    std::size_t hash() const;

    std::string str() const;

private:
    unsigned n_;
    std::vector<Cyclotomic> e_;
};

// p_1, ..., p_upto with p_k = trace(m^k).
std::vector<Cyclotomic> power_traces(const CMatrix& m, unsigned upto);

// e_0, ..., e_n: elementary symmetric functions of the eigenvalues, i.e. the
// traces of the exterior powers of m, recovered from power traces by Newton's
// identities  i*e_i = sum_{k=1..i} (-1)^{k-1} e_{i-k} p_k.
std::vector<Cyclotomic> elementary_traces(const CMatrix& m);

// Monic characteristic polynomial  x^n - e_1 x^{n-1} + ... + (-1)^n e_n.
UniPoly<Cyclotomic> charpoly(const CMatrix& m);

Cyclotomic det(const CMatrix& m);

// Rank by fraction-free (cross-multiplication) elimination; no inverses taken.
unsigned rank(const CMatrix& m);

// For a rank-one matrix: the spanning row of its row space, scaled so the
// first nonzero entry is 1.  Two rank-one matrices have equal keys exactly
// when they have the same kernel hyperplane.
std::vector<Cyclotomic> row_space_key(const CMatrix& m);

} // namespace crg

template <>
struct std::hash<crg::CMatrix> {
    std::size_t operator()(const crg::CMatrix& m) const { return m.hash(); }
};
