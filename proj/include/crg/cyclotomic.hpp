#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).  A value of order m is a
// vector of rationals in the power basis {zeta^0, ..., zeta^{phi(m)-1}} of
// Q[x]/Phi_m(x), kept reduced modulo the m-th cyclotomic polynomial.  The
// canonical form is unique for a fixed order; values of different orders are
// compared after embedding into the least common order via x -> x^(M/m).
//
// 1 + zeta_3 and zeta_6 therefore normalize to the same representation once
// both live in a common order, and conjugation (zeta -> zeta^-1) is an exact
// involution.

#include <cstddef>
#include <string>
#include <vector>

#include "crg/polynomial.hpp"
#include "crg/rational.hpp"

namespace crg {

struct CycloContext {
    unsigned order = 1;
    unsigned phi = 1;
    UniPoly<Rational> cyclo_poly;                   // Phi_m, monic, integer coefficients
    std::vector<std::vector<Rational>> red_rows;    // x^k mod Phi_m for k in [phi, order)
};

// Shared per-order context, built once and cached for the process lifetime.
const CycloContext* cyclo_context(unsigned order);

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(0L) {}
    Cyclotomic(long n);                  // rational embedded at order 1
    Cyclotomic(const Rational& r);       // rational embedded at order 1
    Cyclotomic(const Rational& r, unsigned order);

    static Cyclotomic zero(unsigned order);
    static Cyclotomic one(unsigned order);
    // zeta_order^k, canonically reduced.
    static Cyclotomic zeta(unsigned order, long k = 1);
    // Build directly from a coefficient vector of length phi(order).
    static Cyclotomic from_coeffs(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return ctx_->order; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    // The rational (resp. integer) value; throws unless is_rational()/is_integer().
    Rational to_rational() const;
    Int to_integer() const;

    // Representation of the same value in a field of order `target`, which
    // must be a multiple of order().
    Cyclotomic embedded(unsigned target) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inverse() const;
    Cyclotomic conj() const;
    Cyclotomic pow(unsigned long e) const;

    // "a0 + a1*z(m) + a2*z(m)^2" with rational coefficients "p/q"; zero terms
    // are omitted and a pure rational renders without any z(m) factor.
    std::string str() const;

    std::size_t hash() const;

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& v) { return os << v.str(); }

private:
    Cyclotomic(const CycloContext* ctx, std::vector<Rational> c) : ctx_(ctx), c_(std::move(c)) {}

    // Reduce a raw exponent vector (length = order, exponents already folded
    // mod order) to the canonical power basis.
    static Cyclotomic reduce(const CycloContext* ctx, std::vector<Rational> raw);

    const CycloContext* ctx_;
    std::vector<Rational> c_;
};

} // namespace crg

template <>
struct std::hash<crg::Cyclotomic> {
    std::size_t operator()(const crg::Cyclotomic& v) const { return v.hash(); }
};
