#pragma once

// Exact rational scalar backed by GMP.  Values are kept canonical at all
// times: lowest terms, denominator > 0, zero is 0/1.  mpq_class maintains
// this invariant for every arithmetic result; constructors canonicalize.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "crg/errors.hpp"

namespace crg {

using Int = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw arithmetic_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact integer value; caller must ensure is_integer().
    Int to_integer() const {
        if (!is_integer()) throw arithmetic_error("rational: not an integer: " + str());
        return v_.get_num();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw arithmetic_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw arithmetic_error("rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned long e) const {
        Rational r(1), base(*this);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Rendered "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const {
        std::size_t h = hash_mpz(v_.get_num());
        return h * 1000003u ^ hash_mpz(v_.get_den());
    }

private:
    static std::size_t hash_mpz(const mpz_class& z) {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = static_cast<std::size_t>(p->_mp_size);
        const int n = std::abs(p->_mp_size);
        for (int i = 0; i < n; ++i)
            h = h * 1099511628211ULL ^ static_cast<std::size_t>(p->_mp_d[i]);
        return h;
    }

    mpq_class v_;
};

} // namespace crg

template <>
struct std::hash<crg::Rational> {
    std::size_t operator()(const crg::Rational& r) const { return r.hash(); }
};
