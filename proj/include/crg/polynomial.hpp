#pragma once

// Dense univariate polynomials over an exact scalar type.  The zero
// polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.  T must provide field arithmetic, is_zero(),
// and equality (Rational and Cyclotomic both qualify).

#include <cstddef>
#include <string>
#include <vector>

#include "crg/errors.hpp"

namespace crg {

template <typename T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const T& a) { return UniPoly(std::vector<T>{a}); }

    // x^k with unit coefficient.
    static UniPoly monomial(const T& one, std::size_t k) {
        std::vector<T> c(k + 1, one - one);
        c[k] = one;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }

    const T& leading() const {
        if (c_.empty()) throw arithmetic_error("polynomial: leading coefficient of zero");
        return c_.back();
    }

    // Coefficient of x^k, defaulting to zero beyond the stored degree.
    T coeff(std::size_t k) const {
        if (k < c_.size()) return c_[k];
        return zero_like();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), a.zero_or(b));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), a.zero_or(b));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] - b.c_[i];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }

    UniPoly scaled(const T& s) const {
        std::vector<T> c(c_);
        for (auto& x : c) x = x * s;
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    T eval(const T& x) const {
        if (c_.empty()) throw arithmetic_error("polynomial: eval of zero needs a zero scalar; use coeff()");
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<T> c;
        c.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i] * T(static_cast<long>(i)));
        return UniPoly(std::move(c));
    }

    // Euclidean division; remainder has degree < degree(divisor).
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        if (b.is_zero()) throw arithmetic_error("polynomial: division by zero");
        std::vector<T> rem(a.c_);
        const long db = b.degree();
        std::vector<T> quot;
        if (static_cast<long>(rem.size()) - 1 >= db)
            quot.assign(rem.size() - db, b.c_[0] - b.c_[0]);
        const T lead_inv = T(1) / b.leading();
        for (long d = static_cast<long>(rem.size()) - 1; d >= db; --d) {
            if (rem[d] == b.c_[0] - b.c_[0]) continue;
            T f = rem[d] * lead_inv;
            quot[d - db] = f;
            for (long j = 0; j <= db; ++j)
                rem[d - db + j] = rem[d - db + j] - f * b.c_[j];
        }
        q = UniPoly(std::move(quot));
        r = UniPoly(std::move(rem));
    }

    std::string str(const std::string& var) const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == c_[0] - c_[0]) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    T zero_like() const {
        if (!c_.empty()) return c_[0] - c_[0];
        return T(0);
    }

    T zero_or(const UniPoly& other) const {
        if (!c_.empty()) return c_[0] - c_[0];
        if (!other.c_.empty()) return other.c_[0] - other.c_[0];
        return T(0);
    }

    std::vector<T> c_;
};

// Extended gcd over a field: returns g = gcd(a, b) along with u, v such that
// u*a + v*b = g.  Used for inverses modulo an irreducible polynomial.
template <typename T>
UniPoly<T> poly_ext_gcd(const UniPoly<T>& a, const UniPoly<T>& b, UniPoly<T>& u, UniPoly<T>& v) {
    UniPoly<T> r0 = a, r1 = b;
    UniPoly<T> u0 = UniPoly<T>::constant(T(1)), u1;
    UniPoly<T> v0, v1 = UniPoly<T>::constant(T(1));
    while (!r1.is_zero()) {
        UniPoly<T> q, r;
        UniPoly<T>::divmod(r0, r1, q, r);
        UniPoly<T> u2 = u0 - q * u1;
        UniPoly<T> v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    u = u0;
    v = v0;
    return r0;
}

} // namespace crg
