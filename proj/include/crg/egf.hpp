#pragma once

// Truncated exponential generating functions in divided-power form: a series
// is the vector (a_0, ..., a_L) with a_k = k! * [t^k] f(t), so extracting the
// k-th divided coefficient needs no factorial fixups afterwards.  In this
// representation the product rule is the binomial convolution
//   (f*g)_k = sum_j C(k,j) f_j g_{k-j}.

#include <vector>

#include "crg/errors.hpp"
#include "crg/numutil.hpp"
#include "crg/rational.hpp"

namespace crg {

class DPSeries {
public:
    explicit DPSeries(unsigned truncation) : c_(truncation + 1, Rational(0)) {}

    // e^{rate*t}: divided coefficients rate^k.
    static DPSeries exp_series(const Rational& rate, unsigned truncation) {
        DPSeries s(truncation);
        s.c_[0] = Rational(1);
        for (unsigned k = 1; k <= truncation; ++k) s.c_[k] = s.c_[k - 1] * rate;
        return s;
    }

    static DPSeries one(unsigned truncation) {
        DPSeries s(truncation);
        s.c_[0] = Rational(1);
        return s;
    }

    unsigned truncation() const { return static_cast<unsigned>(c_.size()) - 1; }

    // a_k = k! * [t^k] f.
    const Rational& coeff(unsigned k) const {
        if (k >= c_.size()) throw arithmetic_error("series: coefficient beyond truncation");
        return c_[k];
    }

    Rational& at(unsigned k) { return c_[k]; }

    friend DPSeries operator+(const DPSeries& a, const DPSeries& b) {
        DPSeries s(check_same(a, b));
        for (unsigned k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }

    friend DPSeries operator-(const DPSeries& a, const DPSeries& b) {
        DPSeries s(check_same(a, b));
        for (unsigned k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
        return s;
    }

    friend DPSeries operator*(const DPSeries& a, const DPSeries& b) {
        DPSeries s(check_same(a, b));
        for (unsigned k = 0; k < s.c_.size(); ++k) {
            Rational acc(0);
            for (unsigned j = 0; j <= k; ++j) {
                if (a.c_[j].is_zero() || b.c_[k - j].is_zero()) continue;
                acc += Rational(binomial(k, j)) * a.c_[j] * b.c_[k - j];
            }
            s.c_[k] = acc;
        }
        return s;
    }

    DPSeries scaled(const Rational& f) const {
        DPSeries s(truncation());
        for (unsigned k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] * f;
        return s;
    }

    DPSeries pow(unsigned e) const {
        DPSeries r = one(truncation());
        DPSeries base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const DPSeries& a, const DPSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DPSeries& a, const DPSeries& b) { return !(a == b); }

private:
    static unsigned check_same(const DPSeries& a, const DPSeries& b) {
        if (a.c_.size() != b.c_.size())
            throw arithmetic_error("series: mixed truncation orders");
        return a.truncation();
    }

    std::vector<Rational> c_;
};

} // namespace crg
