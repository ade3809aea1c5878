#include "crg/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "crg/numutil.hpp"

namespace crg {

namespace {

using RatPoly = UniPoly<Rational>;

// Phi_m by repeated exact division: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
RatPoly cyclotomic_poly(unsigned m, std::map<unsigned, RatPoly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<Rational> xm(m + 1, Rational(0));
    xm[0] = Rational(-1);
    xm[m] = Rational(1);
    RatPoly num{std::vector<Rational>(xm)};
    for (unsigned d : divisors(m)) {
        if (d == m) continue;
        RatPoly q, r;
        RatPoly::divmod(num, cyclotomic_poly(d, memo), q, r);
        if (!r.is_zero()) throw arithmetic_error("cyclotomic polynomial division left a remainder");
        num = q;
    }
    memo.emplace(m, num);
    return num;
}

std::unique_ptr<CycloContext> build_context(unsigned m) {
    auto ctx = std::make_unique<CycloContext>();
    ctx->order = m;
    ctx->phi = euler_phi(m);
    std::map<unsigned, RatPoly> memo;
    ctx->cyclo_poly = cyclotomic_poly(m, memo);
    if (ctx->cyclo_poly.degree() != static_cast<long>(ctx->phi))
        throw arithmetic_error("cyclotomic polynomial degree mismatch");

    // Row for x^phi: x^phi = -(low-order part of Phi_m); each further power
    // is a shift with one reduction step.
    const unsigned phi = ctx->phi;
    if (m > phi) {
        std::vector<Rational> row(phi);
        for (unsigned i = 0; i < phi; ++i) row[i] = -ctx->cyclo_poly.coeff(i);
        ctx->red_rows.push_back(row);
        for (unsigned k = phi + 1; k < m; ++k) {
            const std::vector<Rational>& prev = ctx->red_rows.back();
            std::vector<Rational> next(phi, Rational(0));
            const Rational top = prev[phi - 1];
            for (unsigned i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
            if (!top.is_zero())
                for (unsigned i = 0; i < phi; ++i)
                    next[i] += top * ctx->red_rows[0][i];
            ctx->red_rows.push_back(std::move(next));
        }
    }
    return ctx;
}

} // namespace

const CycloContext* cyclo_context(unsigned order) {
    if (order == 0) throw arithmetic_error("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, build_context(order)).first;
    return it->second.get();
}

Cyclotomic::Cyclotomic(long n) : ctx_(cyclo_context(1)), c_{Rational(n)} {}
Cyclotomic::Cyclotomic(const Rational& r) : ctx_(cyclo_context(1)), c_{r} {}
Cyclotomic::Cyclotomic(const Rational& r, unsigned order)
    : ctx_(cyclo_context(order)), c_(ctx_->phi, Rational(0)) {
    c_[0] = r;
}

Cyclotomic Cyclotomic::zero(unsigned order) { return Cyclotomic(Rational(0), order); }
Cyclotomic Cyclotomic::one(unsigned order) { return Cyclotomic(Rational(1), order); }

Cyclotomic Cyclotomic::zeta(unsigned order, long k) {
    const CycloContext* ctx = cyclo_context(order);
    long e = k % static_cast<long>(order);
    if (e < 0) e += order;
    std::vector<Rational> raw(order, Rational(0));
    raw[static_cast<std::size_t>(e)] = Rational(1);
    return reduce(ctx, std::move(raw));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
    const CycloContext* ctx = cyclo_context(order);
    if (coeffs.size() != ctx->phi)
        throw arithmetic_error("cyclotomic coefficient vector has wrong length");
    return Cyclotomic(ctx, std::move(coeffs));
}

Cyclotomic Cyclotomic::reduce(const CycloContext* ctx, std::vector<Rational> raw) {
    std::vector<Rational> c(ctx->phi, Rational(0));
    const std::size_t top = std::min<std::size_t>(raw.size(), ctx->order);
    for (std::size_t k = 0; k < top; ++k) {
        if (raw[k].is_zero()) continue;
        if (k < ctx->phi) {
            c[k] += raw[k];
        } else {
            const std::vector<Rational>& row = ctx->red_rows[k - ctx->phi];
            for (unsigned i = 0; i < ctx->phi; ++i)
                c[i] += raw[k] * row[i];
        }
    }
    return Cyclotomic(ctx, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_integer() const { return is_rational() && c_[0].is_integer(); }

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw arithmetic_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

Int Cyclotomic::to_integer() const { return to_rational().to_integer(); }

Cyclotomic Cyclotomic::embedded(unsigned target) const {
    const unsigned m = ctx_->order;
    if (target == m) return *this;
    if (target % m != 0)
        throw arithmetic_error("cyclotomic embedding target must be a multiple of the order");
    const CycloContext* ctx = cyclo_context(target);
    const unsigned stride = target / m;
    std::vector<Rational> raw(target, Rational(0));
    for (unsigned k = 0; k < ctx_->phi; ++k)
        if (!c_[k].is_zero()) raw[static_cast<std::size_t>(k) * stride % target] += c_[k];
    return reduce(ctx, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Cyclotomic(ctx_, std::move(c));
}

namespace {
unsigned common_order(const Cyclotomic& a, const Cyclotomic& b) {
    return static_cast<unsigned>(lcm_u64(a.order(), b.order()));
}
} // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = common_order(a, b);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = common_order(a, b);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = common_order(a, b);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    std::vector<Rational> raw(m, Rational(0));
    const unsigned phi = x.ctx_->phi;
    for (unsigned i = 0; i < phi; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (y.c_[j].is_zero()) continue;
            raw[(i + j) % m] += x.c_[i] * y.c_[j];
        }
    }
    return Cyclotomic::reduce(x.ctx_, std::move(raw));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = common_order(a, b);
    return a.embedded(m).c_ == b.embedded(m).c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw arithmetic_error("cyclotomic: inverse of zero");
    if (is_rational()) return Cyclotomic(c_[0].inverse(), ctx_->order);
    // u*a + v*Phi_m = gcd = nonzero constant, so a^-1 = u / gcd mod Phi_m.
    UniPoly<Rational> a{std::vector<Rational>(c_)};
    UniPoly<Rational> u, v;
    UniPoly<Rational> g = poly_ext_gcd(a, ctx_->cyclo_poly, u, v);
    if (g.degree() != 0)
        throw arithmetic_error("cyclotomic: reducible modulus while inverting");
    const Rational scale = g.coeff(0).inverse();
    std::vector<Rational> raw(ctx_->order, Rational(0));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(u.degree()); ++k)
        raw[k] = u.coeff(k) * scale;
    return reduce(ctx_, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
    const unsigned m = ctx_->order;
    std::vector<Rational> raw(m, Rational(0));
    for (unsigned k = 0; k < ctx_->phi; ++k)
        if (!c_[k].is_zero()) raw[(m - k) % m] += c_[k];
    return reduce(ctx_, std::move(raw));
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic r = Cyclotomic::one(ctx_->order);
    Cyclotomic base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Cyclotomic::str() const {
    std::string s;
    const unsigned m = ctx_->order;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[k].str();
        if (k >= 1) {
            s += "*z(" + std::to_string(m) + ")";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = ctx_->order;
    for (const auto& x : c_)
        h = h * 1099511628211ULL ^ x.hash();
    return h;
}

} // namespace crg
