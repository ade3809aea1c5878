#include "crg/matrix.hpp"

#include "crg/errors.hpp"
#include "crg/numutil.hpp"

namespace crg {

CMatrix CMatrix::identity(unsigned n, unsigned order) {
    CMatrix m(n, order);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1), order);
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    const unsigned n = static_cast<unsigned>(rows.size());
    CMatrix m(n, 1);
    for (unsigned i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw arithmetic_error("matrix: ragged row list");
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m.embedded(m.entry_order());
}

unsigned CMatrix::entry_order() const {
    uint64_t m = 1;
    for (const auto& x : e_) m = lcm_u64(m, x.order());
    return static_cast<unsigned>(m);
}

CMatrix CMatrix::embedded(unsigned target) const {
    CMatrix m(n_, target);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].embedded(target);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw arithmetic_error("matrix: size mismatch in product");
    const unsigned n = a.n_;
    CMatrix c(n, 1);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Cyclotomic acc = a.at(i, 0) * b.at(0, j);
            for (unsigned k = 1; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw arithmetic_error("matrix: size mismatch in sum");
    CMatrix c(a.n_, 1);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw arithmetic_error("matrix: size mismatch in difference");
    CMatrix c(a.n_, 1);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
}

Cyclotomic CMatrix::trace() const {
    if (n_ == 0) return Cyclotomic();
    Cyclotomic acc = at(0, 0);
    for (unsigned i = 1; i < n_; ++i) acc += at(i, i);
    return acc;
}

CMatrix CMatrix::pow(unsigned long e) const {
    CMatrix r = identity(n_, entry_order());
    CMatrix base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

std::size_t CMatrix::hash() const {
    std::size_t h = n_;
    for (const auto& x : e_) h = h * 1099511628211ULL ^ x.hash();
    return h;
}

std::string CMatrix::str() const {
    std::string s = "[";
    for (unsigned i = 0; i < n_; ++i) {
        s += i ? "; " : "";
        for (unsigned j = 0; j < n_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
    }
    return s + "]";
}

std::vector<Cyclotomic> power_traces(const CMatrix& m, unsigned upto) {
    std::vector<Cyclotomic> p;
    p.reserve(upto);
    CMatrix acc = m;
    for (unsigned k = 1; k <= upto; ++k) {
        p.push_back(acc.trace());
        if (k < upto) acc = acc * m;
    }
    return p;
}

std::vector<Cyclotomic> elementary_traces(const CMatrix& m) {
    const unsigned n = m.size();
    const std::vector<Cyclotomic> p = power_traces(m, n);
    std::vector<Cyclotomic> e(n + 1, Cyclotomic(1L));
    for (unsigned i = 1; i <= n; ++i) {
        Cyclotomic acc = Cyclotomic(0L);
        for (unsigned k = 1; k <= i; ++k) {
            Cyclotomic term = e[i - k] * p[k - 1];
            if (k % 2 == 0) term = -term;
            acc += term;
        }
        e[i] = acc * Cyclotomic(Rational(Int(1), Int(i)));
    }
    return e;
}

UniPoly<Cyclotomic> charpoly(const CMatrix& m) {
    const unsigned n = m.size();
    const std::vector<Cyclotomic> e = elementary_traces(m);
    std::vector<Cyclotomic> c(n + 1, Cyclotomic(0L));
    for (unsigned i = 0; i <= n; ++i) {
        Cyclotomic v = e[i];
        if (i % 2 == 1) v = -v;
        c[n - i] = v;
    }
    return UniPoly<Cyclotomic>(std::move(c));
}

Cyclotomic det(const CMatrix& m) { return elementary_traces(m).back(); }

namespace {

// Fraction-free forward elimination; returns the pivot count.  `key_out`, if
// non-null, receives the first pivot row before elimination ran past it.
unsigned eliminate(const CMatrix& m, std::vector<Cyclotomic>* key_out) {
    const unsigned n = m.size();
    std::vector<std::vector<Cyclotomic>> a(n);
    for (unsigned i = 0; i < n; ++i) {
        a[i].reserve(n);
        for (unsigned j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
    }
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[rank], a[piv]);
        if (key_out && rank == 0) *key_out = a[0];
        const Cyclotomic& pv = a[rank][col];
        for (unsigned r = rank + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Cyclotomic f = a[r][col];
            for (unsigned j = col; j < n; ++j)
                a[r][j] = a[r][j] * pv - a[rank][j] * f;
        }
        ++rank;
    }
    return rank;
}

} // namespace

unsigned rank(const CMatrix& m) { return eliminate(m, nullptr); }

std::vector<Cyclotomic> row_space_key(const CMatrix& m) {
    std::vector<Cyclotomic> row;
    const unsigned r = eliminate(m, &row);
    if (r != 1) throw arithmetic_error("matrix: row space key requires rank one");
    unsigned lead = 0;
    while (row[lead].is_zero()) ++lead;
    const Cyclotomic inv = row[lead].inverse();
    for (auto& x : row) x = (x * inv).embedded(m.entry_order());
    return row;
}

} // namespace crg
