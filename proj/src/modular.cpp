#include "crg/modular.hpp"

#include <algorithm>

#include "crg/errors.hpp"

namespace crg {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw arithmetic_error("inverse of 0 mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    const std::vector<std::uint64_t> qs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : qs)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw arithmetic_error("no primitive root mod " + std::to_string(p));
}

FpMatrix::FpMatrix(unsigned rows, unsigned cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(std::size_t(rows) * cols, 0) {
    if (p < 2 || p >= (std::uint64_t(1) << 32))
        throw arithmetic_error("modulus out of range: " + std::to_string(p));
}

FpMatrix FpMatrix::identity(unsigned n, std::uint64_t p) {
    FpMatrix m(n, n, p);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw arithmetic_error("modular matrix shape mismatch");
    FpMatrix out(rows_, rhs.cols_, p_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const std::uint64_t v = at(i, k);
            if (v == 0) continue;
            for (unsigned j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = (out.at(i, j) + v * rhs.at(k, j)) % p_;
        }
    return out;
}

FpMatrix FpMatrix::minus_scalar(std::uint64_t lambda) const {
    if (rows_ != cols_) throw arithmetic_error("minus_scalar needs a square matrix");
    FpMatrix out = *this;
    for (unsigned i = 0; i < rows_; ++i) out.at(i, i) = sub(out.at(i, i), lambda % p_, p_);
    return out;
}

namespace {

// Reduce to row echelon form in place; returns the pivot column of each pivot
// row, in order.
std::vector<unsigned> echelonize(FpMatrix& m) {
    const std::uint64_t p = m.mod();
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
        unsigned piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        const std::uint64_t inv = mod_inv(m.at(row, col), p);
        for (unsigned j = col; j < m.cols(); ++j) m.at(row, j) = mul(m.at(row, j), inv, p);
        for (unsigned r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const std::uint64_t f = m.at(r, col);
            for (unsigned j = col; j < m.cols(); ++j)
                m.at(r, j) = sub(m.at(r, j), mul(f, m.at(row, j), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

FpMatrix kernel_basis(FpMatrix m) {
    const std::uint64_t p = m.mod();
    const unsigned n = m.cols();
    const std::vector<unsigned> pivots = echelonize(m);
    std::vector<char> is_pivot(n, 0);
    for (unsigned c : pivots) is_pivot[c] = 1;
    std::vector<unsigned> free_cols;
    for (unsigned c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix basis(n, static_cast<unsigned>(free_cols.size()), p);
    for (unsigned k = 0; k < free_cols.size(); ++k) {
        const unsigned fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (unsigned r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], k) = sub(0, m.at(r, fc), p);
    }
    return basis;
}

FpMatrix solve_in_span(const FpMatrix& B, const FpMatrix& C) {
    if (B.rows() != C.rows() || B.mod() != C.mod())
        throw arithmetic_error("solve_in_span shape mismatch");
    const std::uint64_t p = B.mod();
    const unsigned n = B.rows(), d = B.cols(), w = C.cols();
    FpMatrix aug(n, d + w, p);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < d; ++j) aug.at(i, j) = B.at(i, j);
        for (unsigned j = 0; j < w; ++j) aug.at(i, d + j) = C.at(i, j);
    }
    const std::vector<unsigned> pivots = echelonize(aug);
    for (unsigned r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= d)
            throw consistency_error("column outside the invariant span during eigenspace splitting");
    if (pivots.size() != d)
        throw consistency_error("dependent basis columns during eigenspace splitting");
    FpMatrix X(d, w, p);
    for (unsigned r = 0; r < d; ++r)
        for (unsigned j = 0; j < w; ++j) X.at(r, j) = aug.at(r, d + j);
    // Rows of the echelon form beyond the pivot count must carry no residue.
    for (unsigned r = d; r < n; ++r)
        for (unsigned j = 0; j < w; ++j)
            if (aug.at(r, d + j) != 0)
                throw consistency_error("column outside the invariant span during eigenspace splitting");
    return X;
}

std::vector<std::uint64_t> charpoly_mod(FpMatrix m) {
    if (m.rows() != m.cols()) throw arithmetic_error("charpoly needs a square matrix");
    const std::uint64_t p = m.mod();
    const unsigned n = m.rows();

    // Similarity-reduce to upper Hessenberg form.
    for (unsigned col = 0; col + 2 < n; ++col) {
        unsigned piv = col + 1;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col + 1, j));
            for (unsigned i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, col + 1));
        }
        const std::uint64_t inv = mod_inv(m.at(col + 1, col), p);
        for (unsigned row = col + 2; row < n; ++row) {
            const std::uint64_t f = mul(m.at(row, col), inv, p);
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                m.at(row, j) = sub(m.at(row, j), mul(f, m.at(col + 1, j), p), p);
            for (unsigned i = 0; i < n; ++i)
                m.at(i, col + 1) = (m.at(i, col + 1) + mul(f, m.at(i, row), p)) % p;
        }
    }

    // d_k(x) = (x - a_kk) d_{k-1}(x) - sum_i a_ik (prod subdiagonals) d_{i-1}(x),
    // with 1-based leading blocks; d_0 = 1.
    std::vector<std::vector<std::uint64_t>> d(n + 1);
    d[0] = {1};
    for (unsigned k = 1; k <= n; ++k) {
        const std::uint64_t diag = m.at(k - 1, k - 1);
        std::vector<std::uint64_t> cur(k + 1, 0);
        for (unsigned t = 0; t < k; ++t) {
            cur[t + 1] = (cur[t + 1] + d[k - 1][t]) % p;
            cur[t] = sub(cur[t], mul(diag, d[k - 1][t], p), p);
        }
        std::uint64_t prod = 1;
        for (unsigned i = k - 1; i >= 1; --i) {
            prod = mul(prod, m.at(i, i - 1), p);
            const std::uint64_t coeff = mul(m.at(i - 1, k - 1), prod, p);
            if (coeff == 0) continue;
            for (unsigned t = 0; t < d[i - 1].size(); ++t)
                cur[t] = sub(cur[t], mul(coeff, d[i - 1][t], p), p);
        }
        d[k] = std::move(cur);
    }
    return d[n];
}

std::uint64_t poly_eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x,
                            std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (mul(acc, x, p) + *it % p) % p;
    return acc;
}

} // namespace crg
