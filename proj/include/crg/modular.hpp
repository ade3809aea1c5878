#pragma once

// Dense linear algebra over a prime field F_p with p < 2^32, sized for the
// class-matrix eigenvector computations: products, kernels, solving inside a
// column span, and characteristic polynomials via Hessenberg reduction.

#include <cstdint>
#include <vector>

namespace crg {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);
// Inverse of a nonzero residue; throws arithmetic_error on a zero argument.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
// Smallest generator of the multiplicative group of F_p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

class FpMatrix {
public:
    FpMatrix(unsigned rows, unsigned cols, std::uint64_t p);
    static FpMatrix identity(unsigned n, std::uint64_t p);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    std::uint64_t mod() const { return p_; }

    std::uint64_t& at(unsigned i, unsigned j) { return a_[std::size_t(i) * cols_ + j]; }
    std::uint64_t at(unsigned i, unsigned j) const { return a_[std::size_t(i) * cols_ + j]; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    // this - lambda * I, for square matrices.
    FpMatrix minus_scalar(std::uint64_t lambda) const;

private:
    unsigned rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

// Columns form a basis of the kernel; a matrix with zero columns means the
// kernel is trivial.
FpMatrix kernel_basis(FpMatrix m);

// Solve B * X = C where the columns of B are independent; throws
// consistency_error when some column of C lies outside the span.
FpMatrix solve_in_span(const FpMatrix& B, const FpMatrix& C);

// Monic characteristic polynomial, coefficients ascending (c[n] = 1).
std::vector<std::uint64_t> charpoly_mod(FpMatrix m);

std::uint64_t poly_eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x,
                            std::uint64_t p);

} // namespace crg
