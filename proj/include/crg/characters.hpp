#pragma once

// Exact irreducible character tables, computed by splitting the class algebra
// into common eigenvectors over a prime field and lifting the values to
// cyclotomic integers through eigenvalue multiplicities.  On top of the table:
// trace rows of the natural matrix representation and its exterior powers,
// invariant degrees recovered from the graded dimension series of the
// fixed-point algebra, and graded multiplicity polynomials in the coinvariant
// grading.

#include <cstdint>
#include <vector>

#include "crg/cyclotomic.hpp"
#include "crg/group.hpp"

namespace crg {

struct CharacterTable {
    // degrees[r] equals rows[r] evaluated at the identity class.
    std::vector<Int> degrees;
    // rows[r][k] = value of the r-th irreducible on class k.  Rows are sorted
    // by (degree, then a lexicographic key on the values) so the table is
    // reproducible across runs.
    std::vector<std::vector<Cyclotomic>> rows;
    // Modulus the eigenvector splitting ran at (diagnostic).
    std::uint64_t prime = 0;
};

// Throws consistency_error when no admissible modulus yields a coherent
// table (which would indicate corrupted group data).
CharacterTable character_table(const ReflectionGroup& W);

// (1/|W|) sum_k |C_k| a_k conj(b_k).
Cyclotomic inner_product(const ReflectionGroup& W, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b);

// Per-class traces of the natural matrix representation.
std::vector<Cyclotomic> natural_character(const ReflectionGroup& W);

// Rows i = 0..rank of per-class traces of the i-th exterior power of the
// natural representation, obtained from power-trace identities on each class
// representative.
std::vector<std::vector<Cyclotomic>> wedge_rows(const ReflectionGroup& W);

// Sum of a class-function row over the full set of reflections; the result is
// always a rational integer for character rows (the reflection set is closed
// under every field automorphism), and the conversion throws arithmetic_error
// with the offending value otherwise.
Int sum_over_reflections(const ReflectionGroup& W, const std::vector<Cyclotomic>& row);

// Index of the row whose values are the complex conjugates of row r; throws
// consistency_error when the table has no such row.
unsigned conjugate_row(const CharacterTable& table, unsigned r);

// Invariant degrees recovered by deflating the graded dimension series of the
// invariant algebra; throws build_error when the series does not factor the
// way a reflection arrangement forces it to.
std::vector<unsigned> invariant_degrees(const ReflectionGroup& W);

// Graded multiplicity polynomial of one table row in the coinvariant grading:
// nonnegative integer coefficients, value at 1 equal to the row's degree.
struct GradedMultiplicity {
    std::vector<Int> coeffs;
    Int value_at_one() const;
    // q d/dq at q = 1: the sum of the graded occurrence degrees.
    Int weighted_degree_sum() const;
};

// One polynomial per table row, in row order.
std::vector<GradedMultiplicity> graded_multiplicities(const ReflectionGroup& W,
                                                      const CharacterTable& table);

// Multiplicity of the j-th eigencharacter of the fixator of hyperplane h in
// the restriction of a character row: (1/e) sum_t row[power_class[t]]
// zeta_e^{-jt}.  Throws arithmetic_error when the value is not an integer.
Int fixator_multiplicity(const Hyperplane& h, const std::vector<Cyclotomic>& row, unsigned j);

} // namespace crg
