#pragma once

// Finite reflection groups as fully enumerated matrix groups.  Elements are
// indexed 0..|W|-1 in breadth-first discovery order (identity first, then
// products with the distinguished generators, ties by generator position), so
// the indexing is deterministic for a fixed spec.  All multiplicative
// structure is exposed through index arithmetic backed by right-multiplication
// tables; matrices are kept for rank/trace/charpoly queries.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crg/matrix.hpp"
#include "crg/rational.hpp"

namespace crg {

struct GroupSpec {
    std::string name;                        // canonical catalog name
    unsigned rank = 0;                       // n = matrix dimension
    std::vector<CMatrix> generators;         // distinguished reflections, in order
    Int expected_order = 0;                  // |W| predicted by the catalog
    std::vector<unsigned> expected_degrees;  // invariant degrees, ascending
};

struct Hyperplane {
    std::vector<Cyclotomic> key;        // normalized row-space line of (s - 1)
    unsigned e = 2;                     // order of the pointwise fixator
    unsigned distinguished = 0;         // element index of the generator s_H
                                        // whose nontrivial eigenvalue is zeta_e
    std::vector<unsigned> members;      // reflections fixing this hyperplane, ascending
    std::vector<unsigned> power_class;  // conjugacy class of s_H^j for j = 0..e-1
};

class ReflectionGroup {
public:
    // Enumerate the group; throws resource_error when the predicted or
    // discovered size exceeds max_order, build_error when the closure
    // contradicts the catalog data.
    static ReflectionGroup build(const GroupSpec& spec, std::size_t max_order);

    const GroupSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    unsigned rank() const { return spec_.rank; }
    std::size_t order() const { return elements_.size(); }
    unsigned ambient_order() const { return ambient_; }

    const CMatrix& matrix(unsigned g) const { return elements_[g]; }

    // Element index of the s-th distinguished generator.
    unsigned generator(unsigned s) const { return gen_index_[s]; }

    unsigned mul(unsigned a, unsigned b) const;
    unsigned inverse(unsigned g) const { return inv_[g]; }
    unsigned power(unsigned g, long e) const;
    unsigned element_order(unsigned g) const;
    // lcm of all element orders.
    unsigned exponent() const { return exponent_; }

    // T[g] = g*b for every g, computed in one pass.
    std::vector<unsigned> right_translation(unsigned b) const;

    std::size_t num_classes() const { return classes_.size(); }
    unsigned class_of(unsigned g) const { return class_of_[g]; }
    unsigned class_rep(unsigned k) const { return classes_[k][0]; }
    std::size_t class_size(unsigned k) const { return classes_[k].size(); }
    const std::vector<unsigned>& class_members(unsigned k) const { return classes_[k]; }
    // Class containing the inverses of class k.
    unsigned inverse_class(unsigned k) const { return inverse_class_[k]; }

    const std::vector<unsigned>& reflections() const { return reflections_; }
    std::size_t num_reflections() const { return reflections_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    std::size_t num_hyperplanes() const { return hyperplanes_.size(); }
    // Number of reflections lying in each conjugacy class.
    const std::vector<std::size_t>& reflections_per_class() const { return refl_per_class_; }

    bool constant_fixator_order() const;
    // The common e_H; throws build_error when the fixator orders are mixed.
    unsigned common_fixator_order() const;

    unsigned coxeter() const { return coxeter_; }
    unsigned coxeter_number() const { return h_; }

private:
    ReflectionGroup() = default;

    void enumerate(std::size_t max_order);
    void build_inverses();
    void build_classes();
    void find_reflections();
    void group_hyperplanes();
    void build_coxeter();

    std::vector<unsigned> word(unsigned g) const;

    GroupSpec spec_;
    unsigned ambient_ = 1;
    std::vector<CMatrix> elements_;
    std::vector<std::vector<unsigned>> rmul_;  // [g][gen] -> g*gen
    std::vector<std::vector<unsigned>> lmul_inv_;  // [gen][g] -> gen^-1 * g
    std::vector<unsigned> parent_, pgen_;
    std::vector<unsigned> inv_;
    std::vector<unsigned> gen_index_;

    std::vector<unsigned> class_of_;
    std::vector<std::vector<unsigned>> classes_;
    std::vector<unsigned> inverse_class_;

    std::vector<unsigned> reflections_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<std::size_t> refl_per_class_;

    unsigned coxeter_ = 0;
    unsigned h_ = 1;
    unsigned exponent_ = 1;
};

} // namespace crg
