#pragma once

// Counting factorizations of the distinguished generator product into ordered
// tuples of reflections, by five routes that share no intermediate machinery:
//
//   dp        transfer-matrix walk over the group elements,
//   spectral  eigenvalue expansion over the irreducible table rows,
//   exterior  the same expansion collapsed onto the exterior powers of the
//             natural representation, with traces taken from the group,
//   closed    the exterior expansion with every trace replaced by its closed
//             form in the reflection and hyperplane counts,
//   egf       divided coefficients of a difference-of-exponentials power.
//
// Exact agreement of all five is the headline consistency statement; each
// route checks its own divisibility by the group order and throws
// consistency_error with a witness when a quotient fails to be an integer.

#include <string>
#include <vector>

#include "crg/characters.hpp"
#include "crg/group.hpp"

namespace crg {

enum class CountMethod { dp, spectral, exterior, closed, egf };

std::string method_name(CountMethod m);
// Accepts the five method names; throws usage_error otherwise.
CountMethod parse_method(const std::string& s);
const std::vector<CountMethod>& all_methods();

// counts[l] = number of length-l ordered reflection factorizations of the
// generator product, for l = 0..max_l.
std::vector<Int> count_dp(const ReflectionGroup& W, unsigned max_l);
std::vector<Int> count_spectral(const ReflectionGroup& W, const CharacterTable& table,
                                unsigned max_l);
std::vector<Int> count_exterior(const ReflectionGroup& W, unsigned max_l);
std::vector<Int> count_closed(const ReflectionGroup& W, unsigned max_l);
std::vector<Int> count_egf(const ReflectionGroup& W, unsigned max_l);

// Dispatcher; builds the character table itself when the method needs one.
std::vector<Int> count(const ReflectionGroup& W, CountMethod method, unsigned max_l);

// Reflection-set sum of the i-th exterior-power trace row, in closed form:
// |R| (C(n,i) - C(n-1,i-1)) - |R*| C(n-1,i-1).
Int wedge_sum_closed(unsigned n, const Int& reflections, const Int& hyperplanes, unsigned i);

} // namespace crg
