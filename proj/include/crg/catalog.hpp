#pragma once

// The built-in family catalog.  Names follow the grammar
//   A<n> | B<n> | D<n> | G2 | F4 | H3 | I2(<m>) | G(<de>,<e>,<n>) | ST4
// and map to explicit generator matrices together with the expected order and
// invariant degrees, which the group builder verifies against the enumeration.

#include <string>

#include "crg/group.hpp"

namespace crg {

// Parse a catalog name and produce the generator data; throws usage_error for
// names outside the catalog or parameters off the supported ranges.
GroupSpec catalog_spec(const std::string& name);

// Parse, then enumerate, guarding against groups larger than max_order.
ReflectionGroup build_catalog_group(const std::string& name, std::size_t max_order);

} // namespace crg
