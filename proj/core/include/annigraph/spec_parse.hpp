#pragma once

#include <string_view>

#include "annigraph/group.hpp"

namespace annigraph {

/// Parse a group description:
///   moduli:n1,n2,...      direct sum of Z/n_i, any n_i >= 2
///   p^a:P^A               cyclic Z/P^A, P prime
///   plist:P^A1,P^A2,P^A3  rank-3 p-group, one prime, exponents ascending
/// Errors carry the offending position; non-prime bases in the p-forms throw
/// NonPrimeBase.
FiniteAbelianGroup parse_group_spec(std::string_view spec);

}  // namespace annigraph
