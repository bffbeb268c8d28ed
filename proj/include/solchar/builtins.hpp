#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solchar/group.hpp"

namespace solchar {

GroupPtr cyclic(std::uint64_t n);
GroupPtr abelian(std::vector<std::uint64_t> const &invariants);
/// Dihedral group of order 2n acting on n points.
GroupPtr dihedral(std::uint64_t order);
/// Affine maps x -> ax + b of F_p with a in the order-q subgroup; q | p-1.
GroupPtr frobenius(std::uint64_t p, std::uint64_t q);
/// Heisenberg group mod p (p odd): order p^3, exponent p.
GroupPtr extraspecial(std::uint64_t p);
/// p^{1+2} extended by C_q acting irreducibly on the Frattini quotient,
/// through an order-q element of SL_2(p) without eigenvalues in F_p.
GroupPtr fullyramified(std::uint64_t p, std::uint64_t q, std::size_t cap = kDefaultOrderCap);
/// GL_2(3) acting on the 8 nonzero vectors of F_3^2.
GroupPtr gl23();
GroupPtr direct_product(GroupPtr const &a, GroupPtr const &b, std::size_t cap = kDefaultOrderCap);

/// Builds a group from an expression such as "fullyramified(5,3)" or
/// "direct_product(fullyramified(5,3),cyclic(5))".
GroupPtr group_from_name(std::string const &expr, std::size_t cap = kDefaultOrderCap);

/// Reads {"name", "degree", "generators": [[cycle, ...], ...]} with
/// 1-based cycle points.
GroupPtr group_from_json_text(std::string const &text, std::size_t cap = kDefaultOrderCap);
GroupPtr group_from_file(std::string const &path, std::size_t cap = kDefaultOrderCap);

/// A name expression or, failing that, a path to a group file.
GroupPtr resolve_group(std::string const &spec, std::size_t cap = kDefaultOrderCap);

} // namespace solchar
