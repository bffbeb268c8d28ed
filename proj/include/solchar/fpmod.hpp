#pragma once

#include <optional>
#include <vector>

#include "solchar/lattice.hpp"
#include "solchar/modular.hpp"

namespace solchar {

/// An elementary abelian section K/L of G as a right F_p G-module. Vectors
/// are rows; g acts by v -> v action[g], matching conjugation x -> x^g.
struct FpModule {
  GroupPtr group;
  std::uint64_t prime = 0;
  std::size_t dim = 0;
  std::vector<fp::Mat> action; // one matrix per generator of `group`

  // Section data, empty for derived modules such as duals.
  ElementSet K, L;
  std::vector<Elem> basis; // coset representatives of a basis of K/L

  /// Matrix of an arbitrary element, as a product of generator matrices
  /// along a word for g.
  fp::Mat matrix_of(Elem g) const;
};

/// The module K/L with G acting by conjugation.
FpModule section_module(GroupPtr const &G, ElementSet const &K, ElementSet const &L);

/// X_M: the unique minimal normal subgroup of G/Core_G(M) as a section.
FpModule x_module(Lattice const &lattice, ElementSet const &M);

FpModule dual_module(FpModule const &X);

/// Basis of Hom_G(X, Y): matrices T with A_g T = T B_g for all generators.
std::vector<fp::Mat> intertwiners(FpModule const &X, FpModule const &Y);

/// An invertible intertwiner, if the modules are isomorphic. Modules over
/// different primes are never isomorphic.
std::optional<fp::Mat> isomorphism(FpModule const &X, FpModule const &Y);
bool is_isomorphic(FpModule const &X, FpModule const &Y);

/// No proper nonzero invariant subspace. Spins every projective point.
bool is_simple(FpModule const &X);

/// Largest p^d accepted by is_simple.
inline constexpr std::uint64_t kSpinLimit = 100000;

} // namespace solchar
