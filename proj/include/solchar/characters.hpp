#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "solchar/cyclotomic.hpp"
#include "solchar/group.hpp"
#include "solchar/subgroup.hpp"

namespace solchar {

/// A class function, one value per conjugacy class in the group's class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  Cyclotomic const &operator[](std::size_t c) const { return values[c]; }
  Cyclotomic const &at(Elem g) const { return values[group->class_of(g)]; }
  Cyclotomic degree() const { return values[0]; }
  std::int64_t int_degree() const { return values[0].to_rational().num; }

  ClassFunction conj() const;
  friend ClassFunction operator+(ClassFunction const &a, ClassFunction const &b);
  friend ClassFunction operator-(ClassFunction const &a, ClassFunction const &b);
  friend ClassFunction operator*(ClassFunction const &a, ClassFunction const &b);
  friend ClassFunction operator*(ClassFunction const &a, Rational const &r);
  friend bool operator==(ClassFunction const &a, ClassFunction const &b);
};

ClassFunction trivial_character(GroupPtr const &G);
ClassFunction regular_character(GroupPtr const &G);

/// (1/|G|) sum_g a(g) b(g^-1), exactly.
Rational inner_product(ClassFunction const &a, ClassFunction const &b);

/// Images of values under all embeddings Q(zeta_e) -> F_P for a prime
/// P = 1 mod e above 2^61. An algebraic integer whose power basis
/// coefficients are below P/2 in absolute value is zero exactly when all
/// of its images vanish; `bound` tracks such a coefficient bound.
class SplitEmbedding {
public:
  explicit SplitEmbedding(std::uint32_t e);

  std::uint32_t conductor() const { return e_; }
  std::uint64_t prime() const { return p_; }
  std::size_t width() const { return units_.size(); }

  /// Images of an algebraic integer whose conductor divides e.
  std::vector<std::uint64_t> image(Cyclotomic const &x) const;
  /// Coefficient sup-norm of x promoted to conductor e.
  std::uint64_t sup_norm(Cyclotomic const &x) const;
  /// Bound on the coefficient sup-norm of a product of two elements with
  /// the given sup-norms.
  std::uint64_t product_bound(std::uint64_t a, std::uint64_t b) const;
  /// The rational integer with the given images; throws LiftFailure if the
  /// images disagree or the bound does not certify the result.
  std::int64_t recover_integer(std::vector<std::uint64_t> const &img, std::uint64_t bound) const;

  std::uint64_t mulm(std::uint64_t a, std::uint64_t b) const
  {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p_);
  }
  std::uint64_t addm(std::uint64_t a, std::uint64_t b) const
  {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

private:
  std::uint32_t e_;
  std::uint64_t p_;
  std::uint32_t phi_;
  std::uint64_t reduction_max_ = 1;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint64_t> zeta_pow_; // zeta^j for j < e
};

struct TableOptions {
  std::uint64_t prime = 0; // 0 picks the smallest admissible prime
  std::uint64_t seed = 0x5eed;
};

/// Irreducible characters of G. Row 0 is the trivial character; rows are
/// ordered by degree, then by values.
class CharacterTable {
public:
  static std::shared_ptr<CharacterTable const> compute(GroupPtr const &G, TableOptions const &opt = {});

  GroupPtr const &group() const { return G_; }
  std::size_t size() const { return irr_.size(); }
  ClassFunction const &operator[](std::size_t i) const { return irr_[i]; }
  std::vector<ClassFunction> const &irreducibles() const { return irr_; }
  std::uint64_t modular_prime() const { return ell_; }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }

  /// Multiplicity of irreducible i in a character, via the split embedding.
  std::int64_t multiplicity(std::size_t i, ClassFunction const &chi) const;
  /// All multiplicities at once.
  std::vector<std::int64_t> decompose(ClassFunction const &chi) const;
  /// Values may have any conductor; a wider embedding is built once when
  /// they do not fit the table's.
  std::vector<std::vector<std::int64_t>> decompose_all(std::vector<ClassFunction> const &chis) const;

  /// |G| [chi_i, chi_j] computed through the split embedding, certified.
  std::int64_t scaled_row_product(std::size_t i, std::size_t j) const;
  /// sum_chi chi(g_r) conj(chi(g_s)), certified.
  std::int64_t column_product(std::size_t r, std::size_t s) const;

  SplitEmbedding const &embedding() const { return *emb_; }

private:
  GroupPtr G_;
  std::vector<ClassFunction> irr_;
  std::vector<std::int64_t> degrees_;
  std::uint64_t ell_ = 0;
  std::shared_ptr<SplitEmbedding> emb_;
  // images_[i][c] = embedding images of irr_[i][c]
  std::vector<std::vector<std::vector<std::uint64_t>>> images_;
  std::vector<std::vector<std::uint64_t>> norms_;

  void prepare_images();
};

using TablePtr = std::shared_ptr<CharacterTable const>;

/// A subgroup of G as a group, with the fusion of its classes into G.
struct EmbeddedSubgroup {
  Subgroup subgroup;
  Embedding embedding;
  std::vector<std::size_t> fusion; // H-class -> G-class

  GroupPtr const &group() const { return embedding.group; }
};

EmbeddedSubgroup embed_subgroup(Subgroup const &H);

ClassFunction restrict_to(ClassFunction const &chi, EmbeddedSubgroup const &H);
ClassFunction induce(ClassFunction const &theta, EmbeddedSubgroup const &H);
/// (1_U)^G: value at g is |C_G(g)| |g^G n U| / |U|.
ClassFunction permutation_character(GroupPtr const &G, ElementSet const &U);

/// chi(x) chi(x^-1)
Cyclotomic norm_squared(ClassFunction const &chi, Elem x);
ElementSet kernel(ClassFunction const &chi);
/// Elements with |chi(g)| = chi(1).
ElementSet center_of(ClassFunction const &chi);
/// lcm of the orders of elements where chi does not vanish.
std::uint64_t n_chi(ClassFunction const &chi);
/// [chi|_N, chi|_N]_N for a normal subgroup given by members.
Rational norm_on(ClassFunction const &chi, ElementSet const &N);

} // namespace solchar
