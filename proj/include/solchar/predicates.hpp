#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "solchar/characters.hpp"
#include "solchar/lattice.hpp"

namespace solchar {

/// Character table of one subgroup-class representative, with the
/// decomposition of every restricted irreducible of the parent.
struct SubgroupTable {
  EmbeddedSubgroup subgroup;
  TablePtr table;
  /// restriction[i][j] = [chi_i|_H, psi_j]_H
  std::vector<std::vector<std::int64_t>> restriction;
};

/// Lazily built subgroup tables keyed by lattice class. Concurrent requests
/// for the same class block on a single builder.
class TableCache {
public:
  TableCache(LatticePtr lattice, TablePtr table);

  GroupPtr const &group() const { return lattice_->group(); }
  Lattice const &lattice() const { return *lattice_; }
  CharacterTable const &table() const { return *table_; }
  TablePtr const &table_ptr() const { return table_; }

  SubgroupTable const &of_class(std::size_t c) const;

  /// Row of the parent table equal to chi; throws NotIrreducible otherwise.
  std::size_t row_of(ClassFunction const &chi) const;

private:
  struct Slot {
    std::once_flag once;
    std::unique_ptr<SubgroupTable> value;
  };
  LatticePtr lattice_;
  TablePtr table_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<Slot>> slots_;
};

struct QuasiPrimitivity {
  bool holds = true;
  std::optional<std::size_t> normal_class; // N with reducible non-homogeneous restriction
};

struct Primitivity {
  bool holds = true;
  std::optional<std::size_t> maximal_class; // M with psi^G = chi
  std::optional<std::size_t> psi;           // row of M's table
};

QuasiPrimitivity is_quasi_primitive(TableCache const &cache, ClassFunction const &chi);
Primitivity is_primitive(TableCache const &cache, ClassFunction const &chi);
bool is_strongly_irreducible(TableCache const &cache, ClassFunction const &chi);

/// [chi_i|_N, chi_i|_N] for a normal class c, from G's table alone.
std::int64_t restriction_norm(TableCache const &cache, std::size_t row, std::size_t c);
/// Number of distinct irreducible constituents of chi_i restricted to class c.
std::size_t constituent_count(TableCache const &cache, std::size_t row, std::size_t c);

} // namespace solchar
