#include "solchar/predicates.hpp"

#include <cmath>

#include "solchar/error.hpp"

namespace solchar {

TableCache::TableCache(LatticePtr lattice, TablePtr table) : lattice_(std::move(lattice)), table_(std::move(table))
{
  if (lattice_->group() != table_->group())
    throw Error(ErrorKind::GroupMismatch, "lattice and character table belong to different groups");
}

SubgroupTable const &TableCache::of_class(std::size_t c) const
{
  if (c >= lattice_->size())
    throw Error(ErrorKind::NotSubgroup, "subgroup class index out of range");
  Slot *slot;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto &s = slots_[c];
    if (!s)
      s = std::make_unique<Slot>();
    slot = s.get();
  }
  std::call_once(slot->once, [&] {
    auto st = std::make_unique<SubgroupTable>();
    st->subgroup = embed_subgroup((*lattice_)[c].representative);
    st->table = CharacterTable::compute(st->subgroup.group());
    std::vector<ClassFunction> restricted;
    for (auto const &chi : table_->irreducibles())
      restricted.push_back(restrict_to(chi, st->subgroup));
    st->restriction = st->table->decompose_all(restricted);
    slot->value = std::move(st);
  });
  return *slot->value;
}

std::size_t TableCache::row_of(ClassFunction const &chi) const
{
  if (chi.group != group())
    throw Error(ErrorKind::GroupMismatch, "character belongs to a different group");
  for (std::size_t i = 0; i < table_->size(); ++i)
    if ((*table_)[i] == chi)
      return i;
  throw Error(ErrorKind::NotIrreducible, "class function is not an irreducible character");
}

std::int64_t restriction_norm(TableCache const &cache, std::size_t row, std::size_t c)
{
  return norm_on(cache.table()[row], cache.lattice()[c].representative.members).num;
}

std::size_t constituent_count(TableCache const &cache, std::size_t row, std::size_t c)
{
  std::size_t n = 0;
  for (auto m : cache.of_class(c).restriction[row])
    n += m != 0;
  return n;
}

QuasiPrimitivity is_quasi_primitive(TableCache const &cache, ClassFunction const &chi)
{
  std::size_t const row = cache.row_of(chi);
  ElementSet const Z = center_of(chi);
  for (std::size_t c : cache.lattice().normal_classes()) {
    auto const &N = cache.lattice()[c].representative.members;
    if (N.is_subset_of(Z))
      continue;
    // [chi_N, chi_N] = e^2 t with t conjugate constituents.
    std::int64_t const n = restriction_norm(cache, row, c);
    if (n == 1)
      continue;
    auto const e = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (e * e != n || constituent_count(cache, row, c) != 1)
      return {false, c};
  }
  return {};
}

Primitivity is_primitive(TableCache const &cache, ClassFunction const &chi)
{
  std::size_t const row = cache.row_of(chi);
  auto const order = static_cast<std::int64_t>(cache.group()->order());
  std::int64_t const d = cache.table().degree(row);
  for (std::size_t c : cache.lattice().maximal_classes()) {
    auto const index = order / static_cast<std::int64_t>(cache.lattice()[c].order());
    if (d % index != 0)
      continue;
    auto const &st = cache.of_class(c);
    // [psi^G, chi] = [psi, chi|_M] > 0 with equal degrees forces psi^G = chi.
    for (std::size_t j = 0; j < st.table->size(); ++j)
      if (st.table->degree(j) * index == d && st.restriction[row][j] > 0)
        return {false, c, j};
  }
  return {};
}

bool is_strongly_irreducible(TableCache const &cache, ClassFunction const &chi)
{
  std::size_t const row = cache.row_of(chi);
  std::int64_t const d = cache.table().degree(row);
  for (std::size_t c : cache.lattice().normal_classes()) {
    std::int64_t const norm = restriction_norm(cache, row, c);
    if (norm != 1 && norm != d * d)
      return false;
  }
  return true;
}

} // namespace solchar
