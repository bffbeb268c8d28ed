#include "solchar/intersections.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

Intersections::Intersections(LatticePtr lattice) : lattice_(std::move(lattice))
{
  Group const &G = *lattice_->group();
  maximal_ = lattice_->maximal_classes();
  for (std::size_t c : maximal_) {
    auto const &M = (*lattice_)[c].representative.members;
    std::vector<std::int64_t> v;
    for (auto const &cl : G.classes()) {
      std::int64_t meet = 0;
      for (Elem x : cl.members)
        meet += M.contains(x);
      v.push_back(static_cast<std::int64_t>(cl.centralizer_order) * meet / static_cast<std::int64_t>(M.count()));
    }
    perm_.emplace(c, std::move(v));
  }
}

std::size_t Intersections::index_of(std::size_t maximal_class) const
{
  return group()->order() / (*lattice_)[maximal_class].order();
}

bool Intersections::admissible(std::size_t maximal_class) const
{
  for (auto p : prime_divisors(index_of(maximal_class)))
    if (!lattice_->is_p_solvable(p))
      return false;
  return true;
}

std::vector<std::int64_t> const &Intersections::permutation_values(std::size_t maximal_class) const
{
  auto it = perm_.find(maximal_class);
  if (it == perm_.end())
    throw Error(ErrorKind::NotSubgroup, "class is not a maximal subgroup class");
  return it->second;
}

void Intersections::check_family(std::vector<std::size_t> const &classes) const
{
  std::set<std::size_t> seen;
  for (std::size_t c : classes) {
    if (!perm_.count(c))
      throw Error(ErrorKind::NotSubgroup, "class is not a maximal subgroup class");
    if (!seen.insert(c).second)
      throw Error(ErrorKind::NotSubgroup, "family repeats a maximal class");
    if (!admissible(c))
      throw Error(ErrorKind::SolvabilityHypothesisFailed, "G is not p-solvable for a prime dividing |G:M|");
  }
}

bool Intersections::is_complete_family(std::vector<std::size_t> const &classes) const
{
  check_family(classes);
  Group const &G = *group();
  std::int64_t total = 0;
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    std::int64_t v = static_cast<std::int64_t>(G.classes()[k].size());
    for (std::size_t c : classes)
      v *= perm_.at(c)[k];
    total += v;
  }
  return total == static_cast<std::int64_t>(G.order());
}

IntersectionWitness Intersections::realize(std::vector<std::size_t> const &classes) const
{
  if (!is_complete_family(classes))
    throw Error(ErrorKind::NotSubgroup, "family is not a complete intersection");
  ElementSet U = whole_group(group()).members;
  IntersectionWitness w;
  for (std::size_t c : classes) {
    std::size_t const target = U.count() / index_of(c);
    auto const &conj = (*lattice_)[c].conjugates;
    std::size_t j = 0;
    while ((U & conj[j]).count() != target)
      ++j; // exists by transitivity on the product of coset spaces
    U = U & conj[j];
    w.family.emplace_back(c, j);
  }
  w.lattice_class = lattice_->class_of(U);
  w.subgroup = make_subgroup(lattice_->group(), U);
  return w;
}

std::vector<IntersectionWitness> const &Intersections::complete_intersections() const
{
  if (complete_)
    return *complete_;
  Group const &G = *group();
  std::vector<std::size_t> pool;
  for (std::size_t c : maximal_)
    if (admissible(c))
      pool.push_back(c);

  std::map<std::size_t, IntersectionWitness> found;
  std::vector<std::size_t> chosen;
  // prod[k] = value of the product of chosen permutation characters on class k
  std::function<void(std::size_t, std::vector<std::int64_t> const &)> dfs = [&](std::size_t from,
                                                                              std::vector<std::int64_t> const &prod) {
    auto w = realize(chosen);
    found.emplace(w.lattice_class, std::move(w));
    for (std::size_t i = from; i < pool.size(); ++i) {
      auto const &pv = perm_.at(pool[i]);
      std::vector<std::int64_t> next(prod.size());
      std::int64_t total = 0;
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k] = prod[k] * pv[k];
        total += static_cast<std::int64_t>(G.classes()[k].size()) * next[k];
      }
      // Sub-families of complete families are complete, so prune here.
      if (total != static_cast<std::int64_t>(G.order()))
        continue;
      chosen.push_back(pool[i]);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  dfs(0, std::vector<std::int64_t>(G.num_classes(), 1));

  std::vector<IntersectionWitness> out;
  for (auto &kv : found)
    out.push_back(std::move(kv.second));
  complete_ = std::move(out);
  return *complete_;
}

std::optional<IntersectionWitness> Intersections::complete_witness(std::size_t lattice_class) const
{
  for (auto const &w : complete_intersections())
    if (w.lattice_class == lattice_class)
      return w;
  return std::nullopt;
}

FpModule const &Intersections::x_module_of(std::size_t maximal_class) const
{
  auto &slot = modules_[maximal_class];
  if (!slot)
    slot = std::make_unique<FpModule>(x_module(*lattice_, (*lattice_)[maximal_class].representative.members));
  return *slot;
}

bool Intersections::modules_independent(std::size_t a, std::size_t b) const
{
  auto key = std::minmax(a, b);
  auto it = independent_.find(key);
  if (it != independent_.end())
    return it->second;
  auto const &X = x_module_of(a);
  auto const &Y = x_module_of(b);
  bool ok = !is_isomorphic(X, Y) && !is_isomorphic(X, dual_module(Y));
  independent_.emplace(key, ok);
  return ok;
}

std::optional<IntersectionWitness> Intersections::is_regular(ElementSet const &U) const
{
  Group const &G = *group();
  if (!is_subgroup(G, U))
    throw Error(ErrorKind::NotSubgroup, "set is not a subgroup");
  for (auto p : prime_divisors(G.order() / U.count()))
    if (!lattice_->is_p_solvable(p))
      throw Error(ErrorKind::SolvabilityHypothesisFailed, "G is not p-solvable for a prime dividing |G:U|");
  std::size_t const cu = lattice_->class_of(U);

  // A regular family holds exactly one member of each maximal class that
  // contains a conjugate of U.
  std::vector<std::size_t> classes;
  for (std::size_t c : maximal_)
    if (lattice_->class_below(cu, c)) {
      if (!admissible(c))
        throw Error(ErrorKind::SolvabilityHypothesisFailed, "a maximal subgroup over U is not admissible");
      classes.push_back(c);
    }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!modules_independent(classes[i], classes[j]))
        return std::nullopt;

  std::vector<std::vector<std::size_t>> options;
  for (std::size_t c : classes)
    options.push_back(lattice_->conjugates_containing(c, U));

  MaximalFamily family;
  std::optional<IntersectionWitness> result;
  std::function<void(std::size_t, ElementSet const &)> dfs = [&](std::size_t i, ElementSet const &acc) {
    if (result)
      return;
    if (i == classes.size()) {
      if (acc == U) {
        IntersectionWitness w;
        w.subgroup = make_subgroup(lattice_->group(), U);
        w.lattice_class = cu;
        w.family = family;
        w.kind = IntersectionKind::Regular;
        result = std::move(w);
      }
      return;
    }
    for (std::size_t j : options[i]) {
      family.emplace_back(classes[i], j);
      dfs(i + 1, acc & (*lattice_)[classes[i]].conjugates[j]);
      family.pop_back();
      if (result)
        return;
    }
  };
  dfs(0, whole_group(group()).members);
  return result;
}

std::vector<IntersectionWitness> Intersections::frak_M(ClassFunction const &chi) const
{
  if (chi.group != group())
    throw Error(ErrorKind::GroupMismatch, "character belongs to a different group");
  if (inner_product(chi, chi) != Rational(1) || !chi.degree().is_integer() || chi.int_degree() <= 0)
    throw Error(ErrorKind::NotIrreducible, "class function is not an irreducible character");
  Group const &G = *group();
  std::vector<IntersectionWitness> out;
  for (auto const &w : complete_intersections()) {
    bool zero_free = true;
    for (Elem x : w.subgroup.members.elements())
      if (chi[G.class_of(x)].is_zero()) {
        zero_free = false;
        break;
      }
    if (zero_free)
      out.push_back(w);
  }
  return out;
}

std::vector<IntersectionWitness> Intersections::frak_M0(ClassFunction const &chi) const
{
  auto all = frak_M(chi);
  std::vector<IntersectionWitness> out;
  for (auto const &w : all) {
    bool maximal = true;
    for (auto const &v : all)
      if (v.lattice_class != w.lattice_class && lattice_->class_below(w.lattice_class, v.lattice_class))
        maximal = false;
    if (maximal)
      out.push_back(w);
  }
  return out;
}

} // namespace solchar
