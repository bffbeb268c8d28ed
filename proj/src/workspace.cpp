#include "solchar/workspace.hpp"

#include <chrono>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

double monotonic_seconds()
{
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::shared_ptr<Workspace> Workspace::create(GroupPtr G, Caps const &caps)
{
  if (G->order() > caps.max_order)
    throw Error(ErrorKind::ResourceCap, G->name() + " has order " + std::to_string(G->order()) +
                                            " above the cap " + std::to_string(caps.max_order));
  auto w = std::shared_ptr<Workspace>(new Workspace());
  w->started_ = monotonic_seconds();
  w->caps_ = caps;
  w->G_ = std::move(G);
  try {
    w->L_ = Lattice::build(w->G_, caps.max_subgroup_classes);
  } catch (Error const &e) {
    if (e.kind() == ErrorKind::CapExceeded)
      throw Error(ErrorKind::ResourceCap, e.what());
    throw;
  }
  w->T_ = CharacterTable::compute(w->G_);
  w->cache_ = std::make_unique<TableCache>(w->L_, w->T_);
  w->inter_ = std::make_unique<Intersections>(w->L_);
  return w;
}

void Workspace::check_budget() const
{
  if (caps_.seconds_per_group > 0 && monotonic_seconds() - started_ > caps_.seconds_per_group)
    throw Error(ErrorKind::ResourceCap, "wall-clock budget exhausted for " + G_->name());
}

bool Workspace::quasi_primitive(std::size_t i) const
{
  auto it = qp_.find(i);
  if (it == qp_.end())
    it = qp_.emplace(i, is_quasi_primitive(*cache_, chi(i)).holds).first;
  return it->second;
}

bool Workspace::strongly_irreducible(std::size_t i) const
{
  auto it = si_.find(i);
  if (it == si_.end())
    it = si_.emplace(i, is_strongly_irreducible(*cache_, chi(i))).first;
  return it->second;
}

bool Workspace::pi_solvable(std::size_t i) const
{
  for (auto p : prime_divisors(static_cast<std::uint64_t>(degree(i))))
    if (!L_->is_p_solvable(p))
      return false;
  return true;
}

ElementSet const &Workspace::center_of_character(std::size_t i) const
{
  auto it = center_.find(i);
  if (it == center_.end())
    it = center_.emplace(i, center_of(chi(i))).first;
  return it->second;
}

ElementSet const &Workspace::kernel_of_character(std::size_t i) const
{
  auto it = kernel_.find(i);
  if (it == kernel_.end())
    it = kernel_.emplace(i, kernel(chi(i))).first;
  return it->second;
}

std::vector<Cyclotomic> const &Workspace::norm_values(std::size_t i) const
{
  auto it = norms_.find(i);
  if (it == norms_.end()) {
    std::vector<Cyclotomic> v;
    for (std::size_t c = 0; c < G_->num_classes(); ++c)
      v.push_back(chi(i)[c] * chi(i)[G_->inverse_class(c)]);
    it = norms_.emplace(i, std::move(v)).first;
  }
  return it->second;
}

std::vector<std::int64_t> const &Workspace::permutation_values(std::size_t c) const
{
  auto it = perm_.find(c);
  if (it == perm_.end()) {
    auto const &U = (*L_)[c].representative.members;
    std::vector<std::int64_t> v;
    for (auto const &cl : G_->classes()) {
      std::int64_t meet = 0;
      for (Elem x : cl.members)
        meet += U.contains(x);
      v.push_back(static_cast<std::int64_t>(cl.centralizer_order) * meet / static_cast<std::int64_t>(U.count()));
    }
    it = perm_.emplace(c, std::move(v)).first;
  }
  return it->second;
}

std::vector<std::size_t> const &Workspace::permutation_equation_classes(std::size_t i) const
{
  auto it = equation_.find(i);
  if (it != equation_.end())
    return it->second;
  std::vector<std::size_t> out;
  auto const &nv = norm_values(i);
  std::vector<std::int64_t> ints;
  bool integral = true;
  for (auto const &v : nv) {
    if (!v.is_integer()) {
      integral = false;
      break;
    }
    ints.push_back(v.to_rational().num);
  }
  if (integral) {
    auto const d2 = static_cast<std::size_t>(degree(i) * degree(i));
    for (std::size_t c = 0; c < L_->size(); ++c)
      if (G_->order() == d2 * (*L_)[c].order() && permutation_values(c) == ints)
        out.push_back(c);
  }
  return equation_.emplace(i, std::move(out)).first->second;
}

std::optional<IntersectionWitness> const &Workspace::regular_witness(std::size_t c) const
{
  auto it = regular_.find(c);
  if (it == regular_.end()) {
    std::optional<IntersectionWitness> w;
    try {
      w = inter_->is_regular((*L_)[c].representative.members);
    } catch (Error const &e) {
      // Without the solvability condition U is not a regular intersection.
      if (e.kind() != ErrorKind::SolvabilityHypothesisFailed)
        throw;
    }
    it = regular_.emplace(c, std::move(w)).first;
  }
  return it->second;
}

std::vector<IntersectionWitness> const &Workspace::frak_M0(std::size_t i) const
{
  auto it = m0_.find(i);
  if (it == m0_.end())
    it = m0_.emplace(i, inter_->frak_M0(chi(i))).first;
  return it->second;
}

Workspace::Sub const &Workspace::subgroup_workspace(std::size_t c) const
{
  auto &slot = subs_[c];
  if (!slot) {
    auto sub = std::make_unique<Sub>();
    sub->embedded = embed_subgroup((*L_)[c].representative);
    Caps inner = caps_;
    inner.seconds_per_group = 0;
    sub->ws = create(sub->embedded.group(), inner);
    sub->from_parent.assign(G_->order(), -1);
    auto const &tp = sub->embedded.embedding.to_parent;
    for (std::size_t k = 0; k < tp.size(); ++k)
      sub->from_parent[tp[k]] = static_cast<std::int64_t>(k);
    slot = std::move(sub);
  }
  return *slot;
}

ClassFunction Workspace::restrict_character(std::size_t i, std::size_t c) const
{
  return restrict_to(chi(i), subgroup_workspace(c).embedded);
}

ElementSet Workspace::to_subgroup(Sub const &sub, ElementSet const &s) const
{
  ElementSet out(sub.ws->group()->order());
  for (Elem x : s.elements()) {
    if (sub.from_parent[x] < 0)
      throw Error(ErrorKind::NotSubgroup, "set is not contained in the subgroup");
    out.insert(static_cast<Elem>(sub.from_parent[x]));
  }
  return out;
}

ElementSet Workspace::from_subgroup(Sub const &sub, ElementSet const &s) const
{
  ElementSet out(G_->order());
  for (Elem x : s.elements())
    out.insert(sub.embedded.embedding.to_parent[x]);
  return out;
}

} // namespace solchar
