#include "solchar/serialize.hpp"

namespace solchar {

json to_json(Cyclotomic const &x)
{
  if (x.is_integer())
    return x.to_rational().num;
  return json{{"conductor", x.conductor()}, {"coefficients", x.coefficients()}, {"denominator", x.denominator()}};
}

json element_json(Group const &G, Elem g)
{
  json cycles = json::array();
  for (auto const &c : G.permutation(g).cycles()) {
    json cy = json::array();
    for (auto p : c)
      cy.push_back(p + 1);
    cycles.push_back(std::move(cy));
  }
  return cycles;
}

json subgroup_json(Subgroup const &H)
{
  json gens = json::array();
  for (Elem g : H.generators)
    gens.push_back(element_json(*H.parent, g));
  return json{{"order", H.order()}, {"generators", std::move(gens)}};
}

json witness_json(IntersectionWitness const &w)
{
  json fam = json::array();
  for (auto const &[c, j] : w.family)
    fam.push_back(json{{"class", c}, {"conjugate", j}});
  return json{{"subgroup", subgroup_json(w.subgroup)},
              {"lattice_class", w.lattice_class},
              {"family", std::move(fam)},
              {"kind", w.kind == IntersectionKind::Regular ? "regular" : "complete"}};
}

json module_json(FpModule const &X)
{
  return json{{"prime", X.prime}, {"dim", X.dim}, {"generators", X.action}};
}

} // namespace solchar
