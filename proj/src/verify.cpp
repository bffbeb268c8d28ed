#include "solchar/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

char const *to_string(Status s) noexcept
{
  switch (s) {
  case Status::Pass:
    return "Pass";
  case Status::Fail:
    return "Fail";
  case Status::HypothesesNotSatisfied:
    return "HypothesesNotSatisfied";
  case Status::Vacuous:
    return "Vacuous";
  }
  return "?";
}

json to_json(VerificationReport const &r)
{
  json j{{"theorem", r.theorem},   {"group", r.group},           {"instance", r.instance},
         {"status", to_string(r.status)}, {"nontrivial", r.nontrivial}, {"payload", r.payload},
         {"seconds", r.seconds}};
  j["character"] = r.character ? json(*r.character) : json(nullptr);
  return j;
}

std::vector<std::string> const &theorem_ids()
{
  static std::vector<std::string> const ids{"A", "B", "C", "E", "F", "G", "H", "I", "J", "K", "M", "N", "O", "R3"};
  return ids;
}

namespace {

std::string key(char const *fmt, std::size_t a, std::size_t b = 0)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

std::string chi_key(std::size_t i) { return key("chi=%04zu", i); }

json char_json(Workspace const &ws, std::size_t i) { return json{{"index", i}, {"degree", ws.degree(i)}}; }

class Collector {
public:
  Collector(std::string theorem, Workspace const &ws) : theorem_(std::move(theorem)), ws_(ws) {}

  void run(std::string instance, std::optional<std::size_t> chi, bool nontrivial,
           std::function<bool(json &)> const &body)
  {
    ws_.check_budget();
    double const t0 = monotonic_seconds();
    VerificationReport r;
    r.theorem = theorem_;
    r.group = ws_.group()->name();
    r.instance = std::move(instance);
    r.character = chi;
    r.nontrivial = nontrivial;
    if (chi)
      r.payload["character"] = char_json(ws_, *chi);
    r.status = body(r.payload) ? Status::Pass : Status::Fail;
    r.seconds = monotonic_seconds() - t0;
    out_.push_back(std::move(r));
  }

  void skip(json why) { skipped_.push_back(std::move(why)); }
  void skip_character(std::size_t i, std::string const &reason)
  {
    json j = char_json(ws_, i);
    j["reason"] = reason;
    skip(std::move(j));
  }
  void note(std::string const &k, json v) { notes_[k] = std::move(v); }

  std::vector<VerificationReport> finish()
  {
    if (out_.empty() || !skipped_.empty()) {
      VerificationReport r;
      r.theorem = theorem_;
      r.group = ws_.group()->name();
      r.status = out_.empty() ? Status::Vacuous : Status::HypothesesNotSatisfied;
      r.instance = out_.empty() ? "vacuous" : "hypotheses";
      r.payload = notes_;
      r.payload["instances"] = skipped_;
      out_.push_back(std::move(r));
    }
    std::sort(out_.begin(), out_.end(),
              [](VerificationReport const &a, VerificationReport const &b) { return a.instance < b.instance; });
    return std::move(out_);
  }

private:
  std::string theorem_;
  Workspace const &ws_;
  std::vector<VerificationReport> out_;
  json skipped_ = json::array();
  json notes_ = json::object();
};

bool odd(std::uint64_t n) { return n % 2 == 1; }

std::uint64_t index_of(Workspace const &ws, ElementSet const &H) { return ws.group()->order() / H.count(); }

std::vector<std::size_t> regular_equation_classes(Workspace const &ws, std::size_t i)
{
  std::vector<std::size_t> out;
  for (std::size_t c : ws.permutation_equation_classes(i))
    if (ws.regular_witness(c))
      out.push_back(c);
  return out;
}

json lattice_class_json(Workspace const &ws, std::size_t c)
{
  json j = subgroup_json(ws.lattice()[c].representative);
  j["lattice_class"] = c;
  return j;
}

bool is_maximal_class(Workspace const &ws, std::size_t c)
{
  auto const &m = ws.lattice().maximal_classes();
  return std::find(m.begin(), m.end(), c) != m.end();
}

// [chi|_H, chi|_H] for any lattice class, summed over the elements of H.
std::int64_t subgroup_norm(Workspace const &ws, std::size_t i, std::size_t c)
{
  Group const &G = *ws.group();
  auto const &H = ws.lattice()[c].representative.members;
  std::vector<std::int64_t> meet(G.num_classes(), 0);
  for (Elem h : H.elements())
    ++meet[G.class_of(h)];
  auto const &nv = ws.norm_values(i);
  Cyclotomic total(0);
  for (std::size_t k = 0; k < meet.size(); ++k)
    if (meet[k])
      total += nv[k] * Cyclotomic(meet[k]);
  return (total.to_rational() / Rational(static_cast<std::int64_t>(H.count()))).num;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> verify_A(Workspace const &ws)
{
  Collector col("A", ws);
  Group const &G = *ws.group();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    auto const d = static_cast<std::uint64_t>(ws.degree(i));
    std::vector<std::uint64_t> primes;
    if (d == 1) {
      for (auto p : prime_divisors(G.order()))
        if (ws.lattice().is_p_solvable(p))
          primes.push_back(p);
    } else if (auto p = prime_of_prime_power(d); p != 0 && ws.lattice().is_p_solvable(p)) {
      primes.push_back(p);
    }
    if (primes.empty()) {
      col.skip_character(i, "chi(1) is not a power of a prime p with G p-solvable");
      continue;
    }
    if (!ws.quasi_primitive(i)) {
      col.skip_character(i, "not quasi-primitive");
      continue;
    }
    col.run(chi_key(i), i, d > 1, [&](json &pl) {
      pl["primes"] = primes;
      auto const &chi = ws.chi(i);
      for (auto p : primes)
        for (std::size_t c = 0; c < G.num_classes(); ++c) {
          Elem x = G.classes()[c].representative;
          Elem xp = G.p_part(x, p);
          if (chi[c].is_zero() != chi.at(xp).is_zero()) {
            pl["counterexample"] = json{{"prime", p},
                                        {"class", c},
                                        {"x", element_json(G, x)},
                                        {"chi_x", to_json(chi[c])},
                                        {"chi_xp", to_json(chi.at(xp))}};
            return false;
          }
        }
      return true;
    });
  }
  return col.finish();
}

// |chi(x)|^2 in G/ker chi from the centralizers of x in K and in K/Z.
bool check_commutator_formula(Workspace const &ws, std::size_t i, json &pl)
{
  Group const &G = *ws.group();
  auto const &Z = ws.center_of_character(i);
  auto const &ker = ws.kernel_of_character(i);
  std::vector<ElementSet> above;
  for (std::size_t c : ws.lattice().normal_classes()) {
    auto const &K = ws.lattice()[c].representative.members;
    if (Z.is_subset_of(K) && K.count() > Z.count())
      above.push_back(K);
  }
  std::vector<ElementSet> minimal;
  for (auto const &K : above)
    if (std::none_of(above.begin(), above.end(),
                     [&](ElementSet const &J) { return J.count() < K.count() && J.is_subset_of(K); }))
      minimal.push_back(K);
  json info{{"Z_order", Z.count()}};
  if (minimal.size() != 1) {
    info["minimal_normal_above_Z"] = minimal.size();
    pl["commutator_formula"] = info;
    return false;
  }
  auto const &K = minimal[0];
  auto const kz = K.count() / Z.count();
  info["K_order"] = K.count();
  auto const p = prime_of_prime_power(kz);
  if (p == 0 || ws.degree(i) % static_cast<std::int64_t>(p) != 0) {
    info["K_over_Z_not_p_group"] = true;
    pl["commutator_formula"] = info;
    return false;
  }
  auto const ks = K.elements();
  auto const &nv = ws.norm_values(i);
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    Elem x = G.classes()[c].representative;
    std::size_t in_ker = 0, in_z = 0;
    for (Elem k : ks) {
      Elem cm = G.commutator(k, x);
      in_ker += ker.contains(cm);
      in_z += Z.contains(cm);
    }
    std::int64_t want = in_ker == in_z ? static_cast<std::int64_t>(in_ker / Z.count()) : 0;
    if (!(nv[c] == Cyclotomic(want))) {
      info["class"] = c;
      info["expected"] = want;
      info["actual"] = to_json(nv[c]);
      pl["commutator_formula"] = info;
      return false;
    }
  }
  info["checked"] = true;
  pl["commutator_formula"] = info;
  return true;
}

std::vector<VerificationReport> verify_B(Workspace const &ws)
{
  Collector col("B", ws);
  Group const &G = *ws.group();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    if (!ws.pi_solvable(i)) {
      col.skip_character(i, "G is not pi(chi(1))-solvable");
      continue;
    }
    if (!ws.quasi_primitive(i)) {
      col.skip_character(i, "not quasi-primitive");
      continue;
    }
    std::int64_t const d = ws.degree(i);
    col.run(chi_key(i), i, d > 1, [&](json &pl) {
      auto const &nv = ws.norm_values(i);
      std::set<std::int64_t> values;
      for (std::size_t c = 0; c < G.num_classes(); ++c) {
        if (!nv[c].is_integer()) {
          pl["counterexample"] = json{{"class", c}, {"norm", to_json(nv[c])}, {"reason", "not a rational integer"}};
          return false;
        }
        std::int64_t n = nv[c].to_rational().num;
        if (n < 0 || (n > 0 && (d * d) % n != 0)) {
          pl["counterexample"] = json{{"class", c}, {"norm", n}, {"reason", "does not divide chi(1)^2"}};
          return false;
        }
        values.insert(n);
      }
      pl["norm_values"] = values;
      if (d > 1 && ws.strongly_irreducible(i))
        return check_commutator_formula(ws, i, pl);
      return true;
    });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_C(Workspace const &ws)
{
  Collector col("C", ws);
  json info = json::array();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    std::int64_t const d = ws.degree(i);
    bool const qp = ws.quasi_primitive(i), solv = ws.pi_solvable(i);
    if (!qp || !solv || d % 2 == 0) {
      col.skip_character(i, !qp ? "not quasi-primitive" : !solv ? "G is not pi(chi(1))-solvable" : "chi(1) is even");
      if (qp && solv) {
        // Informational: exhaustive scan for any U with chi conj(chi) = (1_U)^G.
        json eq = json::array();
        for (auto c : ws.permutation_equation_classes(i))
          eq.push_back(lattice_class_json(ws, c));
        info.push_back(json{{"character", char_json(ws, i)},
                            {"subgroup_classes_scanned", ws.lattice().size()},
                            {"permutation_equation_subgroups", eq}});
      }
      continue;
    }
    col.run(chi_key(i), i, d > 1, [&](json &pl) {
      auto const &m0 = ws.frak_M0(i);
      pl["frak_M0_classes"] = m0.size();
      if (m0.size() != 1)
        return false;
      pl["U"] = witness_json(m0[0]);
      auto const &eq = ws.permutation_equation_classes(i);
      pl["permutation_equation_classes"] = eq;
      bool holds = std::find(eq.begin(), eq.end(), m0[0].lattice_class) != eq.end();
      pl["equation_holds"] = holds;
      json extra = json::array();
      for (auto c : eq)
        if (c != m0[0].lattice_class)
          extra.push_back(lattice_class_json(ws, c));
      pl["extra_representations"] = extra;
      return holds;
    });
  }
  if (!info.empty())
    col.note("even_degree_scan", info);
  return col.finish();
}

std::vector<VerificationReport> verify_E(Workspace const &ws)
{
  Collector col("E", ws);
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    auto regs = regular_equation_classes(ws, i);
    if (regs.empty()) {
      col.skip_character(i, ws.permutation_equation_classes(i).empty() ? "no U with chi conj(chi) = (1_U)^G"
                                                                        : "no such U is a regular intersection");
      continue;
    }
    for (auto c : regs)
      col.run(key("chi=%04zu/U=%04zu", i, c), i, ws.degree(i) > 1, [&](json &pl) {
        pl["U"] = witness_json(*ws.regular_witness(c));
        return ws.quasi_primitive(i);
      });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_F(Workspace const &ws)
{
  Collector col("F", ws);
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    if (!ws.quasi_primitive(i) || !ws.pi_solvable(i)) {
      col.skip_character(i, !ws.quasi_primitive(i) ? "not quasi-primitive" : "G is not pi(chi(1))-solvable");
      continue;
    }
    if (!odd(index_of(ws, ws.center_of_character(i)))) {
      col.skip_character(i, "|G:Z(chi)| is even");
      continue;
    }
    col.run(chi_key(i), i, ws.degree(i) > 1, [&](json &pl) {
      auto const &m0 = ws.frak_M0(i);
      if (m0.empty()) {
        pl["reason"] = "frak_M0 is empty";
        return false;
      }
      json regs = json::array();
      for (auto const &U : m0) {
        auto const &w = ws.regular_witness(U.lattice_class);
        if (!w) {
          pl["not_regular"] = witness_json(U);
          return false;
        }
        regs.push_back(witness_json(*w));
      }
      pl["regular_witnesses"] = regs;
      return true;
    });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_G(Workspace const &ws)
{
  Collector col("G", ws);
  Group const &G = *ws.group();
  auto const &L = ws.lattice();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    auto regs = regular_equation_classes(ws, i);
    if (regs.empty()) {
      col.skip_character(i, "no regular U with chi conj(chi) = (1_U)^G");
      continue;
    }
    auto const &chi = ws.chi(i);
    for (auto uc : regs)
      col.run(key("chi=%04zu/U=%04zu", i, uc), i, ws.degree(i) > 1, [&](json &pl) {
        pl["U"] = lattice_class_json(ws, uc);
        std::size_t checked = 0, maximal = 0;
        for (auto const &V : ws.intersections().complete_intersections()) {
          auto const &pv = ws.permutation_values(V.lattice_class);
          bool vanishes_off = true;
          for (std::size_t c = 0; c < G.num_classes() && vanishes_off; ++c)
            vanishes_off = chi[c].is_zero() || pv[c] > 0;
          bool contains_u = L.class_below(uc, V.lattice_class);
          ++checked;
          if (vanishes_off != contains_u) {
            pl["counterexample"] = json{{"V", witness_json(V)},
                                        {"vanishes_off_conjugates", vanishes_off},
                                        {"contains_conjugate_of_U", contains_u}};
            return false;
          }
          if (is_maximal_class(ws, V.lattice_class)) {
            ++maximal;
            if (!contains_u && subgroup_norm(ws, i, V.lattice_class) != 1) {
              pl["counterexample"] = json{{"V", witness_json(V)}, {"restriction_irreducible", false}};
              return false;
            }
          }
        }
        pl["complete_intersections_checked"] = checked;
        pl["maximal_checked"] = maximal;
        return true;
      });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_H(Workspace const &ws)
{
  Collector col("H", ws);
  Group const &G = *ws.group();
  auto const &L = ws.lattice();
  for (std::size_t nc : L.normal_classes()) {
    auto const &N = L[nc].representative.members;
    if (N.count() == G.order())
      continue;
    auto const p = prime_of_prime_power(index_of(ws, N));
    if (p == 0) {
      col.skip(json{{"N", lattice_class_json(ws, nc)}, {"reason", "|G:N| is not a prime power"}});
      continue;
    }
    for (std::size_t uc = 0; uc < L.size(); ++uc) {
      auto const &U = L[uc].representative.members;
      if (!is_power_of(index_of(ws, U), p) || !ws.regular_witness(uc))
        continue;
      col.run(key("N=%04zu/U=%04zu", nc, uc), std::nullopt, U.count() != G.order(), [&](json &pl) {
        pl["prime"] = p;
        pl["N"] = lattice_class_json(ws, nc);
        pl["U"] = witness_json(*ws.regular_witness(uc));
        auto const &sub = ws.subgroup_workspace(nc);
        auto const UN = ws.to_subgroup(sub, U & N);
        pl["U_cap_N_order"] = UN.count();
        try {
          auto w = sub.ws->intersections().is_regular(UN);
          if (!w)
            return false;
          pl["family_in_N"] = witness_json(*w);
          return true;
        } catch (Error const &e) {
          pl["error"] = e.what();
          return false;
        }
      });
    }
  }
  return col.finish();
}

std::vector<VerificationReport> verify_I(Workspace const &ws)
{
  Collector col("I", ws);
  Group const &G = *ws.group();
  auto const &L = ws.lattice();
  if (!odd(G.order())) {
    col.note("reason", "|G| is even");
    return col.finish();
  }
  for (std::size_t nc : L.normal_classes()) {
    auto const &N = L[nc].representative.members;
    if (N.count() == G.order())
      continue;
    auto const p = prime_of_prime_power(index_of(ws, N));
    if (p == 0 || !L.is_p_solvable(p))
      continue;
    for (std::size_t i = 0; i < ws.num_characters(); ++i) {
      auto const d = static_cast<std::uint64_t>(ws.degree(i));
      if (!is_power_of(d, p))
        continue;
      if (!ws.quasi_primitive(i)) {
        json j = char_json(ws, i);
        j["N"] = nc;
        j["reason"] = "not quasi-primitive";
        col.skip(std::move(j));
        continue;
      }
      col.run(key("chi=%04zu/N=%04zu", i, nc), i, d > 1, [&](json &pl) {
        pl["prime"] = p;
        pl["N"] = lattice_class_json(ws, nc);
        auto const &sub = ws.subgroup_workspace(nc);
        auto const &SW = *sub.ws;
        auto const psi = ws.restrict_character(i, nc);
        std::size_t row = 0;
        try {
          row = SW.cache().row_of(psi);
        } catch (Error const &) {
          pl["restriction_irreducible"] = false;
          return false;
        }
        if (!SW.quasi_primitive(row)) {
          pl["restriction_quasi_primitive"] = false;
          return false;
        }
        // frak_M0(chi|_N) against {U cap N : U in frak_M0(chi)}, as sets of
        // subgroups in G's indexing.
        std::set<ElementSet> lhs, rhs;
        for (auto const &w : SW.frak_M0(row))
          for (auto const &conj : SW.lattice()[w.lattice_class].conjugates)
            lhs.insert(ws.from_subgroup(sub, conj));
        for (auto const &w : ws.frak_M0(i))
          for (auto const &conj : L[w.lattice_class].conjugates)
            rhs.insert(conj & N);
        pl["frak_M0_restricted_size"] = lhs.size();
        pl["intersections_size"] = rhs.size();
        return lhs == rhs;
      });
    }
  }
  return col.finish();
}

std::vector<VerificationReport> verify_J(Workspace const &ws)
{
  Collector col("J", ws);
  Group const &G = *ws.group();
  auto const &L = ws.lattice();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    auto const d = static_cast<std::uint64_t>(ws.degree(i));
    // chi(1) = p^a with p odd and a < p; a = 0 leaves p free.
    std::uint64_t p = 0;
    if (d > 1) {
      p = prime_of_prime_power(d);
      std::uint64_t a = 0;
      for (std::uint64_t q = 1; p != 0 && q < d; q *= p)
        ++a;
      if (p == 0 || p == 2 || a >= p) {
        col.skip_character(i, "chi(1) is not p^a with p odd and a < p");
        continue;
      }
    }
    auto regs = regular_equation_classes(ws, i);
    if (regs.empty()) {
      col.skip_character(i, "no regular U with chi conj(chi) = (1_U)^G");
      continue;
    }
    for (std::size_t hc = 0; hc + 1 < L.size(); ++hc) {
      auto const idx = G.order() / L[hc].order();
      auto const q = prime_of_prime_power(idx);
      if (q == 0 || q == 2 || (p != 0 && q != p))
        continue;
      if (subgroup_norm(ws, i, hc) != 1)
        continue;
      col.run(key("chi=%04zu/H=%04zu", i, hc), i, d > 1, [&](json &pl) {
        pl["H"] = lattice_class_json(ws, hc);
        pl["U"] = witness_json(*ws.regular_witness(regs[0]));
        auto const &sub = ws.subgroup_workspace(hc);
        std::size_t row = sub.ws->cache().row_of(ws.restrict_character(i, hc));
        return sub.ws->quasi_primitive(row);
      });
    }
  }
  return col.finish();
}

std::vector<VerificationReport> verify_K(Workspace const &ws)
{
  Collector col("K", ws);
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    try {
      auto r = theorem_K_check(ws, i);
      col.run(r.instance, i, r.nontrivial, [&](json &pl) {
        pl = r.payload;
        return r.status == Status::Pass;
      });
    } catch (Error const &e) {
      if (e.kind() != ErrorKind::HypothesesNotSatisfied)
        throw;
      col.skip_character(i, e.what());
    }
  }
  return col.finish();
}

// Characters of odd degree that are primitive, in a solvable group.
std::optional<std::string> odd_primitive_reason(Workspace const &ws, std::size_t i)
{
  if (!ws.lattice().is_solvable())
    return "G is not solvable";
  if (ws.degree(i) % 2 == 0)
    return "chi(1) is even";
  if (!is_primitive(ws.cache(), ws.chi(i)).holds)
    return "not primitive";
  return std::nullopt;
}

std::vector<VerificationReport> verify_M(Workspace const &ws)
{
  Collector col("M", ws);
  Group const &G = *ws.group();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    if (auto why = odd_primitive_reason(ws, i)) {
      col.skip_character(i, *why);
      continue;
    }
    col.run(chi_key(i), i, ws.degree(i) > 1, [&](json &pl) {
      auto const &nv = ws.norm_values(i);
      std::size_t pairs = 0;
      for (std::size_t c = 0; c < G.num_classes(); ++c)
        for (std::int64_t m = 0; m < G.classes()[c].element_order; ++m) {
          std::size_t const pc = G.power_class(c, m);
          if (!nv[c].is_rational() || !nv[pc].is_rational()) {
            pl["counterexample"] = json{{"class", c}, {"m", m}, {"reason", "|chi|^2 is not rational"}};
            return false;
          }
          if (nv[pc].to_rational() < nv[c].to_rational()) {
            pl["counterexample"] =
                json{{"class", c}, {"m", m}, {"norm_x", to_json(nv[c])}, {"norm_xm", to_json(nv[pc])}};
            return false;
          }
          ++pairs;
        }
      pl["pairs_checked"] = pairs;
      return true;
    });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_N(Workspace const &ws)
{
  Collector col("N", ws);
  auto const order = ws.group()->order();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    if (auto why = odd_primitive_reason(ws, i)) {
      col.skip_character(i, *why);
      continue;
    }
    col.run(chi_key(i), i, ws.degree(i) > 1, [&](json &pl) {
      auto const d = static_cast<std::uint64_t>(ws.degree(i));
      auto const n = n_chi(ws.chi(i));
      pl["n_chi"] = n;
      pl["product"] = d * d * n;
      return order % (d * d * n) == 0;
    });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_O(Workspace const &ws)
{
  Collector col("O", ws);
  auto const order = ws.group()->order();
  auto const &L = ws.lattice();
  for (std::size_t i = 0; i < ws.num_characters(); ++i) {
    auto const d = static_cast<std::uint64_t>(ws.degree(i));
    auto const n = n_chi(ws.chi(i));
    if (!L.is_solvable() || d % 2 == 0 || n * d != order) {
      col.skip_character(i, !L.is_solvable() ? "G is not solvable"
                            : d % 2 == 0     ? "chi(1) is even"
                                             : "n_chi differs from |G|/chi(1)");
      continue;
    }
    col.run(chi_key(i), i, d > 1, [&](json &pl) {
      pl["n_chi"] = n;
      for (std::size_t hc = 0; hc < L.size(); ++hc) {
        if (order / L[hc].order() != d)
          continue;
        auto const &st = ws.cache().of_class(hc);
        for (std::size_t j = 0; j < st.table->size(); ++j)
          if (st.table->degree(j) == 1 && st.restriction[i][j] > 0) {
            pl["induced_from"] = json{{"H", lattice_class_json(ws, hc)}, {"linear_character", j}};
            return true;
          }
      }
      return false;
    });
  }
  return col.finish();
}

std::vector<VerificationReport> verify_R3(Workspace const &ws)
{
  Collector col("R3", ws);
  if (!odd(ws.group()->order())) {
    col.note("reason", "|G| is even");
    return col.finish();
  }
  std::size_t const k = ws.num_characters();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (ws.degree(i) != ws.degree(j) || !(ws.norm_values(i) == ws.norm_values(j)))
        continue;
      col.run(key("chi=%04zu/psi=%04zu", i, j), i, ws.degree(i) > 1, [&](json &pl) {
        pl["psi"] = char_json(ws, j);
        pl["chi_quasi_primitive"] = ws.quasi_primitive(i);
        pl["psi_quasi_primitive"] = ws.quasi_primitive(j);
        return ws.quasi_primitive(i) == ws.quasi_primitive(j);
      });
    }
  return col.finish();
}

} // namespace

VerificationReport theorem_K_check(Workspace const &ws, std::size_t i)
{
  if (!ws.quasi_primitive(i))
    throw Error(ErrorKind::HypothesesNotSatisfied, "not quasi-primitive");
  if (!ws.pi_solvable(i))
    throw Error(ErrorKind::HypothesesNotSatisfied, "G is not pi(chi(1))-solvable");
  if (!odd(index_of(ws, ws.center_of_character(i))))
    throw Error(ErrorKind::HypothesesNotSatisfied, "|G:Z(chi)| is even");
  double const t0 = monotonic_seconds();
  VerificationReport r;
  r.theorem = "K";
  r.group = ws.group()->name();
  r.instance = chi_key(i);
  r.character = i;
  r.nontrivial = ws.degree(i) > 1;
  r.payload["character"] = char_json(ws, i);
  r.status = Status::Pass;
  std::size_t checked = 0;
  for (std::size_t mc : ws.lattice().maximal_classes()) {
    auto const &st = ws.cache().of_class(mc);
    ++checked;
    for (std::size_t j = 0; j < st.table->size(); ++j) {
      bool alone = true;
      for (std::size_t psi = 0; psi < ws.num_characters() && alone; ++psi)
        alone = psi == i || st.restriction[psi][j] == 0;
      if (alone) {
        r.status = Status::Fail;
        r.payload["counterexample"] = json{{"M", lattice_class_json(ws, mc)},
                                           {"theta", j},
                                           {"e", st.restriction[i][j] * ws.degree(i) == 0 ? 0 : st.restriction[i][j]}};
        break;
      }
    }
    if (r.status == Status::Fail)
      break;
  }
  r.payload["maximal_classes_checked"] = checked;
  r.seconds = monotonic_seconds() - t0;
  return r;
}

std::vector<VerificationReport> verify(std::string const &theorem, Workspace const &ws)
{
  using Fn = std::vector<VerificationReport> (*)(Workspace const &);
  static std::vector<std::pair<std::string, Fn>> const table{
      {"A", verify_A}, {"B", verify_B}, {"C", verify_C}, {"E", verify_E}, {"F", verify_F},
      {"G", verify_G}, {"H", verify_H}, {"I", verify_I}, {"J", verify_J}, {"K", verify_K},
      {"M", verify_M}, {"N", verify_N}, {"O", verify_O}, {"R3", verify_R3}};
  for (auto const &[id, fn] : table)
    if (id == theorem)
      return fn(ws);
  throw Error(ErrorKind::ConfigError, "unknown theorem id '" + theorem + "'");
}

} // namespace solchar
