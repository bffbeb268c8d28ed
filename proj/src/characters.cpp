#include "solchar/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "solchar/error.hpp"
#include "solchar/modular.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

namespace {

void same_group(ClassFunction const &a, ClassFunction const &b)
{
  if (a.group != b.group)
    throw Error(ErrorKind::GroupMismatch, "class functions live on different groups");
}

constexpr std::uint64_t kSaturate = std::uint64_t(1) << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
  unsigned __int128 r = (unsigned __int128)a * b;
  return r > kSaturate ? kSaturate : static_cast<std::uint64_t>(r);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r = a + b;
  return r > kSaturate ? kSaturate : r;
}

int compare_values(Cyclotomic const &a, Cyclotomic const &b)
{
  std::uint32_t m = std::lcm(a.conductor(), b.conductor());
  Cyclotomic x = a.promote(m), y = b.promote(m);
  if (x.denominator() != y.denominator())
    return x.denominator() < y.denominator() ? -1 : 1;
  auto const &cx = x.coefficients();
  auto const &cy = y.coefficients();
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (cx[i] != cy[i])
      return cx[i] < cy[i] ? -1 : 1;
  return 0;
}

} // namespace

ClassFunction ClassFunction::conj() const
{
  ClassFunction r{group, {}};
  for (auto const &v : values)
    r.values.push_back(v.conj());
  return r;
}

ClassFunction operator+(ClassFunction const &a, ClassFunction const &b)
{
  same_group(a, b);
  ClassFunction r{a.group, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] + b.values[i]);
  return r;
}

ClassFunction operator-(ClassFunction const &a, ClassFunction const &b)
{
  same_group(a, b);
  ClassFunction r{a.group, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] - b.values[i]);
  return r;
}

ClassFunction operator*(ClassFunction const &a, ClassFunction const &b)
{
  same_group(a, b);
  ClassFunction r{a.group, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values.push_back(a.values[i] * b.values[i]);
  return r;
}

ClassFunction operator*(ClassFunction const &a, Rational const &s)
{
  ClassFunction r{a.group, {}};
  for (auto const &v : a.values)
    r.values.push_back(v * s);
  return r;
}

bool operator==(ClassFunction const &a, ClassFunction const &b)
{
  return a.group == b.group && a.values == b.values;
}

ClassFunction trivial_character(GroupPtr const &G)
{
  return ClassFunction{G, std::vector<Cyclotomic>(G->num_classes(), Cyclotomic(1))};
}

ClassFunction regular_character(GroupPtr const &G)
{
  ClassFunction r{G, std::vector<Cyclotomic>(G->num_classes(), Cyclotomic(0))};
  r.values[0] = Cyclotomic(static_cast<std::int64_t>(G->order()));
  return r;
}

Rational inner_product(ClassFunction const &a, ClassFunction const &b)
{
  same_group(a, b);
  Group const &G = *a.group;
  // Terms are summed per conductor before promoting to the compositum.
  std::map<std::uint32_t, Cyclotomic> acc;
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    Cyclotomic t = a.values[c] * b.values[G.inverse_class(c)];
    if (t.is_zero())
      continue;
    t = t * Rational(static_cast<std::int64_t>(G.classes()[c].size()));
    auto [it, fresh] = acc.emplace(t.conductor(), t);
    if (!fresh)
      it->second += t;
  }
  Cyclotomic total(0);
  for (auto const &[n, v] : acc)
    total += v;
  return total.to_rational() / Rational(static_cast<std::int64_t>(G.order()));
}

SplitEmbedding::SplitEmbedding(std::uint32_t e) : e_(e)
{
  auto const &F = CyclotomicField::get(e);
  phi_ = F.phi;
  for (auto const &row : F.power)
    for (auto v : row)
      reduction_max_ = std::max<std::uint64_t>(reduction_max_, static_cast<std::uint64_t>(v < 0 ? -v : v));

  std::uint64_t k = ((std::uint64_t(1) << 61) / e) + 1;
  while (!is_prime(k * e + 1))
    ++k;
  p_ = k * e + 1;

  auto qs = prime_divisors(e);
  std::uint64_t z = 1;
  for (std::uint64_t a = 2;; ++a) {
    z = powmod(a, (p_ - 1) / e, p_);
    bool primitive = true;
    for (auto q : qs)
      if (powmod(z, e / q, p_) == 1)
        primitive = false;
    if (primitive)
      break;
  }
  zeta_pow_.resize(e);
  zeta_pow_[0] = 1;
  for (std::uint32_t j = 1; j < e; ++j)
    zeta_pow_[j] = mulm(zeta_pow_[j - 1], z);
  for (std::uint32_t u = 1; u <= e; ++u)
    if (std::gcd(u, e) == 1)
      units_.push_back(u % e);
}

std::vector<std::uint64_t> SplitEmbedding::image(Cyclotomic const &x) const
{
  if (x.denominator() != 1)
    throw Error(ErrorKind::NotIrreducible, "value " + x.to_string() + " is not an algebraic integer");
  std::uint32_t const o = x.conductor();
  if (e_ % o != 0)
    throw Error(ErrorKind::GroupMismatch, "conductor does not divide the embedding conductor");
  std::uint64_t const step = e_ / o;
  auto const &c = x.coefficients();
  std::vector<std::uint64_t> out(units_.size(), 0);
  for (std::size_t t = 0; t < units_.size(); ++t) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!c[j])
        continue;
      std::uint64_t cm = c[j] >= 0 ? std::uint64_t(c[j]) % p_ : p_ - (std::uint64_t(-c[j]) % p_);
      if (cm == p_)
        cm = 0;
      acc = addm(acc, mulm(cm, zeta_pow_[(j * step * units_[t]) % e_]));
    }
    out[t] = acc;
  }
  return out;
}

std::uint64_t SplitEmbedding::sup_norm(Cyclotomic const &x) const
{
  std::uint64_t m = 0;
  Cyclotomic const y = x.promote(e_);
  for (auto v : y.coefficients())
    m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(v < 0 ? -v : v));
  return m;
}

std::uint64_t SplitEmbedding::product_bound(std::uint64_t a, std::uint64_t b) const
{
  // Convolution terms are at most phi*a*b; reduction of each high power
  // adds at most reduction_max_ per term.
  std::uint64_t conv = sat_mul(sat_mul(phi_, a), b);
  return sat_mul(conv, sat_add(sat_mul(phi_, reduction_max_), 1));
}

std::int64_t SplitEmbedding::recover_integer(std::vector<std::uint64_t> const &img, std::uint64_t bound) const
{
  if (bound >= p_ / 4)
    throw Error(ErrorKind::LiftFailure, "coefficient bound too large for certified recovery");
  for (auto v : img)
    if (v != img[0])
      throw Error(ErrorKind::LiftFailure, "value is not rational");
  std::uint64_t v = img.empty() ? 0 : img[0];
  std::int64_t s = v > p_ / 2 ? -static_cast<std::int64_t>(p_ - v) : static_cast<std::int64_t>(v);
  std::uint64_t mag = s < 0 ? std::uint64_t(-s) : std::uint64_t(s);
  if (mag > bound)
    throw Error(ErrorKind::LiftFailure, "recovered value exceeds its bound");
  return s;
}

std::shared_ptr<CharacterTable const> CharacterTable::compute(GroupPtr const &G, TableOptions const &opt)
{
  std::size_t const N = G->order();
  std::size_t const k = G->num_classes();
  auto const e = static_cast<std::uint32_t>(G->exponent());
  auto const &cls = G->classes();

  std::uint64_t ell = opt.prime;
  if (ell == 0) {
    ell = e + 1;
    while (!is_prime(ell) || ell * ell <= 4 * N)
      ell += e;
  } else if (!is_prime(ell) || (ell - 1) % e != 0 || ell * ell <= 4 * N) {
    throw Error(ErrorKind::NotPrime, "prime " + std::to_string(ell) +
                                         " must be 1 mod the exponent and exceed 2 sqrt|G|");
  }
  auto const p = ell;
  auto mulm = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };

  // cls_of_quot[r][x] = class of x^-1 z_r
  std::vector<std::vector<std::uint32_t>> quot(k, std::vector<std::uint32_t>(N));
  for (std::size_t r = 0; r < k; ++r)
    for (Elem x = 0; x < N; ++x)
      quot[r][x] = static_cast<std::uint32_t>(G->class_of(G->mul(G->inv(x), cls[r].representative)));

  // Column r of M holds the structure constants against z_r:
  // M[s][r] = sum_x lambda(class x) [x^-1 z_r in C_s].
  auto build = [&](std::vector<std::uint64_t> const &lambda) {
    fp::Mat M(k, fp::Vec(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (Elem x = 0; x < N; ++x) {
        std::uint64_t l = lambda[G->class_of(x)];
        if (l)
          M[quot[r][x]][r] = (M[quot[r][x]][r] + l) % p;
      }
    return M;
  };

  std::vector<fp::Mat> spaces{fp::identity(k)};
  std::mt19937_64 rng(opt.seed);
  std::size_t const max_rounds = 40 + 4 * k;
  std::size_t rounds = 0;
  auto unfinished = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](fp::Mat const &V) { return V.size() > 1; });
  };
  while (unfinished()) {
    if (++rounds > max_rounds)
      throw Error(ErrorKind::LiftFailure, "eigenspace splitting did not converge for " + G->name());
    std::vector<std::uint64_t> lambda(k);
    for (auto &l : lambda)
      l = rng() % p;
    fp::Mat M = build(lambda);
    std::vector<fp::Mat> next;
    for (auto &V : spaces) {
      std::size_t const dim = V.size();
      if (dim == 1) {
        next.push_back(std::move(V));
        continue;
      }
      std::vector<std::size_t> piv;
      for (auto const &row : V)
        piv.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; }) - row.begin()));
      fp::Mat R(dim, fp::Vec(dim));
      for (std::size_t i = 0; i < dim; ++i) {
        fp::Vec Mb(k, 0);
        for (std::size_t s = 0; s < k; ++s) {
          std::uint64_t acc = 0;
          for (std::size_t r = 0; r < k; ++r)
            if (V[i][r])
              acc = (acc + mulm(M[s][r], V[i][r])) % p;
          Mb[s] = acc;
        }
        for (std::size_t j = 0; j < dim; ++j)
          R[i][j] = Mb[piv[j]];
      }
      fp::Vec cp = fp::charpoly(R, p);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t t = cp.size(); t-- > 0;)
          v = (mulm(v, x) + cp[t]) % p;
        if (v == 0)
          roots.push_back(x);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(V));
        continue;
      }
      std::size_t total = 0;
      for (auto lam : roots) {
        fp::Mat A = fp::transpose(R);
        for (std::size_t i = 0; i < dim; ++i)
          A[i][i] = (A[i][i] + p - lam) % p;
        fp::Mat C = fp::nullspace(A, dim, p);
        fp::Mat W;
        for (auto const &c : C) {
          fp::Vec w(k, 0);
          for (std::size_t i = 0; i < dim; ++i)
            if (c[i])
              for (std::size_t r = 0; r < k; ++r)
                w[r] = (w[r] + mulm(c[i], V[i][r])) % p;
          W.push_back(std::move(w));
        }
        fp::rref(W, p);
        total += W.size();
        next.push_back(std::move(W));
      }
      if (total != dim)
        throw Error(ErrorKind::LiftFailure, "class matrix not diagonalizable modulo " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw Error(ErrorKind::LiftFailure, "wrong number of eigenvectors for " + G->name());

  std::uint64_t const g = fp::primitive_root(p);
  std::uint64_t root_n = 1;
  while ((root_n + 1) * (root_n + 1) <= N)
    ++root_n;

  std::vector<std::vector<std::size_t>> powers(k);
  for (std::size_t s = 0; s < k; ++s)
    for (std::uint32_t t = 0; t < cls[s].element_order; ++t)
      powers[s].push_back(G->power_class(s, t));

  auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
  table->G_ = G;
  table->ell_ = p;
  for (auto const &V : spaces) {
    fp::Vec const &w = V[0];
    if (w[0] != 1)
      throw Error(ErrorKind::LiftFailure, "eigenvector not normalizable");
    std::uint64_t t = 0;
    for (std::size_t s = 0; s < k; ++s)
      t = (t + mulm(mulm(w[s], w[G->inverse_class(s)]), invmod(cls[s].size() % p, p))) % p;
    std::uint64_t d2 = mulm(N % p, invmod(t, p));
    std::uint64_t d = 0;
    for (std::uint64_t c = 1; c <= root_n; ++c)
      if (c * c % p == d2) {
        d = c;
        break;
      }
    if (d == 0)
      throw Error(ErrorKind::LiftFailure, "no degree matches modulo " + std::to_string(p));
    std::vector<std::uint64_t> v(k);
    for (std::size_t s = 0; s < k; ++s)
      v[s] = mulm(mulm(d, w[s]), invmod(cls[s].size() % p, p));

    ClassFunction chi{G, {}};
    for (std::size_t s = 0; s < k; ++s) {
      std::uint32_t const o = cls[s].element_order;
      std::uint64_t const z = powmod(g, (p - 1) / o, p);
      std::uint64_t const zinv = invmod(z, p);
      std::uint64_t const oinv = invmod(o % p, p);
      std::vector<std::int64_t> mult(o);
      std::uint64_t sum = 0;
      for (std::uint32_t kk = 0; kk < o; ++kk) {
        // m_k = (1/o) sum_t chi(g^t) zeta^(-kt)
        std::uint64_t acc = 0, step = powmod(zinv, kk, p), zt = 1;
        for (std::uint32_t tt = 0; tt < o; ++tt) {
          acc = (acc + mulm(v[powers[s][tt]], zt)) % p;
          zt = mulm(zt, step);
        }
        std::uint64_t m = mulm(acc, oinv);
        if (m > d)
          throw Error(ErrorKind::LiftFailure, "eigenvalue multiplicity out of range");
        mult[kk] = static_cast<std::int64_t>(m);
        sum += m;
      }
      if (sum != d)
        throw Error(ErrorKind::LiftFailure, "eigenvalue multiplicities do not sum to the degree");
      chi.values.push_back(Cyclotomic::from_root_multiplicities(o, mult).promote(e));
    }
    table->irr_.push_back(std::move(chi));
  }

  auto is_trivial = [](ClassFunction const &c) {
    return std::all_of(c.values.begin(), c.values.end(), [](Cyclotomic const &v) { return v == Cyclotomic(1); });
  };
  std::sort(table->irr_.begin(), table->irr_.end(), [&](ClassFunction const &a, ClassFunction const &b) {
    int da = static_cast<int>(a.int_degree()), db = static_cast<int>(b.int_degree());
    if (da != db)
      return da < db;
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb)
      return ta;
    for (std::size_t s = 0; s < a.values.size(); ++s) {
      int c = compare_values(a.values[s], b.values[s]);
      if (c)
        return c < 0;
    }
    return false;
  });
  std::uint64_t sumsq = 0;
  for (auto const &chi : table->irr_) {
    table->degrees_.push_back(chi.int_degree());
    sumsq += static_cast<std::uint64_t>(chi.int_degree() * chi.int_degree());
  }
  if (sumsq != N)
    throw Error(ErrorKind::LiftFailure, "sum of squared degrees differs from |G|");
  table->prepare_images();
  return table;
}

void CharacterTable::prepare_images()
{
  emb_ = std::make_shared<SplitEmbedding>(static_cast<std::uint32_t>(G_->exponent()));
  images_.assign(irr_.size(), {});
  norms_.assign(irr_.size(), {});
  for (std::size_t i = 0; i < irr_.size(); ++i)
    for (auto const &v : irr_[i].values) {
      images_[i].push_back(emb_->image(v));
      norms_[i].push_back(emb_->sup_norm(v));
    }
}

std::int64_t CharacterTable::scaled_row_product(std::size_t i, std::size_t j) const
{
  Group const &G = *G_;
  std::size_t const w = emb_->width();
  std::vector<std::uint64_t> acc(w, 0);
  std::uint64_t bound = 0;
  for (std::size_t s = 0; s < G.num_classes(); ++s) {
    std::size_t const si = G.inverse_class(s);
    std::uint64_t h = G.classes()[s].size();
    for (std::size_t t = 0; t < w; ++t)
      acc[t] = emb_->addm(acc[t], emb_->mulm(h, emb_->mulm(images_[i][s][t], images_[j][si][t])));
    bound = sat_add(bound, sat_mul(h, emb_->product_bound(norms_[i][s], norms_[j][si])));
  }
  return emb_->recover_integer(acc, bound);
}

std::int64_t CharacterTable::column_product(std::size_t r, std::size_t s) const
{
  std::size_t const si = G_->inverse_class(s);
  std::size_t const w = emb_->width();
  std::vector<std::uint64_t> acc(w, 0);
  std::uint64_t bound = 0;
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    for (std::size_t t = 0; t < w; ++t)
      acc[t] = emb_->addm(acc[t], emb_->mulm(images_[i][r][t], images_[i][si][t]));
    bound = sat_add(bound, emb_->product_bound(norms_[i][r], norms_[i][si]));
  }
  return emb_->recover_integer(acc, bound);
}

std::vector<std::int64_t> CharacterTable::decompose(ClassFunction const &chi) const
{
  return decompose_all({chi})[0];
}

std::vector<std::vector<std::int64_t>> CharacterTable::decompose_all(std::vector<ClassFunction> const &chis) const
{
  Group const &G = *G_;
  std::size_t const k = G.num_classes();
  std::uint32_t e = emb_->conductor();
  for (auto const &chi : chis) {
    if (chi.group != G_)
      throw Error(ErrorKind::GroupMismatch, "character lives on a different group");
    for (auto const &v : chi.values)
      e = std::lcm(e, v.conductor());
  }

  // Values from a larger group may need a wider field than the table's.
  std::shared_ptr<SplitEmbedding const> emb = emb_;
  auto const *rows = &images_;
  auto const *rnorms = &norms_;
  std::vector<std::vector<std::vector<std::uint64_t>>> wide_images;
  std::vector<std::vector<std::uint64_t>> wide_norms;
  if (e != emb_->conductor()) {
    emb = std::make_shared<SplitEmbedding>(e);
    wide_images.assign(irr_.size(), {});
    wide_norms.assign(irr_.size(), {});
    for (std::size_t i = 0; i < irr_.size(); ++i)
      for (auto const &v : irr_[i].values) {
        wide_images[i].push_back(emb->image(v));
        wide_norms[i].push_back(emb->sup_norm(v));
      }
    rows = &wide_images;
    rnorms = &wide_norms;
  }

  std::size_t const w = emb->width();
  std::vector<std::vector<std::int64_t>> all;
  for (auto const &chi : chis) {
    std::vector<std::vector<std::uint64_t>> img(k);
    std::vector<std::uint64_t> nrm(k);
    for (std::size_t s = 0; s < k; ++s) {
      img[s] = emb->image(chi.values[s]);
      nrm[s] = emb->sup_norm(chi.values[s]);
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < irr_.size(); ++i) {
      std::vector<std::uint64_t> acc(w, 0);
      std::uint64_t bound = 0;
      for (std::size_t s = 0; s < k; ++s) {
        std::size_t const si = G.inverse_class(s);
        std::uint64_t h = G.classes()[s].size();
        for (std::size_t t = 0; t < w; ++t)
          acc[t] = emb->addm(acc[t], emb->mulm(h, emb->mulm(img[s][t], (*rows)[i][si][t])));
        bound = sat_add(bound, sat_mul(h, emb->product_bound(nrm[s], (*rnorms)[i][si])));
      }
      std::int64_t v = emb->recover_integer(acc, bound);
      if (v % static_cast<std::int64_t>(G.order()) != 0)
        throw Error(ErrorKind::NotIrreducible, "class function is not a virtual character");
      out.push_back(v / static_cast<std::int64_t>(G.order()));
    }
    all.push_back(std::move(out));
  }
  return all;
}

std::int64_t CharacterTable::multiplicity(std::size_t i, ClassFunction const &chi) const
{
  return decompose(chi)[i];
}

EmbeddedSubgroup embed_subgroup(Subgroup const &H)
{
  EmbeddedSubgroup E;
  E.subgroup = H;
  E.embedding = embed(H);
  Group const &K = *E.embedding.group;
  for (auto const &c : K.classes())
    E.fusion.push_back(H.parent->class_of(E.embedding.to_parent[c.representative]));
  return E;
}

ClassFunction restrict_to(ClassFunction const &chi, EmbeddedSubgroup const &H)
{
  if (chi.group != H.subgroup.parent)
    throw Error(ErrorKind::NotSubgroup, "subgroup does not belong to the character's group");
  ClassFunction r{H.group(), {}};
  for (std::size_t c : H.fusion)
    r.values.push_back(chi.values[c]);
  return r;
}

ClassFunction induce(ClassFunction const &theta, EmbeddedSubgroup const &H)
{
  if (theta.group != H.group())
    throw Error(ErrorKind::NotSubgroup, "class function is not defined on the subgroup");
  GroupPtr const &G = H.subgroup.parent;
  Group const &K = *H.group();
  std::vector<Cyclotomic> vals(G->num_classes(), Cyclotomic(0));
  for (std::size_t d = 0; d < K.num_classes(); ++d) {
    std::size_t const c = H.fusion[d];
    vals[c] += theta.values[d] * Rational(static_cast<std::int64_t>(G->classes()[c].centralizer_order),
                                          static_cast<std::int64_t>(K.classes()[d].centralizer_order));
  }
  return ClassFunction{G, std::move(vals)};
}

ClassFunction permutation_character(GroupPtr const &G, ElementSet const &U)
{
  ClassFunction r{G, {}};
  auto const u = static_cast<std::int64_t>(U.count());
  for (auto const &c : G->classes()) {
    std::int64_t meet = 0;
    for (Elem x : c.members)
      meet += U.contains(x);
    Rational v = Rational(static_cast<std::int64_t>(c.centralizer_order) * meet, u);
    if (!v.is_integer())
      throw Error(ErrorKind::NotSubgroup, "set is not a subgroup");
    r.values.emplace_back(v);
  }
  return r;
}

Cyclotomic norm_squared(ClassFunction const &chi, Elem x)
{
  if (x >= chi.group->order())
    throw Error(ErrorKind::ElementNotInGroup, "element index out of range");
  std::size_t c = chi.group->class_of(x);
  return chi.values[c] * chi.values[chi.group->inverse_class(c)];
}

ElementSet kernel(ClassFunction const &chi)
{
  Group const &G = *chi.group;
  ElementSet K(G.order());
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    if (chi.values[c] == chi.values[0])
      for (Elem x : G.classes()[c].members)
        K.insert(x);
  return K;
}

ElementSet center_of(ClassFunction const &chi)
{
  Group const &G = *chi.group;
  ElementSet Z(G.order());
  Cyclotomic d2 = chi.values[0] * chi.values[0];
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    if (chi.values[c] * chi.values[G.inverse_class(c)] == d2)
      for (Elem x : G.classes()[c].members)
        Z.insert(x);
  return Z;
}

std::uint64_t n_chi(ClassFunction const &chi)
{
  std::uint64_t n = 1;
  for (std::size_t c = 0; c < chi.values.size(); ++c)
    if (!chi.values[c].is_zero())
      n = std::lcm(n, std::uint64_t(chi.group->classes()[c].element_order));
  return n;
}

Rational norm_on(ClassFunction const &chi, ElementSet const &N)
{
  Group const &G = *chi.group;
  Cyclotomic total(0);
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    auto const &cl = G.classes()[c];
    if (!N.contains(cl.representative))
      continue;
    total += chi.values[c] * chi.values[G.inverse_class(c)] * Rational(static_cast<std::int64_t>(cl.size()));
  }
  return total.to_rational() / Rational(static_cast<std::int64_t>(N.count()));
}

} // namespace solchar
