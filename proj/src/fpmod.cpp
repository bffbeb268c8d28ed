#include "solchar/fpmod.hpp"

#include <algorithm>
#include <unordered_map>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

namespace {

// Echelon basis that reports whether a vector enlarged it.
class Span {
public:
  Span(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  bool add(fp::Vec v)
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = v[pivots_[r]];
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] = (v[j] + (p_ - c) * rows_[r][j]) % p_;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end())
      return false;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    std::uint64_t s = invmod(v[piv], p_);
    for (auto &x : v)
      x = x * s % p_;
    for (auto &row : rows_) {
      std::uint64_t c = row[piv];
      if (c != 0)
        for (std::size_t j = 0; j < dim_; ++j)
          row[j] = (row[j] + (p_ - c) * v[j]) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

private:
  std::size_t dim_;
  std::uint64_t p_;
  fp::Mat rows_;
  std::vector<std::size_t> pivots_;
};

void require_same_group(FpModule const &X, FpModule const &Y)
{
  if (X.group != Y.group)
    throw Error(ErrorKind::GroupMismatch, "modules are defined over different groups");
}

} // namespace

fp::Mat FpModule::matrix_of(Elem g) const
{
  Group const &G = *group;
  std::unordered_map<Elem, fp::Mat> seen{{0, fp::identity(dim)}};
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size() && !seen.count(g); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < G.generators().size(); ++k) {
      Elem y = G.mul(x, G.generators()[k]);
      if (seen.count(y))
        continue;
      seen.emplace(y, fp::multiply(seen.at(x), action[k], prime));
      queue.push_back(y);
    }
  }
  return seen.at(g);
}

FpModule section_module(GroupPtr const &G, ElementSet const &K, ElementSet const &L)
{
  Group const &g = *G;
  if (!is_normal(g, K) || !is_normal(g, L) || !L.is_subset_of(K))
    throw Error(ErrorKind::NotNormal, "section requires normal subgroups L <= K");
  std::size_t const index = K.count() / L.count();
  std::uint64_t const p = prime_of_prime_power(index);
  if (p == 0)
    throw Error(ErrorKind::NotElementaryAbelian, "section order is not a nontrivial prime power");
  auto const kgens = generating_set(g, K);
  for (Elem a : kgens) {
    if (!L.contains(g.pow(a, static_cast<std::int64_t>(p))))
      throw Error(ErrorKind::NotElementaryAbelian, "section has elements of order above p");
    for (Elem b : kgens)
      if (!L.contains(g.commutator(a, b)))
        throw Error(ErrorKind::NotElementaryAbelian, "section is not abelian");
  }

  std::size_t d = 0;
  for (std::size_t q = 1; q < index; q *= p)
    ++d;

  // coset[x] labels xL for x in K.
  std::vector<std::int32_t> coset(g.order(), -1);
  auto const lels = L.elements();
  std::int32_t ncosets = 0;
  for (Elem x : K.elements())
    if (coset[x] < 0) {
      for (Elem l : lels)
        coset[g.mul(x, l)] = ncosets;
      ++ncosets;
    }

  FpModule X;
  X.group = G;
  X.prime = p;
  X.dim = d;
  X.K = K;
  X.L = L;
  std::vector<fp::Vec> coord(static_cast<std::size_t>(ncosets));
  std::vector<Elem> rep(static_cast<std::size_t>(ncosets));
  std::vector<std::int32_t> known{coset[0]};
  coord[coset[0]] = fp::Vec(d, 0);
  rep[coset[0]] = 0;
  for (Elem x : K.elements()) {
    if (!coord[coset[x]].empty())
      continue;
    std::size_t const i = X.basis.size();
    X.basis.push_back(x);
    std::vector<std::int32_t> const old = known;
    for (auto c : old) {
      Elem y = rep[c];
      for (std::uint64_t k = 1; k < p; ++k) {
        y = g.mul(y, x);
        auto const cy = coset[y];
        fp::Vec v = coord[c];
        v[i] = k;
        coord[cy] = std::move(v);
        rep[cy] = y;
        known.push_back(cy);
      }
    }
  }

  for (Elem s : g.generators()) {
    fp::Mat A;
    for (Elem b : X.basis)
      A.push_back(coord[coset[g.conj(b, s)]]);
    X.action.push_back(std::move(A));
  }
  return X;
}

FpModule x_module(Lattice const &lattice, ElementSet const &M)
{
  Group const &G = *lattice.group();
  auto loc = lattice.locate(M);
  auto const &maxes = lattice.maximal_classes();
  if (!loc || std::find(maxes.begin(), maxes.end(), loc->first) == maxes.end())
    throw Error(ErrorKind::NotSubgroup, "not a maximal subgroup");
  std::uint64_t const index = G.order() / M.count();
  bool ok = false;
  for (auto p : prime_divisors(index))
    ok = ok || lattice.is_p_solvable(p);
  if (!ok)
    throw Error(ErrorKind::SolvabilityHypothesisFailed, "G is not p-solvable for any prime dividing |G:M|");

  ElementSet const N = core(G, M);
  std::vector<ElementSet> above;
  for (std::size_t c : lattice.normal_classes()) {
    auto const &K = lattice[c].representative.members;
    if (N.is_subset_of(K) && K.count() > N.count())
      above.push_back(K);
  }
  std::vector<ElementSet> minimal;
  for (auto const &K : above) {
    bool is_min = true;
    for (auto const &J : above)
      is_min = is_min && !(J.count() < K.count() && J.is_subset_of(K));
    if (is_min)
      minimal.push_back(K);
  }
  if (minimal.size() != 1)
    throw Error(ErrorKind::SolvabilityHypothesisFailed, "G/Core(M) has no unique minimal normal subgroup");
  return section_module(lattice.group(), minimal[0], N);
}

FpModule dual_module(FpModule const &X)
{
  FpModule D;
  D.group = X.group;
  D.prime = X.prime;
  D.dim = X.dim;
  for (auto const &A : X.action)
    D.action.push_back(fp::transpose(fp::inverse(A, X.prime)));
  return D;
}

std::vector<fp::Mat> intertwiners(FpModule const &X, FpModule const &Y)
{
  require_same_group(X, Y);
  if (X.prime != Y.prime)
    throw Error(ErrorKind::PrimeMismatch, "modules are over different primes");
  std::uint64_t const p = X.prime;
  std::size_t const m = X.dim, n = Y.dim;
  fp::Mat eqs;
  for (std::size_t g = 0; g < X.action.size(); ++g) {
    auto const &A = X.action[g];
    auto const &B = Y.action[g];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        fp::Vec row(m * n, 0);
        for (std::size_t c = 0; c < m; ++c)
          row[c * n + b] = (row[c * n + b] + A[a][c]) % p;
        for (std::size_t c = 0; c < n; ++c)
          row[a * n + c] = (row[a * n + c] + p - B[c][b]) % p;
        eqs.push_back(std::move(row));
      }
  }
  std::vector<fp::Mat> out;
  for (auto const &v : fp::nullspace(eqs, m * n, p)) {
    fp::Mat T(m, fp::Vec(n));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b)
        T[a][b] = v[a * n + b];
    out.push_back(std::move(T));
  }
  return out;
}

std::optional<fp::Mat> isomorphism(FpModule const &X, FpModule const &Y)
{
  require_same_group(X, Y);
  if (X.prime != Y.prime || X.dim != Y.dim)
    return std::nullopt;
  auto const basis = intertwiners(X, Y);
  if (basis.empty())
    return std::nullopt;
  std::uint64_t const p = X.prime;
  for (auto const &T : basis)
    if (!fp::inverse(T, p).empty())
      return T;
  // Non-simple modules may need a combination; try a fixed pseudo-random set.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int attempt = 0; attempt < 64; ++attempt) {
    fp::Mat T(X.dim, fp::Vec(X.dim, 0));
    for (auto const &B : basis) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      std::uint64_t c = (state >> 33) % p;
      for (std::size_t a = 0; a < X.dim; ++a)
        for (std::size_t b = 0; b < X.dim; ++b)
          T[a][b] = (T[a][b] + c * B[a][b]) % p;
    }
    if (!fp::inverse(T, p).empty())
      return T;
  }
  return std::nullopt;
}

bool is_isomorphic(FpModule const &X, FpModule const &Y) { return isomorphism(X, Y).has_value(); }

bool is_simple(FpModule const &X)
{
  if (X.dim <= 1)
    return true;
  std::uint64_t const p = X.prime;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < X.dim; ++i) {
    total *= p;
    if (total > kSpinLimit)
      throw Error(ErrorKind::ResourceCap, "module too large for exhaustive spinning");
  }
  // Projective points: first nonzero coordinate equal to 1.
  for (std::uint64_t code = 0; code < total; ++code) {
    fp::Vec v(X.dim);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < X.dim; ++i) {
      v[i] = c % p;
      c /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (first == v.end() || *first != 1)
      continue;
    Span span(X.dim, p);
    span.add(v);
    std::vector<fp::Vec> queue{v};
    for (std::size_t i = 0; i < queue.size() && span.size() < X.dim; ++i)
      for (auto const &A : X.action) {
        fp::Vec w = fp::vec_times_mat(queue[i], A, p);
        if (span.add(w))
          queue.push_back(std::move(w));
      }
    if (span.size() < X.dim)
      return false;
  }
  return true;
}

} // namespace solchar
