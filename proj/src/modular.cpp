#include "solchar/modular.hpp"

#include <utility>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar::fp {

namespace {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return a >= b ? a - b : a + p - b;
}

} // namespace

Mat identity(std::size_t n)
{
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

Mat multiply(Mat const &a, Mat const &b, std::uint64_t p)
{
  std::size_t const r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  Mat out(r, Vec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      std::uint64_t x = a[i][t];
      if (!x)
        continue;
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] = (out[i][j] + mulm(x, b[t][j], p)) % p;
    }
  return out;
}

Vec vec_times_mat(Vec const &v, Mat const &a, std::uint64_t p)
{
  Vec out(a.empty() ? 0 : a[0].size(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t])
      continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = (out[j] + mulm(v[t], a[t][j], p)) % p;
  }
  return out;
}

Mat transpose(Mat const &a)
{
  if (a.empty())
    return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

std::vector<std::size_t> rref(Mat &a, std::uint64_t p)
{
  std::vector<std::size_t> pivots;
  if (a.empty())
    return pivots;
  std::size_t const rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[r], a[piv]);
    std::uint64_t inv = invmod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j)
      a[r][j] = mulm(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j])
          a[i][j] = subm(a[i][j], mulm(f, a[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

std::size_t rank(Mat a, std::uint64_t p) { return rref(a, p).size(); }

Mat nullspace(Mat const &a, std::size_t cols, std::uint64_t p)
{
  Mat r = a;
  auto pivots = rref(r, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p - r[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(Mat const &a, std::uint64_t p)
{
  std::size_t const n = a.size();
  Mat aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = a[i][j] % p;
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, p);
  if (piv.size() < n || piv[n - 1] != n - 1)
    return {};
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

Vec charpoly(Mat a, std::uint64_t p)
{
  std::size_t const n = a.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t i = 0; i < n; ++i)
        std::swap(a[i][piv], a[i][m]);
    }
    std::uint64_t inv = invmod(a[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::uint64_t u = mulm(a[i][m - 1], inv, p);
      if (!u)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = subm(a[i][j], mulm(u, a[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j)
        a[j][m] = (a[j][m] + mulm(u, a[j][i], p)) % p;
    }
  }
  // Recurrence for the leading principal minors.
  std::vector<Vec> c(n + 1);
  c[0] = Vec{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    // (x - a[k-1][k-1]) * c[k-1]
    for (std::size_t i = 0; i < c[k - 1].size(); ++i) {
      next[i + 1] = (next[i + 1] + c[k - 1][i]) % p;
      next[i] = subm(next[i], mulm(a[k - 1][k - 1], c[k - 1][i], p), p);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      std::size_t const row = k - 1 - i;
      prod = mulm(prod, a[row + 1][row], p);
      std::uint64_t f = mulm(prod, a[row][k - 1], p);
      for (std::size_t t = 0; t < c[row].size(); ++t)
        next[t] = subm(next[t], mulm(f, c[row][t], p), p);
    }
    c[k] = std::move(next);
  }
  return c[n];
}

std::uint64_t primitive_root(std::uint64_t p)
{
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2)
    return 1;
  auto qs = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  return 1;
}

} // namespace solchar::fp
