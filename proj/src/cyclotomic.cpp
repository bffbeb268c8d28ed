#include "solchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorKind::Overflow, "cyclotomic coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b)
{
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(i128 n, i128 d)
{
  if (d == 0)
    throw Error(ErrorKind::Overflow, "division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num = narrow(n);
  r.den = narrow(d);
  return r;
}

std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num, std::vector<std::int64_t> const &den)
{
  // den is monic
  std::size_t const dd = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t coef = num[i];
    q[i - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j)
      num[i - dd + j] = checked_add(num[i - dd + j], -checked_mul(coef, den[j]));
  }
  return q;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make_rational(n, d); }

std::string Rational::to_string() const
{
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational const &a, Rational const &b)
{
  return make_rational(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Rational operator-(Rational const &a, Rational const &b) { return a + (-b); }

Rational operator*(Rational const &a, Rational const &b)
{
  return make_rational(i128(a.num) * b.num, i128(a.den) * b.den);
}

Rational operator/(Rational const &a, Rational const &b)
{
  return make_rational(i128(a.num) * b.den, i128(a.den) * b.num);
}

bool operator<(Rational const &a, Rational const &b)
{
  return i128(a.num) * b.den < i128(b.num) * a.den;
}

CyclotomicField const &CyclotomicField::get(std::uint32_t n)
{
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicField>> fields;
  if (n == 0)
    throw Error(ErrorKind::Overflow, "cyclotomic conductor must be positive");
  {
    std::lock_guard lock(mu);
    auto it = fields.find(n);
    if (it != fields.end())
      return *it->second;
  }
  // Divisor fields are built outside the lock to allow recursion.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0)
      poly = exact_divide(poly, get(d).poly);

  auto f = std::make_unique<CyclotomicField>();
  f->n = n;
  f->phi = static_cast<std::uint32_t>(poly.size() - 1);
  f->poly = poly;
  f->power.resize(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> v(f->phi, 0);
    if (j < f->phi) {
      v[j] = 1;
    } else {
      auto const &prev = f->power[j - 1];
      std::int64_t top = prev[f->phi - 1];
      for (std::uint32_t i = f->phi - 1; i > 0; --i)
        v[i] = prev[i - 1];
      v[0] = 0;
      for (std::uint32_t i = 0; i < f->phi; ++i)
        v[i] = checked_add(v[i], -checked_mul(top, poly[i]));
    }
    f->power[j] = std::move(v);
  }
  std::lock_guard lock(mu);
  auto [it, fresh] = fields.emplace(n, std::move(f));
  return *it->second;
}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<std::int64_t> c, std::int64_t den)
    : n_(n), c_(std::move(c)), den_(den)
{
  normalize();
}

Cyclotomic::Cyclotomic(std::int64_t v) : n_(1), c_{v}, den_(1) {}

Cyclotomic::Cyclotomic(Rational const &r) : n_(1), c_{r.num}, den_(r.den) {}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k)
{
  auto const &F = CyclotomicField::get(n);
  std::int64_t j = k % static_cast<std::int64_t>(n);
  if (j < 0)
    j += n;
  return Cyclotomic(n, F.power[static_cast<std::size_t>(j)], 1);
}

Cyclotomic Cyclotomic::from_root_multiplicities(std::uint32_t n, std::vector<std::int64_t> const &mult)
{
  auto const &F = CyclotomicField::get(n);
  std::vector<i128> acc(F.phi, 0);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (!mult[k])
      continue;
    auto const &p = F.power[k % n];
    for (std::uint32_t i = 0; i < F.phi; ++i)
      acc[i] += i128(mult[k]) * p[i];
  }
  std::vector<std::int64_t> c(F.phi);
  for (std::uint32_t i = 0; i < F.phi; ++i)
    c[i] = narrow(acc[i]);
  return Cyclotomic(n, std::move(c), 1);
}

void Cyclotomic::normalize()
{
  if (den_ == 0)
    throw Error(ErrorKind::Overflow, "zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto &x : c_)
      x = -x;
  }
  std::int64_t g = den_;
  for (auto x : c_)
    g = std::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto &x : c_)
      x /= g;
  }
  bool zero = true;
  for (auto x : c_)
    zero = zero && x == 0;
  if (zero)
    den_ = 1;
}

bool Cyclotomic::is_zero() const
{
  for (auto x : c_)
    if (x)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i])
      return false;
  return true;
}

Rational Cyclotomic::to_rational() const
{
  if (!is_rational())
    throw Error(ErrorKind::NotIrreducible, "value " + to_string() + " is not rational");
  return Rational(c_[0], den_);
}

Cyclotomic Cyclotomic::promote(std::uint32_t m) const
{
  if (m == n_)
    return *this;
  if (m % n_ != 0)
    throw Error(ErrorKind::Overflow, "conductor " + std::to_string(n_) + " does not divide " + std::to_string(m));
  auto const &F = CyclotomicField::get(m);
  std::uint32_t const step = m / n_;
  std::vector<i128> acc(F.phi, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j])
      continue;
    auto const &p = F.power[(j * step) % m];
    for (std::uint32_t i = 0; i < F.phi; ++i)
      acc[i] += i128(c_[j]) * p[i];
  }
  std::vector<std::int64_t> c(F.phi);
  for (std::uint32_t i = 0; i < F.phi; ++i)
    c[i] = narrow(acc[i]);
  return Cyclotomic(m, std::move(c), den_);
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const
{
  auto const &F = CyclotomicField::get(n_);
  std::int64_t kk = k % static_cast<std::int64_t>(n_);
  if (kk < 0)
    kk += n_;
  std::vector<i128> acc(F.phi, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j])
      continue;
    auto const &p = F.power[(j * static_cast<std::uint64_t>(kk)) % n_];
    for (std::uint32_t i = 0; i < F.phi; ++i)
      acc[i] += i128(c_[j]) * p[i];
  }
  std::vector<std::int64_t> c(F.phi);
  for (std::uint32_t i = 0; i < F.phi; ++i)
    c[i] = narrow(acc[i]);
  return Cyclotomic(n_, std::move(c), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::uint32_t Cyclotomic::common(Cyclotomic const &a, Cyclotomic const &b, Cyclotomic &x, Cyclotomic &y)
{
  std::uint32_t m = std::lcm(a.n_, b.n_);
  x = a.promote(m);
  y = b.promote(m);
  return m;
}

Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.n_ != b.n_) {
    Cyclotomic x, y;
    Cyclotomic::common(a, b, x, y);
    return x + y;
  }
  std::int64_t l = std::lcm(a.den_, b.den_);
  i128 fa = l / a.den_, fb = l / b.den_;
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = narrow(fa * a.c_[i] + fb * b.c_[i]);
  return Cyclotomic(a.n_, std::move(c), l);
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic r = *this;
  for (auto &x : r.c_)
    x = -x;
  return r;
}

Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b) { return a + (-b); }

Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.n_ != b.n_) {
    Cyclotomic x, y;
    Cyclotomic::common(a, b, x, y);
    return x * y;
  }
  if (a.is_rational())
    return b * Rational(a.c_[0], a.den_);
  if (b.is_rational())
    return a * Rational(b.c_[0], b.den_);
  auto const &F = CyclotomicField::get(a.n_);
  std::size_t const phi = F.phi;
  std::vector<i128> conv(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (!a.c_[i])
      continue;
    for (std::size_t j = 0; j < phi; ++j)
      conv[i + j] += i128(a.c_[i]) * b.c_[j];
  }
  std::vector<i128> acc(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t k = phi; k < conv.size(); ++k) {
    if (!conv[k])
      continue;
    auto const &p = F.power[k % a.n_];
    for (std::size_t i = 0; i < phi; ++i)
      acc[i] += conv[k] * p[i];
  }
  std::vector<std::int64_t> c(phi);
  for (std::size_t i = 0; i < phi; ++i)
    c[i] = narrow(acc[i]);
  return Cyclotomic(a.n_, std::move(c), narrow(i128(a.den_) * b.den_));
}

Cyclotomic operator*(Cyclotomic const &a, Rational const &r)
{
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = narrow(i128(a.c_[i]) * r.num);
  return Cyclotomic(a.n_, std::move(c), narrow(i128(a.den_) * r.den));
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.n_ != b.n_) {
    Cyclotomic x, y;
    Cyclotomic::common(a, b, x, y);
    return x == y;
  }
  return a.den_ == b.den_ && a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const
{
  if (is_rational())
    return Rational(c_[0], den_).to_string();
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i])
      continue;
    std::int64_t v = c_[i];
    s += v < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    std::int64_t av = v < 0 ? -v : v;
    if (i == 0)
      s += std::to_string(av);
    else {
      if (av != 1)
        s += std::to_string(av) + "*";
      s += "z" + std::to_string(n_) + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  if (den_ != 1)
    s = "(" + s + ")/" + std::to_string(den_);
  return s;
}

std::uint64_t Cyclotomic::mod_image(std::uint64_t p, std::uint64_t g) const
{
  if ((p - 1) % n_ != 0)
    throw Error(ErrorKind::NotPrime, "modulus is not 1 mod the conductor");
  std::uint64_t z = powmod(g, (p - 1) / n_, p);
  unsigned __int128 acc = 0;
  std::uint64_t zj = 1;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    std::int64_t v = c_[j];
    std::uint64_t vm = v >= 0 ? std::uint64_t(v) % p : (p - std::uint64_t(-(v + 1)) % p - 1) % p;
    acc = (acc + (unsigned __int128)vm * zj) % p;
    zj = static_cast<std::uint64_t>((unsigned __int128)zj * z % p);
  }
  std::uint64_t d = invmod(static_cast<std::uint64_t>(den_) % p, p);
  return static_cast<std::uint64_t>(acc * d % p);
}

} // namespace solchar
