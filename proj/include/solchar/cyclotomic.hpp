#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace solchar {

/// Exact rational with positive denominator in lowest terms. Arithmetic
/// throws Overflow instead of wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {} // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend Rational operator+(Rational const &a, Rational const &b);
  friend Rational operator-(Rational const &a, Rational const &b);
  friend Rational operator*(Rational const &a, Rational const &b);
  friend Rational operator/(Rational const &a, Rational const &b);
  Rational operator-() const { return Rational(-num, den); }
  friend bool operator==(Rational const &, Rational const &) = default;
  friend bool operator<(Rational const &a, Rational const &b);
};

/// Power basis data for Q(zeta_n): the n-th cyclotomic polynomial and the
/// reduction of every power zeta^j, 0 <= j < n.
struct CyclotomicField {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::int64_t> poly; // monic, low degree first
  std::vector<std::vector<std::int64_t>> power;

  static CyclotomicField const &get(std::uint32_t n);
};

/// An element of Q(zeta_n) as (coefficients in the power basis) / den.
/// Equality is exact; values of different conductor compare in the
/// compositum.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(std::int64_t(0)) {}
  Cyclotomic(std::int64_t v); // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational const &r); // NOLINT(google-explicit-constructor)
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// sum_k mult[k] * zeta_n^k
  static Cyclotomic from_root_multiplicities(std::uint32_t n, std::vector<std::int64_t> const &mult);

  std::uint32_t conductor() const { return n_; }
  std::vector<std::int64_t> const &coefficients() const { return c_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const { return is_rational() && den_ == 1; }
  /// Throws if the value is not rational.
  Rational to_rational() const;

  Cyclotomic promote(std::uint32_t m) const;
  Cyclotomic conj() const;
  /// zeta -> zeta^k, k coprime to the conductor.
  Cyclotomic galois(std::int64_t k) const;

  friend Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b);
  friend Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b);
  friend Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b);
  friend Cyclotomic operator*(Cyclotomic const &a, Rational const &r);
  Cyclotomic operator-() const;
  Cyclotomic &operator+=(Cyclotomic const &b) { return *this = *this + b; }
  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

  std::string to_string() const;

  /// Image under zeta_n -> g^((p-1)/n) in F_p, for a prime p = 1 mod n and a
  /// primitive root g. Consistent across conductors dividing p-1.
  std::uint64_t mod_image(std::uint64_t p, std::uint64_t g) const;

private:
  std::uint32_t n_ = 1;
  std::vector<std::int64_t> c_;
  std::int64_t den_ = 1;

  Cyclotomic(std::uint32_t n, std::vector<std::int64_t> c, std::int64_t den);
  void normalize();
  static std::uint32_t common(Cyclotomic const &a, Cyclotomic const &b, Cyclotomic &x, Cyclotomic &y);
};

} // namespace solchar
