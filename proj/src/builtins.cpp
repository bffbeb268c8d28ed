#include "solchar/builtins.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "solchar/error.hpp"
#include "solchar/numtheory.hpp"

namespace solchar {

namespace {

std::string num(std::uint64_t x) { return std::to_string(x); }

void require(bool ok, std::string const &msg)
{
  if (!ok)
    throw Error(ErrorKind::ConfigError, msg);
}

using Mat2 = std::array<std::uint64_t, 4>; // row-major [a b; c d]

Mat2 mat_mul(Mat2 const &x, Mat2 const &y, std::uint64_t p)
{
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

bool is_square_mod(std::uint64_t a, std::uint64_t p)
{
  a %= p;
  for (std::uint64_t x = 0; x < p; ++x)
    if (x * x % p == a)
      return true;
  return false;
}

} // namespace

GroupPtr cyclic(std::uint64_t n)
{
  require(n >= 1, "cyclic order must be positive");
  std::vector<Point> img(n);
  for (std::uint64_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return Group::from_generators("cyclic(" + num(n) + ")", n, {Permutation(img)});
}

GroupPtr abelian(std::vector<std::uint64_t> const &invariants)
{
  require(!invariants.empty(), "abelian needs at least one invariant");
  std::size_t degree = 0;
  for (auto d : invariants) {
    require(d >= 1, "abelian invariants must be positive");
    degree += d;
  }
  std::vector<Permutation> gens;
  std::string name = "abelian(";
  std::size_t shift = 0;
  for (std::size_t k = 0; k < invariants.size(); ++k) {
    auto d = invariants[k];
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i)
      img[i] = static_cast<Point>(i);
    for (std::uint64_t i = 0; i < d; ++i)
      img[shift + i] = static_cast<Point>(shift + (i + 1) % d);
    gens.emplace_back(img);
    shift += d;
    name += (k ? "," : "") + num(d);
  }
  return Group::from_generators(name + ")", degree, gens);
}

GroupPtr dihedral(std::uint64_t order)
{
  require(order >= 2 && order % 2 == 0, "dihedral order must be even");
  std::uint64_t n = order / 2;
  std::vector<Point> rot(n), refl(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return Group::from_generators("dihedral(" + num(order) + ")", n,
                                {Permutation(rot), Permutation(refl)});
}

GroupPtr frobenius(std::uint64_t p, std::uint64_t q)
{
  require(is_prime(p), "frobenius: p must be prime");
  require(q >= 1 && (p - 1) % q == 0, "frobenius: q must divide p-1");
  std::uint64_t w = 1;
  for (std::uint64_t a = 1; a < p; ++a) {
    std::uint64_t o = 1, x = a;
    while (x != 1) {
      x = x * a % p;
      ++o;
    }
    if (o == q) {
      w = a;
      break;
    }
  }
  std::vector<Point> t(p), m(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    t[x] = static_cast<Point>((x + 1) % p);
    m[x] = static_cast<Point>(x * w % p);
  }
  return Group::from_generators("frobenius(" + num(p) + "," + num(q) + ")", p,
                                {Permutation(t), Permutation(m)});
}

GroupPtr extraspecial(std::uint64_t p)
{
  require(is_prime(p) && p % 2 == 1, "extraspecial: p must be an odd prime");
  std::size_t const n = p * p;
  std::vector<Point> a(n), b(n), c(n);
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      auto at = [&](std::uint64_t u, std::uint64_t v) { return static_cast<Point>(u * p + v); };
      a[x * p + y] = at((x + 1) % p, y);
      b[x * p + y] = at(x, (y + x) % p);
      c[x * p + y] = at(x, (y + 1) % p);
    }
  return Group::from_generators("extraspecial(" + num(p) + ")", n,
                                {Permutation(a), Permutation(b), Permutation(c)});
}

GroupPtr fullyramified(std::uint64_t p, std::uint64_t q, std::size_t cap)
{
  require(is_prime(p) && p % 2 == 1, "fullyramified: p must be an odd prime");
  require(is_prime(q) && (p + 1) % q == 0, "fullyramified: q must be a prime dividing p+1");
  require(p * p * p * q <= cap, "fullyramified: order exceeds cap");

  // First matrix in lexicographic order with det 1, order q and an
  // irreducible characteristic polynomial.
  Mat2 A{};
  bool found = false;
  Mat2 const I{1, 0, 0, 1};
  for (std::uint64_t code = 0; code < p * p * p * p && !found; ++code) {
    Mat2 m{code / (p * p * p), code / (p * p) % p, code / p % p, code % p};
    if ((m[0] * m[3] + p * p - m[1] * m[2] % p) % p != 1 || m == I)
      continue;
    Mat2 x = m;
    for (std::uint64_t k = 1; k < q; ++k)
      x = mat_mul(x, m, p);
    if (x != I)
      continue;
    std::uint64_t t = (m[0] + m[3]) % p;
    std::uint64_t disc = (t * t + 4 * p - 4) % p;
    if (disc == 0 || is_square_mod(disc, p))
      continue;
    A = m;
    found = true;
  }
  require(found, "fullyramified: no suitable matrix");

  std::vector<Mat2> powers{I};
  for (std::uint64_t k = 1; k < q; ++k)
    powers.push_back(mat_mul(powers.back(), A, p));
  std::uint64_t const half = invmod(2, p);

  auto encode = [=](std::uint64_t v1, std::uint64_t v2, std::uint64_t z, std::uint64_t k) {
    return ((v1 * p + v2) * p + z) * q + k;
  };
  // (v, z, k)(w, z', k') = (v + A^k w, z + z' + omega(v, A^k w)/2, k + k')
  auto mul = [=](std::uint64_t x, std::uint64_t y) {
    std::uint64_t k = x % q, z = x / q % p, v2 = x / (q * p) % p, v1 = x / (q * p * p);
    std::uint64_t k2 = y % q, z2 = y / q % p, w2 = y / (q * p) % p, w1 = y / (q * p * p);
    Mat2 const &M = powers[k];
    std::uint64_t u1 = (M[0] * w1 + M[1] * w2) % p;
    std::uint64_t u2 = (M[2] * w1 + M[3] * w2) % p;
    std::uint64_t omega = (v1 * u2 + p * p - v2 * u1 % p) % p;
    return encode((v1 + u1) % p, (v2 + u2) % p, (z + z2 + half * omega) % p, (k + k2) % q);
  };
  return Group::from_multiplication("fullyramified(" + num(p) + "," + num(q) + ")",
                                    encode(0, 0, 0, 0),
                                    {encode(1, 0, 0, 0), encode(0, 1, 0, 0), encode(0, 0, 0, 1)},
                                    mul, cap);
}

GroupPtr gl23()
{
  // Points are the nonzero row vectors (a, b), indexed 3a + b - 1.
  auto act = [](Mat2 const &m) {
    std::vector<Point> img(8);
    for (std::uint64_t a = 0; a < 3; ++a)
      for (std::uint64_t b = 0; b < 3; ++b) {
        if (a == 0 && b == 0)
          continue;
        std::uint64_t x = (a * m[0] + b * m[2]) % 3, y = (a * m[1] + b * m[3]) % 3;
        img[3 * a + b - 1] = static_cast<Point>(3 * x + y - 1);
      }
    return Permutation(img);
  };
  return Group::from_generators("gl23", 8, {act({1, 1, 0, 1}), act({0, 1, 1, 0})});
}

GroupPtr direct_product(GroupPtr const &a, GroupPtr const &b, std::size_t cap)
{
  std::size_t const degree = a->degree() + b->degree();
  std::vector<Permutation> gens;
  for (auto const &g : a->generator_permutations())
    gens.push_back(g.embedded(degree, 0));
  for (auto const &g : b->generator_permutations())
    gens.push_back(g.embedded(degree, a->degree()));
  return Group::from_generators("direct_product(" + a->name() + "," + b->name() + ")", degree,
                                gens, cap);
}

namespace {

class NameParser {
public:
  NameParser(std::string const &text, std::size_t cap) : cap_(cap)
  {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        s_ += ch;
  }

  GroupPtr parse()
  {
    GroupPtr g = group();
    if (pos_ != s_.size())
      fail("trailing characters");
    return g;
  }

private:
  std::string s_;
  std::size_t pos_ = 0;
  std::size_t cap_;

  [[noreturn]] void fail(std::string const &why) const
  {
    throw Error(ErrorKind::ParseError,
                "cannot parse group name '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool eat(char c)
  {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident()
  {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t integer()
  {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_ || pos_ - start > 9)
      fail("expected an integer");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  std::vector<std::uint64_t> integers()
  {
    std::vector<std::uint64_t> out;
    if (!eat('('))
      fail("expected '('");
    do
      out.push_back(integer());
    while (eat(','));
    if (!eat(')'))
      fail("expected ')'");
    return out;
  }

  GroupPtr group()
  {
    std::string id = ident();
    if (id == "gl23") {
      if (eat('(') && !eat(')'))
        fail("gl23 takes no arguments");
      return gl23();
    }
    if (id == "direct_product") {
      if (!eat('('))
        fail("expected '('");
      GroupPtr a = group();
      if (!eat(','))
        fail("expected ','");
      GroupPtr b = group();
      if (!eat(')'))
        fail("expected ')'");
      return direct_product(a, b, cap_);
    }
    auto args = integers();
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        fail(id + " takes " + std::to_string(n) + " argument(s)");
    };
    GroupPtr g;
    if (id == "cyclic") {
      arity(1);
      g = cyclic(args[0]);
    } else if (id == "abelian") {
      g = abelian(args);
    } else if (id == "dihedral") {
      arity(1);
      g = dihedral(args[0]);
    } else if (id == "frobenius") {
      arity(2);
      g = frobenius(args[0], args[1]);
    } else if (id == "extraspecial") {
      arity(1);
      g = extraspecial(args[0]);
    } else if (id == "fullyramified") {
      arity(2);
      g = fullyramified(args[0], args[1], cap_);
    } else {
      fail("unknown group constructor '" + id + "'");
    }
    if (g->order() > cap_)
      throw Error(ErrorKind::CapExceeded, g->name() + " exceeds order cap " + std::to_string(cap_));
    return g;
  }
};

} // namespace

GroupPtr group_from_name(std::string const &expr, std::size_t cap)
{
  return NameParser(expr, cap).parse();
}

GroupPtr group_from_json_text(std::string const &text, std::size_t cap)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw Error(ErrorKind::ParseError, std::string("group file: ") + e.what());
  }
  try {
    std::string name = doc.value("name", std::string("group"));
    std::size_t degree = doc.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (auto const &g : doc.at("generators"))
      gens.push_back(Permutation::from_cycles(
          degree, g.get<std::vector<std::vector<std::int64_t>>>(), true));
    return Group::from_generators(name, degree, gens, cap);
  } catch (nlohmann::json::exception const &e) {
    throw Error(ErrorKind::ParseError, std::string("group file: ") + e.what());
  }
}

GroupPtr group_from_file(std::string const &path, std::size_t cap)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open group file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_json_text(ss.str(), cap);
}

GroupPtr resolve_group(std::string const &spec, std::size_t cap)
{
  std::error_code ec;
  if (spec.find('(') == std::string::npos && std::filesystem::is_regular_file(spec, ec))
    return group_from_file(spec, cap);
  return group_from_name(spec, cap);
}

} // namespace solchar
