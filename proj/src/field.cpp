#include "nalg/field.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "nalg/error.hpp"

namespace nalg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFull));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  t0 %= p;
  return t0 < 0 ? t0 + p : t0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw InvalidArgument("prime modulus must be below 2^31");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::prime_with_i(std::uint32_t p) {
  FieldSpec f = prime(p);
  if (p == 2) {
    f.i_ = 1;
    return f;
  }
  if (p % 4 == 3) throw InvalidArgument("F" + std::to_string(p) + " has no square root of -1");
  for (std::uint64_t x = 1; x < p; ++x) {
    if ((x * x + 1) % p == 0) {
      f.i_ = static_cast<std::uint32_t>(x);
      return f;
    }
  }
  throw InvalidArgument("no square root of -1 found");
}

FieldSpec FieldSpec::prime_with_i(std::uint32_t p, std::uint32_t i) {
  FieldSpec f = prime(p);
  std::uint64_t x = i % p;
  if ((x * x + 1) % p != 0)
    throw InvalidArgument(std::to_string(i) + " is not a square root of -1 in F" + std::to_string(p));
  f.i_ = static_cast<std::uint32_t>(x);
  return f;
}

Scalar FieldSpec::i() const {
  if (!i_) throw InvalidArgument("field " + name() + " carries no square root of -1");
  return Scalar::make_residue(p_, *i_);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (p_ == 0) return Scalar::make_rational(v, 1);
  return Scalar::make_residue(p_, v % static_cast<long long>(p_));
}

Scalar FieldSpec::from_fraction(long long num, long long den) const {
  if (den == 0) throw DivisionByZero();
  if (p_ == 0) return Scalar::make_rational(num, den);
  return from_int(num) / from_int(den);
}

Scalar FieldSpec::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  auto slash = text.find('/');
  std::string_view num_s = trim(text.substr(0, slash));
  std::string_view den_s = slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    mpz_class z;
    if (str.empty() || z.set_str(str, 10) != 0) throw ParseError("malformed scalar '" + std::string(s) + "'");
    return z;
  };
  mpz_class n = parse_int(num_s);
  mpz_class d = parse_int(den_s);
  if (d == 0) throw DivisionByZero();
  if (p_ == 0) return Scalar::make_rational(mpq_class(n, d));
  auto residue = [this](const mpz_class& z) {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return Scalar::make_residue(p_, r.get_si());
  };
  return residue(n) / residue(d);
}

std::string FieldSpec::name() const {
  if (p_ == 0) return "Q";
  std::string s = "F" + std::to_string(p_);
  if (i_) s += "(i=" + std::to_string(*i_) + ")";
  return s;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::make_residue(std::uint32_t p, std::int64_t v) {
  Scalar s;
  s.mod_ = p;
  v %= static_cast<std::int64_t>(p);
  s.num_ = v < 0 ? v + p : v;
  return s;
}

Scalar Scalar::make_rational(i128 num, i128 den) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
  }
  if (num == 0) den = 1;
  Scalar s;
  if (num <= kMax && num >= -kMax && den <= kMax) {
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::make_rational(mpq_class q) {
  q.canonicalize();
  if (fits_small(q.get_num()) && fits_small(q.get_den()))
    return make_rational(i128(q.get_num().get_si()), i128(q.get_den().get_si()));
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

void Scalar::check_same(const Scalar& b) const {
  if (mod_ != b.mod_) throw FieldMismatch();
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  if (mod_ != 0) return mpq_class(num_);
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint32_t Scalar::residue() const {
  if (mod_ == 0) throw InvalidArgument("residue requested for a rational scalar");
  return static_cast<std::uint32_t>(num_);
}

bool Scalar::is_negative() const {
  if (mod_ != 0) return false;
  if (big_) return sgn(*big_) < 0;
  return num_ < 0;
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same(b);
  if (mod_ != 0) return make_residue(mod_, num_ + b.num_);
  if (big_ || b.big_) return make_rational(to_mpq() + b.to_mpq());
  if (den_ == 1 && b.den_ == 1) return make_rational(i128(num_) + b.num_, 1);
  return make_rational(i128(num_) * b.den_ + i128(b.num_) * den_, i128(den_) * b.den_);
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mod_ != 0) {
    r.num_ = num_ == 0 ? 0 : mod_ - num_;
  } else if (big_) {
    r.big_ = std::make_shared<const mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& b) const {
  check_same(b);
  if (mod_ != 0) return make_residue(mod_, static_cast<std::int64_t>((std::uint64_t(num_) * std::uint64_t(b.num_)) % mod_));
  if (big_ || b.big_) return make_rational(to_mpq() * b.to_mpq());
  if (den_ == 1 && b.den_ == 1) return make_rational(i128(num_) * b.num_, 1);
  return make_rational(i128(num_) * b.num_, i128(den_) * b.den_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (mod_ != 0) return make_residue(mod_, mod_inverse(num_, mod_));
  if (big_) return make_rational(1 / *big_);
  return make_rational(den_, num_);
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same(b);
  return *this * b.inv();
}

bool Scalar::operator==(const Scalar& b) const {
  check_same(b);
  if (big_ || b.big_) {
    if (!big_ || !b.big_) return false;
    return *big_ == *b.big_;
  }
  return num_ == b.num_ && den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (mod_ != 0 || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nalg
