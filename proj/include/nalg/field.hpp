#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nalg {

class Scalar;

/// Either the rationals (characteristic 0) or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);
  /// F_p together with the smallest residue whose square is -1.
  static FieldSpec prime_with_i(std::uint32_t p);
  /// F_p with an explicitly chosen square root of -1 (verified).
  static FieldSpec prime_with_i(std::uint32_t p, std::uint32_t i);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  bool has_i() const { return i_.has_value(); }
  Scalar i() const;
  std::optional<std::uint32_t> i_residue() const { return i_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  Scalar parse(std::string_view text) const;

  /// "Q", "F5", "F13(i=5)".
  std::string name() const;

  /// Same underlying field (the chosen square root of -1 is ignored).
  bool same_field(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator==(const FieldSpec& o) const { return p_ == o.p_ && i_ == o.i_; }

 private:
  std::uint32_t p_ = 0;
  std::optional<std::uint32_t> i_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; small values live inline and overflow promotes to GMP.
class Scalar {
 public:
  Scalar() = default;

  std::uint32_t modulus() const { return mod_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inv() const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  std::string to_string() const;
  mpq_class to_mpq() const;
  /// Residue in [0, p) for prime fields.
  std::uint32_t residue() const;
  bool is_negative() const;

 private:
  friend class FieldSpec;
  static Scalar make_rational(__int128 num, __int128 den);
  static Scalar make_rational(mpq_class q);
  static Scalar make_residue(std::uint32_t p, std::int64_t v);
  void check_same(const Scalar& b) const;

  std::uint32_t mod_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nalg
