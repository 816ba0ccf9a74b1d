#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobknot {

using Integer = mpz_class;
using Scalar = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, PrimeField };

/// Coefficient ring: the integers, the rationals, or a prime field F_p.
///
/// Elements of every ring are carried as `Scalar` (a GMP rational). A value is
/// a valid element when it is an integer (Integers), any reduced fraction
/// (Rationals) or an integer residue in [0, p) (PrimeField).
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  /// Throws if p is not a prime in [2, 2^31].
  static RingSpec prime_field(std::uint64_t p);
  /// Accepts "Z", "Q", "Fp:P" (also "F<P>" and "GF(P)").
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool is_prime_field() const { return kind_ == RingKind::PrimeField; }

  /// Maps an arbitrary rational into the ring: reduction mod p (denominator
  /// must be invertible), identity on Q, and an error for non-integers on Z.
  Scalar from_rational(const Scalar& q) const;
  Scalar from_int(long v) const { return from_rational(Scalar(v)); }
  bool contains(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse inside the ring, if it exists (only +-1 on Z).
  std::optional<Scalar> inverse(const Scalar& a) const;
  /// Decimal for Z, "n/d" for Q, residue 0..p-1 for F_p.
  std::string format(const Scalar& x) const;
  Scalar parse_scalar(std::string_view text) const;

  /// Short name: "Z", "Q" or "Fp:P".
  std::string name() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  RingSpec(RingKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace frobknot
