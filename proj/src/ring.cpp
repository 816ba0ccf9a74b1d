#include "frobknot/ring.hpp"

#include <cctype>
#include <limits>

namespace frobknot {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error("modulus " + std::to_string(p) + " is not a prime <= 2^31");
  return RingSpec(RingKind::PrimeField, static_cast<std::uint32_t>(p));
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string t(text);
  for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "Z" || t == "ZZ") return integers();
  if (t == "Q" || t == "QQ") return rationals();
  std::string digits;
  if (t.rfind("FP:", 0) == 0)
    digits = t.substr(3);
  else if (t.rfind("GF(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (t.size() > 1 && t[0] == 'F')
    digits = t.substr(1);
  if (digits.empty() || digits.size() > 12)
    throw Error("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:P)");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:P)");
  return prime_field(std::stoull(digits));
}

Scalar RingSpec::from_rational(const Scalar& q) const {
  switch (kind_) {
    case RingKind::Rationals:
      return q;
    case RingKind::Integers:
      if (q.get_den() != 1) throw Error("value " + q.get_str() + " is not an integer");
      return q;
    case RingKind::PrimeField: {
      Integer p(p_);
      Integer num, den, inv;
      mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
      mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
      if (den == 0) throw Error("denominator of " + q.get_str() + " vanishes mod " + p.get_str());
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      Integer r = num * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      return Scalar(r);
    }
  }
  return q;
}

bool RingSpec::contains(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals:
      return true;
    case RingKind::Integers:
      return x.get_den() == 1;
    case RingKind::PrimeField:
      return x.get_den() == 1 && x >= 0 && x < p_;
  }
  return false;
}

Scalar RingSpec::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (kind_ == RingKind::PrimeField && r >= p_) r -= p_;
  return r;
}

Scalar RingSpec::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (kind_ == RingKind::PrimeField && r < 0) r += p_;
  return r;
}

Scalar RingSpec::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ != RingKind::PrimeField) return a * b;
  Integer r = a.get_num() * b.get_num();
  return Scalar(Integer(mpz_fdiv_ui(r.get_mpz_t(), p_)));
}

Scalar RingSpec::neg(const Scalar& a) const {
  if (kind_ == RingKind::PrimeField) return a == 0 ? a : Scalar(p_) - a;
  return -a;
}

std::optional<Scalar> RingSpec::inverse(const Scalar& a) const {
  if (a == 0) return std::nullopt;
  switch (kind_) {
    case RingKind::Rationals:
      return Scalar(1) / a;
    case RingKind::Integers:
      if (a == 1 || a == -1) return a;
      return std::nullopt;
    case RingKind::PrimeField:
      return from_rational(Scalar(1) / a);
  }
  return std::nullopt;
}

std::string RingSpec::format(const Scalar& x) const {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar RingSpec::parse_scalar(std::string_view text) const {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start]))) ++start;
  t = t.substr(start);
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  Scalar q;
  if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0)
    throw Error("cannot parse scalar '" + std::string(text) + "'");
  q.canonicalize();
  return from_rational(q);
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "Fp:" + std::to_string(p_);
  }
  return "?";
}

}  // namespace frobknot
