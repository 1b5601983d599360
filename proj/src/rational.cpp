#include "twisted_h1/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "twisted_h1/error.hpp"

namespace twisted_h1 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  return std::abs(checked_mul(a / g, b));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked_mul(num, -1);
    den = checked_mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) fail(ErrorKind::not_in_lattice, "value " + to_string() + " is not an integer");
  return num_;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational& Rational::operator+=(const Rational& o) {
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t lhs = checked_mul(num_, o.den_ / g);
  const std::int64_t rhs = checked_mul(o.num_, den_ / g);
  *this = Rational(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  // denominators are positive, so both gcds are nonzero
  const std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
  const std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::invalid_input, "cannot parse rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) fail(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_rank: return "InvalidRank";
    case ErrorKind::unsupported_automorphism: return "UnsupportedAutomorphism";
    case ErrorKind::rank_defect: return "RankDefect";
    case ErrorKind::not_in_lattice: return "NotInLattice";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::incompatible_order: return "IncompatibleOrder";
    case ErrorKind::method_unavailable: return "MethodUnavailable";
    case ErrorKind::not_adjoint: return "NotAdjoint";
    case ErrorKind::not_simply_connected: return "NotSimplyConnected";
    case ErrorKind::not_in_alcove: return "NotInAlcove";
    case ErrorKind::invalid_assignment: return "InvalidAssignment";
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace twisted_h1
