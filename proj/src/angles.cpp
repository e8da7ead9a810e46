#include "pwl/angles.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "pwl/errors.hpp"
#include "pwl/numeric_policy.hpp"

namespace pwl {
namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorKind::InvalidArgument, "turn fraction overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

// Reduces p/q (q > 0) and returns the pair.
std::pair<i128, i128> reduce(i128 p, i128 q) {
  i128 a = p < 0 ? -p : p;
  i128 b = q;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) return {0, 1};
  return {p / a, q / a};
}

std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b,
                                       std::int64_t c, std::int64_t d) {
  const i128 lhs = static_cast<i128>(a) * d;
  const i128 rhs = static_cast<i128>(c) * b;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double turns_to_radians(std::int64_t num, std::int64_t den) {
  constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
  return static_cast<double>(kTwoPiL * static_cast<long double>(num) /
                             static_cast<long double>(den));
}

}  // namespace

TurnAngle::TurnAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "turn denominator must be positive");
  i128 p = static_cast<i128>(num) % den;
  if (p < 0) p += den;
  auto [rp, rq] = reduce(p, den);
  num_ = narrow(rp);
  den_ = narrow(rq);
}

TurnAngle TurnAngle::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorKind::ParseError,
                  "bad turn fraction '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (parse_int(text) != 0)
      throw Error(ErrorKind::ParseError, "turn '" + std::string(text) + "' is not in [0, 1)");
    return TurnAngle();
  }
  const std::int64_t q = parse_int(text.substr(slash + 1));
  const std::int64_t p = parse_int(text.substr(0, slash));
  if (q <= 0 || p < 0 || p >= q)
    throw Error(ErrorKind::ParseError,
                "turn fraction '" + std::string(text) + "' is not in [0, 1)");
  return TurnAngle(p, q);
}

double TurnAngle::radians() const { return turns_to_radians(num_, den_); }

std::string TurnAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const TurnAngle& a, const TurnAngle& b) {
  return compare_fractions(a.num_, a.den_, b.num_, b.den_);
}

TurnSpan::TurnSpan(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num > den)
    throw Error(ErrorKind::InvalidArgument, "turn span must lie in (0, 1]");
  auto [p, q] = reduce(num, den);
  num_ = narrow(p);
  den_ = narrow(q);
}

TurnSpan TurnSpan::between(TurnAngle from, TurnAngle to) {
  i128 p = static_cast<i128>(to.num()) * from.den() -
           static_cast<i128>(from.num()) * to.den();
  const i128 q = static_cast<i128>(to.den()) * from.den();
  if (p <= 0) p += q;
  auto [rp, rq] = reduce(p, q);
  return TurnSpan(narrow(rp), narrow(rq));
}

double TurnSpan::radians() const { return turns_to_radians(num_, den_); }

std::strong_ordering operator<=>(const TurnSpan& a, const TurnSpan& b) {
  return compare_fractions(a.num_, a.den_, b.num_, b.den_);
}

TurnAngle operator+(TurnAngle a, TurnSpan s) {
  const i128 p = static_cast<i128>(a.num()) * s.den() +
                 static_cast<i128>(s.num()) * a.den();
  const i128 q = static_cast<i128>(a.den()) * s.den();
  auto [rp, rq] = reduce(p % q, q);
  return TurnAngle(narrow(rp), narrow(rq));
}

double normalize_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double wrap_sweep(double from_angle, double to_angle, int orientation) {
  double delta = std::fmod(to_angle - from_angle, kTwoPi);
  if (orientation >= 0) {
    if (delta <= 0.0) delta += kTwoPi;
  } else {
    if (delta >= 0.0) delta -= kTwoPi;
  }
  return delta;
}

Direction Direction::from_radians(double angle) {
  const double a = normalize_angle(angle);
  return Direction(std::cos(a), std::sin(a), a, std::nullopt);
}

Direction Direction::from_turn(TurnAngle t) {
  // Quarter turns get exact unit vectors.
  if (4 % t.den() == 0) {
    static constexpr double kCos[] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double kSin[] = {0.0, 1.0, 0.0, -1.0};
    const auto q = static_cast<std::size_t>(t.num() * (4 / t.den()));
    return Direction(kCos[q], kSin[q], t.radians(), t);
  }
  const double a = t.radians();
  return Direction(std::cos(a), std::sin(a), a, t);
}

Direction Direction::from_vector(Vec2 v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(ErrorKind::InvalidArgument, "direction of a zero or non-finite vector");
  return Direction(v.x / n, v.y / n, normalize_angle(std::atan2(v.y, v.x)), std::nullopt);
}

Sector Sector::from_radians(double start, double width) {
  if (!(width > 0.0))
    throw Error(ErrorKind::EmptyInteriorCone, "sector width must be positive");
  if (width > kTwoPi + numeric_policy().partition_tol)
    throw Error(ErrorKind::InvalidArgument, "sector width exceeds a full turn");
  return Sector(Direction::from_radians(start), std::min(width, kTwoPi), std::nullopt);
}

Sector Sector::from_turns(TurnAngle start, TurnSpan width) {
  return Sector(Direction::from_turn(start), width.radians(), width);
}

Direction Sector::end() const {
  if (exact_width_ && start_.exact()) return Direction::from_turn(*start_.exact() + *exact_width_);
  return Direction::from_radians(start_.angle() + width_);
}

bool Sector::contains(const Direction& d) const {
  if (exact_width_ && start_.exact() && d.exact()) {
    if (*d.exact() == *start_.exact()) return true;
    return TurnSpan::between(*start_.exact(), *d.exact()) <= *exact_width_;
  }
  const double tol = numeric_policy().angle_tol;
  const double delta = normalize_angle(d.angle() - start_.angle());
  return delta <= width_ + tol || delta >= kTwoPi - tol;
}

bool Sector::is_strictly_convex() const {
  if (exact_width_) return *exact_width_ < TurnSpan(1, 2);
  return width_ < kPi;
}

bool Sector::is_convex(double slack) const {
  if (exact_width_) return *exact_width_ <= TurnSpan(1, 2);
  return width_ <= kPi + slack;
}

Direction Sector::at_fraction(double t) const {
  if (t <= 0.0) return start_;
  if (t >= 1.0) return end();
  return Direction::from_radians(start_.angle() + t * width_);
}

}  // namespace pwl
