#pragma once

#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "pwl/linalg.hpp"

namespace pwl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduced fraction of a full turn in [0, 1).
class TurnAngle {
 public:
  TurnAngle() = default;
  // Any integer p and positive q; the value is reduced modulo one turn.
  TurnAngle(std::int64_t num, std::int64_t den);
  // "p/q" with 0 <= p < q, or "0"; throws Error{ParseError}.
  static TurnAngle parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;
  std::string to_string() const;

  friend bool operator==(const TurnAngle&, const TurnAngle&) = default;
  friend std::strong_ordering operator<=>(const TurnAngle& a, const TurnAngle& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Counterclockwise extent of a sector, as a reduced fraction in (0, 1].
class TurnSpan {
 public:
  TurnSpan(std::int64_t num, std::int64_t den);
  static TurnSpan full() { return TurnSpan(1, 1); }
  // Counterclockwise distance from `from` to `to`; a full turn when equal.
  static TurnSpan between(TurnAngle from, TurnAngle to);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;
  bool is_full() const { return num_ == den_; }

  friend bool operator==(const TurnSpan&, const TurnSpan&) = default;
  friend std::strong_ordering operator<=>(const TurnSpan& a, const TurnSpan& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

TurnAngle operator+(TurnAngle a, TurnSpan s);

// Normalizes to [0, 2pi).
double normalize_angle(double radians);

// Signed counterclockwise (+1) or clockwise (-1) turn from `from_angle` to
// `to_angle`: in (0, 2pi] for +1 and [-2pi, 0) for -1. Equal angles give a
// full turn.
double wrap_sweep(double from_angle, double to_angle, int orientation);

// Unit vector plus its polar angle in [0, 2pi).
class Direction {
 public:
  static Direction from_radians(double angle);
  static Direction from_turn(TurnAngle t);
  // Throws Error{InvalidArgument} on the zero vector.
  static Direction from_vector(Vec2 v);

  double x() const { return x_; }
  double y() const { return y_; }
  double angle() const { return angle_; }
  Vec2 vec() const { return {x_, y_}; }
  const std::optional<TurnAngle>& exact() const { return exact_; }

 private:
  Direction(double x, double y, double angle, std::optional<TurnAngle> exact)
      : x_(x), y_(y), angle_(angle), exact_(exact) {}
  double x_, y_, angle_;
  std::optional<TurnAngle> exact_;
};

// Closed planar cone with vertex 0: the directions from `start`
// counterclockwise through `width` radians, width in (0, 2pi].
class Sector {
 public:
  // Throws Error{EmptyInteriorCone} for width <= 0 and
  // Error{InvalidArgument} for width > 2pi.
  static Sector from_radians(double start, double width);
  static Sector from_turns(TurnAngle start, TurnSpan width);
  static Sector full_circle() { return from_turns(TurnAngle(), TurnSpan::full()); }

  const Direction& start() const { return start_; }
  Direction end() const;
  double width() const { return width_; }
  const std::optional<TurnSpan>& exact_width() const { return exact_width_; }
  bool is_exact() const { return exact_width_.has_value(); }

  bool contains(const Direction& d) const;
  // width < pi
  bool is_strictly_convex() const;
  // width <= pi + slack (half-planes are convex)
  bool is_convex(double slack) const;
  // Direction at fraction t in [0, 1] of the arc.
  Direction at_fraction(double t) const;

 private:
  Sector(Direction start, double width, std::optional<TurnSpan> exact_width)
      : start_(start), width_(width), exact_width_(exact_width) {}
  Direction start_;
  double width_;
  std::optional<TurnSpan> exact_width_;
};

inline bool sector_contains(const Sector& s, const Direction& d) { return s.contains(d); }
inline bool sector_is_strictly_convex(const Sector& s) { return s.is_strictly_convex(); }

}  // namespace pwl
