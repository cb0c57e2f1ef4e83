#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sot {

/// A value in R ∪ {-inf}.
///
/// Stored as a double whose only admissible non-finite value is -infinity.
/// Anything that would produce +inf or NaN is a contract violation and
/// throws std::domain_error.
class ExtReal {
 public:
  constexpr ExtReal() noexcept : v_(0.0) {}

  /// Accepts finite doubles and -infinity.
  explicit ExtReal(double v) : v_(v) { check(v_); }

  static constexpr ExtReal neg_inf() noexcept {
    return ExtReal(-std::numeric_limits<double>::infinity(), Unchecked{});
  }
  static ExtReal finite(double v) {
    if (!std::isfinite(v)) throw std::domain_error("ExtReal::finite: value is not finite");
    return ExtReal(v, Unchecked{});
  }

  bool is_finite() const noexcept { return v_ != -std::numeric_limits<double>::infinity(); }
  bool is_neg_inf() const noexcept { return !is_finite(); }

  /// Finite payload; throws if -inf.
  double value() const {
    if (!is_finite()) throw std::domain_error("ExtReal::value: -inf has no finite value");
    return v_;
  }
  /// Raw double, -inf included.
  constexpr double raw() const noexcept { return v_; }

  // -inf + finite and -inf + -inf are both -inf; only overflow can reach +inf.
  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }
  /// Multiplication by a nonnegative real scale; 0 * -inf is a contract violation.
  friend ExtReal scale(double s, ExtReal a) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::domain_error("ExtReal scale must be finite and >= 0");
    if (a.is_neg_inf() && s == 0.0) throw std::domain_error("ExtReal: 0 * -inf is undefined");
    return ExtReal(s * a.v_, Unchecked{});
  }

  friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(ExtReal a, ExtReal b) noexcept {
    // NaN is excluded by construction, so the order is total.
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }
  friend ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

  friend std::ostream& operator<<(std::ostream& os, ExtReal a) {
    if (a.is_neg_inf()) return os << "-inf";
    return os << a.v_;
  }

 private:
  struct Unchecked {};
  constexpr ExtReal(double v, Unchecked) noexcept : v_(v) {}

  static void check(double v) {
    if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not representable");
    if (v == std::numeric_limits<double>::infinity())
      throw std::domain_error("ExtReal: +inf is not representable");
  }

  double v_;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace sot
