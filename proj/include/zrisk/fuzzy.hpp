#ifndef ZRISK_FUZZY_HPP_
#define ZRISK_FUZZY_HPP_

#include <cmath>
#include <sstream>
#include <string>

#include "zrisk/errors.hpp"

namespace zrisk {

/// Triangular fuzzy number (a, b, c) with a <= b <= c. Immutable value type;
/// every operation below returns a fresh TFN that keeps the ordering
/// invariant, so invalid triples cannot circulate.
class TFN {
public:
  TFN(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
      throw validation_error(describe("non-finite component", a, b, c));
    }
    if (!(a <= b && b <= c)) {
      throw validation_error(describe("components violate a <= b <= c", a, b, c));
    }
  }

  /// Degenerate TFN (v, v, v) representing a crisp value.
  [[nodiscard]] static TFN crisp(double v) { return TFN(v, v, v); }

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] double c() const { return c_; }

  friend bool operator==(const TFN& x, const TFN& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

private:
  static std::string describe(const char* what, double a, double b, double c) {
    std::ostringstream out;
    out << "invalid TFN(" << a << ", " << b << ", " << c << "): " << what;
    return out.str();
  }

  double a_;
  double b_;
  double c_;
};

[[nodiscard]] inline TFN operator+(const TFN& x, const TFN& y) {
  return TFN(x.a() + y.a(), x.b() + y.b(), x.c() + y.c());
}

/// Componentwise product. Both operands must be nonnegative; every scale in
/// this library is, and the restriction keeps the ordering invariant trivially
/// true.
[[nodiscard]] inline TFN operator*(const TFN& x, const TFN& y) {
  if (x.a() < 0.0 || y.a() < 0.0) {
    throw validation_error("TFN multiplication requires nonnegative operands");
  }
  return TFN(x.a() * y.a(), x.b() * y.b(), x.c() * y.c());
}

[[nodiscard]] inline TFN scale(const TFN& x, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw validation_error("TFN scale factor must be a nonnegative finite real");
  }
  return TFN(k * x.a(), k * x.b(), k * x.c());
}

/// Interval-style division with reversed components: (xa/yc, xb/yb, xc/ya).
/// Requires y strictly positive; yields a valid TFN for nonnegative x.
[[nodiscard]] inline TFN divide(const TFN& x, const TFN& y) {
  if (!(y.a() > 0.0)) {
    std::ostringstream out;
    out << "TFN division requires a strictly positive divisor, got lower bound "
        << y.a();
    throw validation_error(out.str());
  }
  return TFN(x.a() / y.c(), x.b() / y.b(), x.c() / y.a());
}

/// Componentwise power for exponents in [0, 1]; monotone on nonnegative TFNs.
[[nodiscard]] inline TFN pow(const TFN& x, double w) {
  if (x.a() < 0.0) {
    throw validation_error("TFN power requires a nonnegative base");
  }
  if (!(w >= 0.0 && w <= 1.0)) {
    std::ostringstream out;
    out << "TFN exponent must lie in [0, 1], got " << w;
    throw validation_error(out.str());
  }
  return TFN(std::pow(x.a(), w), std::pow(x.b(), w), std::pow(x.c(), w));
}

/// Center-of-area defuzzification. For a triangular membership function the
/// area centroid integral collapses to (a + b + c) / 3.
[[nodiscard]] inline double centroid(const TFN& x) {
  return (x.a() + x.b() + x.c()) / 3.0;
}

/// Z-number: a fuzzy restriction paired with the fuzzy reliability of that
/// restriction. Reliability lives on [0, 1].
class ZNumber {
public:
  ZNumber(TFN restriction, TFN reliability)
      : restriction_(restriction), reliability_(reliability) {
    if (reliability.a() < 0.0 || reliability.c() > 1.0) {
      std::ostringstream out;
      out << "Z-number reliability must lie within [0, 1], got ("
          << reliability.a() << ", " << reliability.b() << ", "
          << reliability.c() << ")";
      throw validation_error(out.str());
    }
  }

  [[nodiscard]] const TFN& restriction() const { return restriction_; }
  [[nodiscard]] const TFN& reliability() const { return reliability_; }

private:
  TFN restriction_;
  TFN reliability_;
};

/// Collapse a Z-number to a plain TFN: defuzzify the reliability to a crisp
/// alpha and weight the restriction by sqrt(alpha).
[[nodiscard]] inline TFN z_to_tfn(const ZNumber& z) {
  const double alpha = centroid(z.reliability());
  return scale(z.restriction(), std::sqrt(alpha));
}

}  // namespace zrisk

#endif  // ZRISK_FUZZY_HPP_
