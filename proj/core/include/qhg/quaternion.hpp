#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhg {

inline constexpr double kDefaultEps = 1e-9;

// Dead-band for the nu/sigma case split: the (j,k)-part of a counts as zero
// when a2^2+a3^2 <= eps^2 * max(1, |a|^2).  The rotation formulas below are
// evaluated cancellation-free, so the band only has to absorb genuine noise.
inline constexpr double kBranchEps = 1e-12;

class geometry_error : public std::runtime_error {
 public:
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

// a0 + a1 i + a2 j + a3 k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : a0(r) {}
  constexpr Quaternion(double r, double i, double j, double k)
      : a0(r), a1(i), a2(j), a3(k) {}

  static constexpr Quaternion complex(double re, double im) {
    return {re, im, 0.0, 0.0};
  }
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
}

constexpr Quaternion operator-(const Quaternion& a) {
  return {-a.a0, -a.a1, -a.a2, -a.a3};
}

// Hamilton product; non-commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
}

constexpr Quaternion conj(const Quaternion& a) {
  return {a.a0, -a.a1, -a.a2, -a.a3};
}

constexpr double re(const Quaternion& a) { return a.a0; }

constexpr Quaternion im(const Quaternion& a) { return {0.0, a.a1, a.a2, a.a3}; }

constexpr double norm_sq(const Quaternion& a) {
  return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
}

inline double abs(const Quaternion& a) { return std::sqrt(norm_sq(a)); }

inline double im_abs(const Quaternion& a) {
  return std::sqrt(a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
}

inline Quaternion inv(const Quaternion& a) {
  const double n2 = norm_sq(a);
  if (!(n2 > 1e-300)) throw geometry_error("quaternion inverse of (near) zero");
  return {a.a0 / n2, -a.a1 / n2, -a.a2 / n2, -a.a3 / n2};
}

inline Quaternion operator/(const Quaternion& a, const Quaternion& b) {
  return a * inv(b);
}

// e^{i theta} as a quaternion with zero j,k parts.
inline Quaternion unit_complex(double theta) {
  return Quaternion::complex(std::cos(theta), std::sin(theta));
}

constexpr bool has_jk_part(const Quaternion& a, double tol) {
  return a.a2 * a.a2 + a.a3 * a.a3 > tol * tol;
}

// a ~ b (conjugate by some nonzero quaternion) iff Re and modulus agree.
inline bool similar(const Quaternion& a, const Quaternion& b,
                    double tol = kDefaultEps) {
  const double scale = std::max({1.0, abs(a), abs(b)});
  return std::abs(re(a) - re(b)) <= tol * scale &&
         std::abs(abs(a) - abs(b)) <= tol * scale;
}

// Unit rotation with nu(a)^{-1} a nu(a) = a0 + sqrt(a1^2+a2^2+a3^2) i.
// Case split: (j,k)-part nonzero / a1 < 0 / otherwise.  The first case is
// evaluated with (im+a1) rewritten as p/(im-a1) for a1 < 0, which avoids the
// cancellation in the denominator.
inline Quaternion nu(const Quaternion& a, double eps = kBranchEps) {
  const double p = a.a2 * a.a2 + a.a3 * a.a3;
  const double scale = std::max(1.0, norm_sq(a));
  if (p > eps * eps * scale) {
    const double imn = std::sqrt(a.a1 * a.a1 + p);
    const double first = (a.a1 >= 0.0) ? imn + a.a1 : p / (imn - a.a1);
    const double denom = std::sqrt(2.0 * imn * first);
    return {first / denom, 0.0, -a.a3 / denom, a.a2 / denom};
  }
  if (a.a1 < 0.0) return {0.0, 0.0, 1.0, 0.0};
  return {1.0, 0.0, 0.0, 0.0};
}

namespace detail {
// Principal square root of the unit complex number (c / |c|).
inline Quaternion sqrt_unit_complex(double cr, double ci) {
  const double theta = std::atan2(ci, cr);  // (-pi, pi]
  return unit_complex(0.5 * theta);
}
}  // namespace detail

// Complex unit with sigma^{-1} a sigma = a0 + a1 i + sqrt(a2^2+a3^2) j when
// a has a (j,k)-part; falls back to b, then to 1.
inline Quaternion sigma(const Quaternion& a, const Quaternion& b,
                        double eps = kBranchEps) {
  {
    const double p = a.a2 * a.a2 + a.a3 * a.a3;
    if (p > eps * eps * std::max(1.0, norm_sq(a)))
      return detail::sqrt_unit_complex(a.a2, a.a3);
  }
  {
    const double p = b.a2 * b.a2 + b.a3 * b.a3;
    if (p > eps * eps * std::max(1.0, norm_sq(b)))
      return detail::sqrt_unit_complex(b.a2, b.a3);
  }
  return {1.0, 0.0, 0.0, 0.0};
}

struct UnitImaginary {
  double i = 1.0;
  double j = 0.0;
  double k = 0.0;
};

struct UnitPolar {
  double theta = 0.0;  // in [0, pi]
  UnitImaginary axis;
};

// Writes a unit quaternion as cos(theta) + I sin(theta).  At theta in {0, pi}
// the axis is conventionally the i-axis.
inline UnitPolar unit_polar(const Quaternion& q, double eps = kDefaultEps) {
  const double n = abs(q);
  if (std::abs(n - 1.0) > std::max(eps, 1e-12))
    throw geometry_error("unit_polar: input is not a unit quaternion");
  const double s = im_abs(q);
  UnitPolar out;
  out.theta = std::atan2(s, q.a0);
  if (s <= eps) {
    out.axis = UnitImaginary{};
  } else {
    out.axis = UnitImaginary{q.a1 / s, q.a2 / s, q.a3 / s};
  }
  return out;
}

inline Quaternion from_polar(double theta, const UnitImaginary& axis) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, s * axis.i, s * axis.j, s * axis.k};
}

}  // namespace qhg
