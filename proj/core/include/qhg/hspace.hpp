#pragma once

#include <random>
#include <vector>

#include "qhg/quaternion.hpp"

// The right quaternionic vector space H^{n,1} with the Hermitian form
//   <z,w> = w* J z = conj(w_1) z_{n+1} + sum_{i=2}^{n} conj(w_i) z_i
//           + conj(w_{n+1}) z_1,
// its negative/null cones, the Siegel-domain model of quaternionic hyperbolic
// n-space, and the symplectic isometry group.  Lifts scale on the right:
// <z a, w> = <z,w> a and <z, w b> = conj(b) <z,w>.

namespace qhg {

// A lift: an (n+1)-tuple of quaternions, indices 0..n for z_1..z_{n+1}.
struct HVector {
  std::vector<Quaternion> c;

  HVector() = default;
  explicit HVector(std::vector<Quaternion> coords) : c(std::move(coords)) {}
  explicit HVector(int n_plus_1) : c(static_cast<size_t>(n_plus_1)) {}

  int dim() const { return static_cast<int>(c.size()); }
  int n() const { return dim() - 1; }
  Quaternion& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const Quaternion& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

HVector operator+(const HVector& a, const HVector& b);
HVector operator-(const HVector& a, const HVector& b);
// Right scaling z * lambda.
HVector operator*(const HVector& z, const Quaternion& lambda);
double max_abs(const HVector& z);

// A point of the closed space: finite coordinates in H^n or infinity.
struct ClosurePoint {
  int n_ = 0;
  bool inf_ = false;
  std::vector<Quaternion> coords_;  // size n when finite, empty otherwise

  static ClosurePoint finite(std::vector<Quaternion> z);
  static ClosurePoint infinity(int n);

  bool is_infinity() const { return inf_; }
  int n() const { return n_; }
  const std::vector<Quaternion>& coords() const { return coords_; }
};

bool points_equal(const ClosurePoint& p, const ClosurePoint& q,
                  double tol = kDefaultEps);

enum class VectorClass { Negative, Null, Positive };
enum class PointLocation { Interior, Boundary, Outside };

// <z,w> with z in the first slot.
Quaternion inner(const HVector& z, const HVector& w);

// Sign of the real number <z,z>, with a dead band of eps * sum |z_i|^2.
VectorClass classify(const HVector& z, double eps = kDefaultEps);

// Finite z -> (z; 1); infinity -> (-1, 0, ..., 0).
HVector standard_lift(const ClosurePoint& p);

// Right projection to the closure.  Defined on V_- u V_0; vectors with
// z_{n+1} ~ 0 are accepted only in the pattern (z_1, 0, ..., 0) -> infinity.
ClosurePoint project(const HVector& z, double eps = kDefaultEps);

// Boundary/interior decision with dead band eps * (1 + sum |z_i|^2).
PointLocation locate(const ClosurePoint& p, double eps = kDefaultEps);

// Bergman metric: cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>).
double bergman_distance(const ClosurePoint& z, const ClosurePoint& w,
                        double eps = kDefaultEps);

// (n+1) x (n+1) quaternion matrix acting on lifts from the left.
struct Isometry {
  int n = 0;
  std::vector<Quaternion> m;  // row-major, (n+1)^2 entries

  Isometry() = default;
  explicit Isometry(int n_) : n(n_), m(static_cast<size_t>((n_ + 1) * (n_ + 1))) {}

  Quaternion& at(int r, int c) { return m[static_cast<size_t>(r * (n + 1) + c)]; }
  const Quaternion& at(int r, int c) const {
    return m[static_cast<size_t>(r * (n + 1) + c)];
  }

  static Isometry identity(int n);
  // The form matrix itself; swaps o and infinity.
  static Isometry form_J(int n);
  // diag(kappa, I, 1/kappa) for real kappa > 0.
  static Isometry dilation(int n, double kappa);
  // diag(mu, A, conj(mu)^{-1}); A must satisfy A*A = I.
  static Isometry rotation(const Quaternion& mu,
                           const std::vector<Quaternion>& a_block, int n);
  // Upper-triangular translation fixing infinity; tau must satisfy
  // 2 Re(tau) + |v|^2 = 0.
  static Isometry translation(const std::vector<Quaternion>& v,
                              const Quaternion& tau);
};

Isometry operator*(const Isometry& a, const Isometry& b);
Isometry adjoint(const Isometry& g);
// Inverse of a symplectic matrix: J g* J.
Isometry sp_inverse(const Isometry& g);

// Entrywise |g* J g - J| <= tol.
bool is_isometry(const Isometry& g, double tol = kDefaultEps);

HVector apply(const Isometry& g, const HVector& z);
ClosurePoint apply(const Isometry& g, const ClosurePoint& p);

// Symplectic map carrying boundary point u to o and boundary point v to
// infinity.
Isometry carry_to_o_infty(const ClosurePoint& u, const ClosurePoint& v,
                          double eps = kDefaultEps);

ClosurePoint random_boundary_point(int n, std::mt19937_64& rng);
ClosurePoint random_interior_point(int n, std::mt19937_64& rng);
Isometry random_isometry(int n, std::mt19937_64& rng);

// Pairwise distinct, numerically well-separated boundary tuples.
std::vector<ClosurePoint> random_boundary_tuple(int n, int count,
                                                std::mt19937_64& rng);

namespace detail {
double uniform(std::mt19937_64& rng, double lo, double hi);
Quaternion random_unit_quaternion(std::mt19937_64& rng);
// Columns of a random matrix in Sp(m) (A*A = I), as an m x m row-major block.
std::vector<Quaternion> random_sp_block(int m, std::mt19937_64& rng);
}  // namespace detail

}  // namespace qhg
