#pragma once

#include <array>

#include "sg/cpair.hpp"

namespace sg {

// Quaternion t + x*i + y*j + z*k with components in a real base field
// (rationals or a real quadratic extension).  Multiplication follows the
// Hamilton relations i^2 = j^2 = k^2 = ijk = -1.
class Quat {
 public:
  Quat() = default;
  Quat(long n) : t_(n) {}  // NOLINT
  Quat(Quad t, Quad x, Quad y, Quad z)
      : t_(std::move(t)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quat i() { return Quat(0, 1, 0, 0); }
  static Quat j() { return Quat(0, 0, 1, 0); }
  static Quat k() { return Quat(0, 0, 0, 1); }

  const Quad& t() const { return t_; }
  const Quad& x() const { return x_; }
  const Quad& y() const { return y_; }
  const Quad& z() const { return z_; }
  bool is_zero() const {
    return t_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero();
  }

  Quat conj() const { return Quat(t_, -x_, -y_, -z_); }
  Quad norm_sq() const { return t_ * t_ + x_ * x_ + y_ * y_ + z_ * z_; }

  Quat inverse() const {
    Quad n = norm_sq();
    if (n.is_zero()) throw error(errc::domain, "inverse of zero quaternion");
    Quad ni = n.inverse();
    return Quat(t_ * ni, -x_ * ni, -y_ * ni, -z_ * ni);
  }

  Quat operator-() const { return Quat(-t_, -x_, -y_, -z_); }
  Quat& operator+=(const Quat& o) {
    t_ += o.t_;
    x_ += o.x_;
    y_ += o.y_;
    z_ += o.z_;
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    t_ -= o.t_;
    x_ -= o.x_;
    y_ -= o.y_;
    z_ -= o.z_;
    return *this;
  }
  Quat& operator*=(const Quat& o) { return *this = *this * o; }
  Quat& operator/=(const Quat& o) { return *this = *this * o.inverse(); }

  friend Quat operator*(const Quat& p, const Quat& q) {
    return Quat(p.t_ * q.t_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_,
                p.t_ * q.x_ + p.x_ * q.t_ + p.y_ * q.z_ - p.z_ * q.y_,
                p.t_ * q.y_ - p.x_ * q.z_ + p.y_ * q.t_ + p.z_ * q.x_,
                p.t_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.t_);
  }
  friend Quat operator+(Quat p, const Quat& q) { return p += q; }
  friend Quat operator-(Quat p, const Quat& q) { return p -= q; }
  friend Quat operator/(Quat p, const Quat& q) { return p /= q; }
  friend bool operator==(const Quat& p, const Quat& q) {
    return p.t_ == q.t_ && p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
  }
  friend bool operator!=(const Quat& p, const Quat& q) { return !(p == q); }

  std::string str() const;

 private:
  Quad t_, x_, y_, z_;
};

// 2x2 complex image of a quaternion, row-major.  Writing q = z + w*j with
// z = t + x*i and w = y + z*i, left multiplication by q on H as a right
// C-vector space with basis {1, j} has matrix
//     [ z   -w ]
//     [ w*   z*]
// which makes the map a ring homomorphism into the 2x2 complex matrices.
inline std::array<CPair, 4> complexify(const Quat& q) {
  CPair z(q.t(), q.x());
  CPair w(q.y(), q.z());
  return {z, -w, w.conj(), z.conj()};
}

}  // namespace sg
