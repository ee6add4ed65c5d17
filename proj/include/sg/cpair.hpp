#pragma once

#include "sg/quad.hpp"

namespace sg {

// Complex number re + im*i with components in a real base field (Q or a
// real quadratic Q(sqrt(d))).  This is the entry type of complexified
// quaternion matrices; it is not one of the projective scalar domains.
class CPair {
 public:
  CPair() = default;
  CPair(Quad re, Quad im) : re_(std::move(re)), im_(std::move(im)) {}
  CPair(long n) : re_(n), im_(0) {}  // NOLINT

  const Quad& re() const { return re_; }
  const Quad& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  CPair conj() const { return CPair(re_, -im_); }
  Quad norm_sq() const { return re_ * re_ + im_ * im_; }

  CPair inverse() const {
    Quad n = norm_sq();
    if (n.is_zero()) throw error(errc::domain, "inverse of zero complex value");
    Quad ni = n.inverse();
    return CPair(re_ * ni, -im_ * ni);
  }

  CPair operator-() const { return CPair(-re_, -im_); }
  CPair& operator+=(const CPair& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CPair& operator-=(const CPair& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  CPair& operator*=(const CPair& o) {
    Quad r = re_ * o.re_ - im_ * o.im_;
    Quad i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  CPair& operator/=(const CPair& o) { return *this *= o.inverse(); }

  friend CPair operator+(CPair x, const CPair& y) { return x += y; }
  friend CPair operator-(CPair x, const CPair& y) { return x -= y; }
  friend CPair operator*(CPair x, const CPair& y) { return x *= y; }
  friend CPair operator/(CPair x, const CPair& y) { return x /= y; }
  friend bool operator==(const CPair& x, const CPair& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const CPair& x, const CPair& y) { return !(x == y); }

  std::string str() const;

 private:
  Quad re_, im_;
};

}  // namespace sg
