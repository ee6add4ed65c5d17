#include <cstdlib>

#include "sg/quat.hpp"

namespace sg {

bool Quad::is_valid_discriminant(long long d) {
  if (d == 0 || d == 1) return false;
  long long m = d < 0 ? -d : d;
  if (m > 1000000000000LL)
    throw error(errc::input, "discriminant magnitude too large");
  for (long long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    while (m % p == 0) m /= p;
  }
  return true;
}

Quad::Quad(Rat a, Rat b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (!is_valid_discriminant(d_))
    throw error(errc::input,
                "discriminant must be squarefree and different from 0 and 1, got " +
                    std::to_string(d));
}

long long Quad::merge_tag(const Quad& x, const Quad& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  throw error(errc::domain, "mixed quadratic discriminants " + std::to_string(x.d_) +
                                " and " + std::to_string(y.d_));
}

Quad Quad::operator-() const {
  Quad r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

Quad& Quad::operator+=(const Quad& o) {
  d_ = merge_tag(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  long long d = merge_tag(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = b_.is_zero() ? 0 : d;
  return *this;
}

Quad Quad::galois() const {
  Quad r;
  r.a_ = a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

Quad Quad::norm_sq() const {
  if (d_ < 0) return Quad(a_ * a_ - b_ * b_ * Rat(d_));
  return *this * *this;
}

Quad Quad::inverse() const {
  if (is_zero()) throw error(errc::domain, "inverse of zero quadratic value");
  // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d); the denominator
  // vanishes only at zero since sqrt(d) is irrational.
  Rat n = a_ * a_ - b_ * b_ * Rat(d_);
  check_internal(!n.is_zero(), "quadratic field norm vanished on nonzero element");
  Rat ni = n.inverse();
  return Quad(a_ * ni, -b_ * ni, d_);
}

int Quad::sign() const {
  if (d_ < 0)
    throw error(errc::domain, "sign of an imaginary quadratic value (d = " +
                                  std::to_string(d_) + ") is undefined");
  if (b_.is_zero()) return a_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) pull in opposite directions: compare a^2 against b^2 d.
  Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

int cmp(const Quad& x, const Quad& y) { return (x - y).sign(); }

}  // namespace sg
