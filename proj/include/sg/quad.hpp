#pragma once

#include <cstdint>
#include <string>

#include "sg/rat.hpp"

namespace sg {

// Element a + b*sqrt(d) of a quadratic extension Q(sqrt(d)), d a squarefree
// integer other than 0 and 1.  Representation is normalized: whenever b = 0
// the tag d is cleared to 0, so plain rationals embed in any extension and
// compare equal across contexts.  Arithmetic between two genuinely
// irrational values with different tags is rejected; the toolkit works in a
// single quadratic extension per computation.
//
// d > 0 gives a real field with an exact total order (see sign()); d < 0
// gives an imaginary quadratic field whose conjugation negates b.
class Quad {
 public:
  Quad() : a_(0), b_(0), d_(0) {}
  Quad(Rat r) : a_(std::move(r)), b_(0), d_(0) {}  // NOLINT: rational embedding
  Quad(long n) : a_(n), b_(0), d_(0) {}            // NOLINT
  Quad(Rat a, Rat b, long long d);

  static bool is_valid_discriminant(long long d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Sign of the real number a + b*sqrt(d).  Exact case analysis; requires a
  // real value (d >= 0 after normalization).
  int sign() const;

  // Conjugation over the reals: identity on real values, negates b when
  // d < 0.  This is the `conj` every scalar domain exposes.
  Quad conj() const { return d_ < 0 ? galois() : *this; }

  // The nontrivial field automorphism a + b*sqrt(d) -> a - b*sqrt(d),
  // regardless of the sign of d.  Used by inverse().
  Quad galois() const;

  // x * conj(x): for d < 0 a non-negative rational, for d >= 0 the square.
  Quad norm_sq() const;

  Quad inverse() const;

  Quad operator-() const;
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o) { return *this += -o; }
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o) { return *this *= o.inverse(); }

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }
  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  std::string str() const;

 private:
  // Returns the common discriminant tag, throwing on a genuine mix.
  static long long merge_tag(const Quad& x, const Quad& y);

  Rat a_, b_;
  long long d_;
};

// Exact comparison of real quadratic values, via the sign of the difference.
int cmp(const Quad& x, const Quad& y);

inline int quad_sign(const Quad& q) { return q.sign(); }

}  // namespace sg
