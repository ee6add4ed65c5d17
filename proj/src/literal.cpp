#include "sg/literal.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace sg {
namespace {

std::string strip(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

[[noreturn]] void bad(std::string_view s, const std::string& why) {
  throw error(errc::input, "bad scalar literal '" + std::string(s) + "': " + why);
}

bool is_int(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Try-parse of a stripped rational; returns false without throwing.
bool try_rat(std::string_view s, Rat& out) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) return false;
    out = Rat(mpq_class(mpz_class(std::string(s)), 1));
    return true;
  }
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return false;
  mpz_class d{std::string(den)};
  if (d == 0) return false;
  out = Rat(mpq_class(mpz_class(std::string(num)), d));
  return true;
}

// Positions of top-level '+'/'-' signs usable as term separators (i.e. not
// the leading sign of the string and not inside parentheses).
std::vector<size_t> sign_positions(std::string_view s) {
  std::vector<size_t> out;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) out.push_back(i);
  }
  return out;
}

// Stripped-form quadratic: RAT, or RAT(+|-)RAT*rt(INT).
bool try_quad(std::string_view s, Quad& out) {
  Rat plain;
  if (try_rat(s, plain)) {
    out = Quad(plain);
    return true;
  }
  auto signs = sign_positions(s);
  for (size_t pos : signs) {
    std::string_view left = s.substr(0, pos);
    std::string_view right = s.substr(pos + 1);
    Rat a, b;
    if (!try_rat(left, a)) continue;
    // right must be RAT*rt(INT)
    auto star = right.find("*rt(");
    if (star == std::string_view::npos || right.back() != ')') continue;
    if (!try_rat(right.substr(0, star), b)) continue;
    std::string_view ds = right.substr(star + 4, right.size() - star - 5);
    if (!is_int(ds)) continue;
    long long d = 0;
    try {
      d = std::stoll(std::string(ds));
    } catch (...) {
      continue;
    }
    if (s[pos] == '-') b = -b;
    out = Quad(std::move(a), std::move(b), d);
    return true;
  }
  return false;
}

}  // namespace

Rat parse_rat(std::string_view sv) {
  std::string s = strip(sv);
  Rat r;
  if (!try_rat(s, r)) bad(sv, "expected rational -?INT(/INT)?");
  return r;
}

Quad parse_quad(std::string_view sv) {
  std::string s = strip(sv);
  Quad q;
  if (!try_quad(s, q)) bad(sv, "expected rational or quadratic RAT(+|-)RAT*rt(INT)");
  return q;
}

CPair parse_cpair(std::string_view sv) {
  std::string s = strip(sv);
  Quad re;
  if (try_quad(s, re)) return CPair(std::move(re), Quad(0));
  if (s.size() < 2 || s.substr(s.size() - 2) != "*i")
    bad(sv, "expected QUAD(+|-)QUAD*i");
  std::string_view body(s);
  body.remove_suffix(2);
  auto signs = sign_positions(body);
  // The split sign is the one separating the re and im quadratics; scan all
  // candidates and require both sides to parse.
  for (auto it = signs.rbegin(); it != signs.rend(); ++it) {
    size_t pos = *it;
    Quad r, i;
    if (!try_quad(body.substr(0, pos), r)) continue;
    if (!try_quad(body.substr(pos + 1), i)) continue;
    if (body[pos] == '-') i = -i;
    return CPair(std::move(r), std::move(i));
  }
  bad(sv, "expected QUAD(+|-)QUAD*i");
}

Quat parse_quat(std::string_view sv) {
  std::string s = strip(sv);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    bad(sv, "expected (F; F; F; F)");
  std::string_view body(s);
  body.remove_prefix(1);
  body.remove_suffix(1);
  std::vector<std::string_view> parts;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ';' && depth == 0) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(body.substr(start));
  if (parts.size() != 4) bad(sv, "quaternion needs exactly 4 components");
  Quad c[4];
  for (int i = 0; i < 4; ++i) {
    if (!try_quad(parts[i], c[i])) bad(sv, "bad quaternion component");
    if (c[i].d() < 0)
      bad(sv, "quaternion components must lie in a real base field");
  }
  return Quat(c[0], c[1], c[2], c[3]);
}

std::string print_rat(const Rat& r) { return r.str(); }

std::string print_quad(const Quad& q) {
  if (q.is_rational()) return q.a().str();
  Rat b = q.b();
  std::string sign = b.sign() < 0 ? "-" : "+";
  return q.a().str() + sign + b.abs().str() + "*rt(" + std::to_string(q.d()) + ")";
}

std::string print_cpair(const CPair& c) {
  const Quad& im = c.im();
  // im lives in a real base field, so its sign is decidable.
  bool neg = !im.is_zero() && im.sign() < 0;
  return print_quad(c.re()) + (neg ? "-" : "+") + print_quad(neg ? -im : im) + "*i";
}

std::string print_quat(const Quat& q) {
  return "(" + print_quad(q.t()) + "; " + print_quad(q.x()) + "; " + print_quad(q.y()) +
         "; " + print_quad(q.z()) + ")";
}

std::string Quad::str() const { return print_quad(*this); }
std::string CPair::str() const { return print_cpair(*this); }
std::string Quat::str() const { return print_quat(*this); }

}  // namespace sg
