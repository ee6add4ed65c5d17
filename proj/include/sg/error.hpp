#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Error taxonomy shared by the whole toolkit.  `input` covers bad user data
// (unparseable literals, malformed files, precondition violations on values
// the user supplied), `domain` covers mathematically invalid requests
// (division by zero, mixed discriminants, noncommutative determinant),
// `search` covers expected negative outcomes of searches (no third
// hyperplane, no finite simplex, retry exhaustion), and `internal` flags
// invariant breaches that indicate a bug.
enum class errc {
  input,
  domain,
  search,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

struct parse_error : error {
  parse_error(int line, int column, const std::string& what)
      : error(errc::input,
              "parse error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

[[noreturn]] inline void fail_internal(const std::string& what) {
  throw error(errc::internal, "internal invariant breach: " + what);
}

inline void check_internal(bool cond, const char* what) {
  if (!cond) fail_internal(what);
}

}  // namespace sg
