#ifndef ORD_ERRORS_HPP
#define ORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ord {

// Base class for everything this library throws on domain violations.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A raw tree failed the normal-form condition. `path()` identifies the
// offending node as a string of '0' (into exponent) / '1' (into rest)
// steps from the root; "" means the root itself.
struct not_normal_error : domain_error {
  explicit not_normal_error(std::string path)
      : domain_error("tree is not in Cantor normal form at path \"" + path + "\""),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct underflow_error : domain_error {
  underflow_error() : domain_error("ordinal subtraction underflow: subtrahend exceeds minuend") {}
};

struct division_by_zero_error : domain_error {
  division_by_zero_error() : domain_error("ordinal division by zero") {}
};

struct bound_too_large_error : domain_error {
  explicit bound_too_large_error(std::size_t requested, std::size_t cap)
      : domain_error("enumeration bound " + std::to_string(requested) +
                     " exceeds configured cap " + std::to_string(cap)) {}
};

struct budget_exceeded_error : domain_error {
  explicit budget_exceeded_error(unsigned long long budget)
      : domain_error("step budget of " + std::to_string(budget) + " exceeded") {}
};

struct not_finite_error : domain_error {
  not_finite_error() : domain_error("tree is not finite") {}
};

struct not_a_limit_error : domain_error {
  not_a_limit_error() : domain_error("ordinal is not a limit") {}
};

struct invalid_order_error : domain_error {
  invalid_order_error() : domain_error("relation is not a valid finite ordinal") {}
};

// Surface-syntax errors carry the byte offset of the offending token.
struct syntax_error : std::runtime_error {
  syntax_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct unsupported_base_error : syntax_error {
  explicit unsupported_base_error(std::size_t position)
      : syntax_error("only w may be used as the base of ^", position) {}
};

}  // namespace ord

#endif  // ORD_ERRORS_HPP
