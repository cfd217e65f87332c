#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "powfactor/engine.hpp"

namespace powfactor::cli {

struct RawInteger {
  mpz_class n;
};

struct RawWithResidue {
  mpz_class n;
  ResidueInfo info;
};

struct InputExpr {
  std::string raw;
  std::variant<SpecialForm, RawInteger, RawWithResidue> parsed;

  mpz_class value() const;
};

/// Malformed input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input violating a shape constraint (e.g. non-coprime bases).
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest exponent the parser accepts.
inline constexpr std::uint64_t kMaxExponent = 1u << 16;

/// Accepts `<a>^<n>+<b>^<n>`, `<a>^<n>-<b>^<n>`, the shorthand `<a>^<n>+1` /
/// `<a>^<n>-1`, or a decimal integer. No whitespace.
InputExpr parse_special_form(std::string_view text);

/// Attaches a residue promise to a plain integer input.
InputExpr with_residue(InputExpr expr, std::uint64_t r, std::uint64_t m);

Factorization run_factor(const InputExpr& expr, const FactorOptions& options = {});

}  // namespace powfactor::cli
