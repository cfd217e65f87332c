#include "cli/input.hpp"

#include <cctype>

namespace powfactor::cli {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  std::string digits(const char* what) {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) throw ParseError(start, std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_exponent(const std::string& digits, std::size_t pos) {
  const mpz_class n(digits);
  if (n < 1 || n > kMaxExponent) {
    throw ParseError(pos, "exponent must be between 1 and " + std::to_string(kMaxExponent));
  }
  return n.get_ui();
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

mpz_class InputExpr::value() const {
  return std::visit(
      [](const auto& p) -> mpz_class {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SpecialForm>) {
          return p.value();
        } else {
          return p.n;
        }
      },
      parsed);
}

InputExpr parse_special_form(std::string_view text) {
  Cursor cur(text);
  const std::string base = cur.digits("a decimal integer");
  if (cur.done()) {
    const mpz_class n(base);
    if (n < 1) throw ConstraintError("constraint violation: input must be a positive integer");
    return {std::string(text), RawInteger{n}};
  }

  cur.expect('^');
  const std::size_t exp_pos = cur.pos();
  const std::uint64_t n = parse_exponent(cur.digits("an exponent"), exp_pos);
  const char op = cur.peek();
  if (op != '+' && op != '-') throw ParseError(cur.pos(), "expected '+' or '-'");
  cur.expect(op);

  const std::size_t second_pos = cur.pos();
  const std::string second = cur.digits("a decimal integer");
  mpz_class base_b(second);
  if (cur.done()) {
    if (base_b != 1) throw ParseError(second_pos, "shorthand form must end in +1 or -1");
  } else {
    cur.expect('^');
    const std::size_t exp2_pos = cur.pos();
    const std::uint64_t n2 = parse_exponent(cur.digits("an exponent"), exp2_pos);
    if (n2 != n) throw ParseError(exp2_pos, "both exponents must match");
    if (!cur.done()) throw ParseError(cur.pos(), "unexpected trailing input");
  }

  SpecialForm form{mpz_class(base), base_b, n, op == '+' ? Sign::Plus : Sign::Minus};
  try {
    form.validate();
  } catch (const std::invalid_argument& e) {
    throw ConstraintError(std::string("constraint violation: ") + e.what());
  }
  if (form.value() < 2) throw ConstraintError("constraint violation: value must be at least 2");
  return {std::string(text), form};
}

InputExpr with_residue(InputExpr expr, std::uint64_t r, std::uint64_t m) {
  const auto* raw = std::get_if<RawInteger>(&expr.parsed);
  if (raw == nullptr) {
    throw ConstraintError("constraint violation: --residue/--modulus apply to plain integers only");
  }
  if (m < 2 || r >= m) {
    throw ConstraintError("constraint violation: need modulus >= 2 and 0 <= residue < modulus");
  }
  expr.parsed = RawWithResidue{raw->n, ResidueInfo{m, r}};
  return expr;
}

Factorization run_factor(const InputExpr& expr, const FactorOptions& options) {
  return std::visit(
      [&](const auto& p) -> Factorization {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SpecialForm>) {
          return special_form_factor(p, options);
        } else if constexpr (std::is_same_v<T, RawInteger>) {
          return factor(p.n, options);
        } else {
          return factor(p.n, p.info, options);
        }
      },
      expr.parsed);
}

}  // namespace powfactor::cli
