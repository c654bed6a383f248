#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nearring/maps.hpp"
#include "nearring/params.hpp"

namespace nearring {

/// Syntax error or unknown identifier in a map expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Integer polynomial in x1, x2, x3 built from literals, +, -, * and unary minus.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom
///   atom   := integer | 'x1' | 'x2' | 'x3' | '(' expr ')'
class MapExpr {
 public:
  enum class Kind : std::uint8_t { Literal, Var, Neg, Add, Sub, Mul };

  struct Node {
    Kind kind;
    std::int64_t value;  // literal value, or variable index 1..3
    std::int32_t lhs;
    std::int32_t rhs;
  };

  static MapExpr literal(std::int64_t v);
  static MapExpr variable(int index);
  static MapExpr negate(const MapExpr& e);
  static MapExpr binary(Kind kind, const MapExpr& l, const MapExpr& r);

  /// Exact value at x on canonical representatives, reduced into [0, modulus).
  Residue eval(const Element& x, Residue modulus) const;

  /// Minimal-parenthesis text that parses back to the same tree.
  std::string to_string() const;

  Kind root_kind() const { return nodes_[root_].kind; }
  std::size_t size() const { return nodes_.size(); }

  friend bool operator==(const MapExpr& l, const MapExpr& r);

 private:
  friend class ExprParser;
  std::int32_t append(const MapExpr& other);

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

MapExpr parse_map_expr(std::string_view text);

inline Residue eval_map_expr(const MapExpr& e, const Element& x, Residue modulus) {
  return e.eval(x, modulus);
}

/// Tabulate alpha, beta, gamma from expressions. Throws MapFormatError when the
/// row at a is not (0,1,0).
MapTriple triple_from_exprs(const GroupParams& g, const MapExpr& alpha, const MapExpr& beta,
                            const MapExpr& gamma);

}  // namespace nearring
