#include "nearring/mapdsl.hpp"

#include <cctype>
#include <limits>
#include <functional>

#include "nearring/pgroup.hpp"

namespace nearring {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

MapExpr MapExpr::literal(std::int64_t v) {
  if (v < 0) throw Error("literals are non-negative; use negate() for a minus sign");
  MapExpr e;
  e.nodes_.push_back({Kind::Literal, v, -1, -1});
  e.root_ = 0;
  return e;
}

MapExpr MapExpr::variable(int index) {
  if (index < 1 || index > 3) throw Error("variable index must be 1, 2 or 3");
  MapExpr e;
  e.nodes_.push_back({Kind::Var, index, -1, -1});
  e.root_ = 0;
  return e;
}

std::int32_t MapExpr::append(const MapExpr& other) {
  const auto shift = static_cast<std::int32_t>(nodes_.size());
  for (Node n : other.nodes_) {
    if (n.lhs >= 0) n.lhs += shift;
    if (n.rhs >= 0) n.rhs += shift;
    nodes_.push_back(n);
  }
  return other.root_ + shift;
}

MapExpr MapExpr::negate(const MapExpr& inner) {
  MapExpr e;
  const auto child = e.append(inner);
  e.nodes_.push_back({Kind::Neg, 0, child, -1});
  e.root_ = static_cast<std::int32_t>(e.nodes_.size() - 1);
  return e;
}

MapExpr MapExpr::binary(Kind kind, const MapExpr& l, const MapExpr& r) {
  MapExpr e;
  const auto a = e.append(l);
  const auto b = e.append(r);
  e.nodes_.push_back({kind, 0, a, b});
  e.root_ = static_cast<std::int32_t>(e.nodes_.size() - 1);
  return e;
}

Residue MapExpr::eval(const Element& x, Residue modulus) const {
  // Evaluating in Z/modulus is exact: reduction is a ring homomorphism.
  std::function<Residue(std::int32_t)> go = [&](std::int32_t i) -> Residue {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::Literal:
        return reduce(n.value, modulus);
      case Kind::Var:
        return reduce(n.value == 1 ? x.x1 : n.value == 2 ? x.x2 : x.x3, modulus);
      case Kind::Neg:
        return reduce(-static_cast<__int128>(go(n.lhs)), modulus);
      case Kind::Add:
        return reduce(static_cast<__int128>(go(n.lhs)) + go(n.rhs), modulus);
      case Kind::Sub:
        return reduce(static_cast<__int128>(go(n.lhs)) - go(n.rhs), modulus);
      case Kind::Mul:
        return reduce(static_cast<__int128>(go(n.lhs)) * go(n.rhs), modulus);
    }
    return 0;
  };
  return go(root_);
}

namespace {

int precedence(MapExpr::Kind k) {
  switch (k) {
    case MapExpr::Kind::Add:
    case MapExpr::Kind::Sub:
      return 1;
    case MapExpr::Kind::Mul:
      return 2;
    case MapExpr::Kind::Neg:
      return 3;
    default:
      return 4;
  }
}

}  // namespace

std::string MapExpr::to_string() const {
  std::function<std::string(std::int32_t)> go = [&](std::int32_t i) -> std::string {
    const Node& n = nodes_[i];
    auto wrap = [&](std::int32_t child, bool parens) {
      return parens ? "(" + go(child) + ")" : go(child);
    };
    switch (n.kind) {
      case Kind::Literal:
        return std::to_string(n.value);
      case Kind::Var:
        return "x" + std::to_string(n.value);
      case Kind::Neg:
        return "-" + wrap(n.lhs, precedence(nodes_[n.lhs].kind) < 3);
      case Kind::Add:
      case Kind::Sub:
        return wrap(n.lhs, false) + (n.kind == Kind::Add ? " + " : " - ") +
               wrap(n.rhs, precedence(nodes_[n.rhs].kind) <= 1);
      case Kind::Mul:
        return wrap(n.lhs, precedence(nodes_[n.lhs].kind) < 2) + "*" +
               wrap(n.rhs, precedence(nodes_[n.rhs].kind) <= 2);
    }
    return {};
  };
  return go(root_);
}

bool operator==(const MapExpr& l, const MapExpr& r) {
  std::function<bool(std::int32_t, std::int32_t)> same = [&](std::int32_t a, std::int32_t b) {
    const auto& na = l.nodes_[a];
    const auto& nb = r.nodes_[b];
    if (na.kind != nb.kind) return false;
    switch (na.kind) {
      case MapExpr::Kind::Literal:
      case MapExpr::Kind::Var:
        return na.value == nb.value;
      case MapExpr::Kind::Neg:
        return same(na.lhs, nb.lhs);
      default:
        return same(na.lhs, nb.lhs) && same(na.rhs, nb.rhs);
    }
  };
  return same(l.root_, r.root_);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  MapExpr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MapExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MapExpr expr() {
    MapExpr lhs = term();
    while (true) {
      if (accept('+')) lhs = MapExpr::binary(MapExpr::Kind::Add, lhs, term());
      else if (accept('-')) lhs = MapExpr::binary(MapExpr::Kind::Sub, lhs, term());
      else return lhs;
    }
  }

  MapExpr term() {
    MapExpr lhs = factor();
    while (accept('*')) lhs = MapExpr::binary(MapExpr::Kind::Mul, lhs, factor());
    return lhs;
  }

  MapExpr factor() {
    if (accept('-')) return MapExpr::negate(factor());
    return atom();
  }

  MapExpr atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MapExpr inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const int digit = text_[pos_] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
          throw ParseError("integer literal too large", start);
        }
        v = v * 10 + digit;
        ++pos_;
      }
      return MapExpr::literal(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x1") return MapExpr::variable(1);
      if (name == "x2") return MapExpr::variable(2);
      if (name == "x3") return MapExpr::variable(3);
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

MapExpr parse_map_expr(std::string_view text) { return ExprParser(text).parse(); }

MapTriple triple_from_exprs(const GroupParams& g, const MapExpr& alpha, const MapExpr& beta,
                            const MapExpr& gamma) {
  const auto n = g.order();
  std::vector<Residue> a(n), b(n), c(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const Element x = unrank(g, k);
    a[k] = alpha.eval(x, g.mod1());
    b[k] = beta.eval(x, g.mod2());
    c[k] = gamma.eval(x, g.mod3());
  }
  MapTriple maps(g, std::move(a), std::move(b), std::move(c));
  if (auto bad = maps.forced_row_violation()) throw MapFormatError(*bad);
  return maps;
}

}  // namespace nearring
