#include "cfinj/expr.hpp"

#include <cctype>
#include <limits>
#include <utility>
#include <vector>

namespace cfinj {

struct Expr::Node {
  Kind kind;
  CofiniteInjection value;
  std::shared_ptr<Node const> lhs;
  std::shared_ptr<Node const> rhs;
  integer exponent = 0;
};

Expr Expr::literal(CofiniteInjection value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::literal;
  node->value = std::move(value);
  return Expr(std::move(node));
}

Expr Expr::compose(Expr lhs, Expr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::compose;
  node->lhs = std::move(lhs._node);
  node->rhs = std::move(rhs._node);
  return Expr(std::move(node));
}

Expr Expr::invert(Expr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::invert;
  node->lhs = std::move(operand._node);
  return Expr(std::move(node));
}

Expr Expr::power(Expr operand, integer exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->lhs = std::move(operand._node);
  node->exponent = exponent;
  return Expr(std::move(node));
}

Expr::Kind Expr::kind() const { return _node->kind; }

CofiniteInjection const& Expr::value() const { return _node->value; }

Expr Expr::lhs() const { return Expr(_node->lhs); }

Expr Expr::rhs() const { return Expr(_node->rhs); }

Expr Expr::operand() const { return Expr(_node->lhs); }

integer Expr::exponent() const { return _node->exponent; }

namespace {

bool nodes_equal(Expr const& a, Expr const& b) {
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Expr::Kind::literal:
      return a.value() == b.value();
    case Expr::Kind::compose:
      return nodes_equal(a.lhs(), b.lhs()) && nodes_equal(a.rhs(), b.rhs());
    case Expr::Kind::invert:
      return nodes_equal(a.operand(), b.operand());
    case Expr::Kind::power:
      return a.exponent() == b.exponent() &&
             nodes_equal(a.operand(), b.operand());
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string const& text) : _text(text) {}

  Expr parse_toplevel() {
    Expr e = parse_expr();
    skip_ws();
    if (_pos != _text.size()) {
      throw ParseError("unexpected trailing input", _pos);
    }
    return e;
  }

 private:
  std::string const& _text;
  std::size_t _pos = 0;

  void skip_ws() {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  char peek() {
    skip_ws();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) {
      throw ParseError(std::string("expected '") + c + "'", _pos);
    }
  }

  bool consume_keyword(char const* keyword) {
    skip_ws();
    std::size_t const len = std::char_traits<char>::length(keyword);
    if (_text.compare(_pos, len, keyword) == 0) {
      _pos += len;
      return true;
    }
    return false;
  }

  bool digit_ahead() {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  integer parse_nat() {
    skip_ws();
    if (!digit_ahead()) {
      throw ParseError("expected a number", _pos);
    }
    integer out = 0;
    while (_pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      integer const digit = _text[_pos] - '0';
      if (out > (std::numeric_limits<integer>::max() - digit) / 10) {
        throw ParseError("number out of range", _pos);
      }
      out = out * 10 + digit;
      ++_pos;
    }
    return out;
  }

  integer parse_int() {
    skip_ws();
    if (consume('-')) {
      return -parse_nat();
    }
    return parse_nat();
  }

  //! Rebrands element-construction failures: a literal that denotes no
  //! valid element is invalid input, whatever the engine called it.
  template <typename BuildFn>
  Expr build_literal(BuildFn&& build) {
    try {
      return Expr::literal(build());
    } catch (ParseError const&) {
      throw;
    } catch (CfinjError const& e) {
      throw ValidationError(e.what());
    }
  }

  Expr parse_atom() {
    if (consume('(')) {
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (consume_keyword("idem")) {
      expect('{');
      std::vector<integer> points;
      if (peek() != '}') {
        points.push_back(parse_int());
        while (consume(',')) {
          points.push_back(parse_int());
        }
      }
      expect('}');
      return build_literal(
          [&] { return idempotent_on_complement(FiniteSet(points)); });
    }
    if (consume_keyword("id")) {
      return Expr::literal(CofiniteInjection::identity());
    }
    if (consume_keyword("shift")) {
      expect('(');
      integer const k = parse_int();
      expect(')');
      return build_literal([&] { return CofiniteInjection::shift_map(k); });
    }
    if (consume_keyword("perm")) {
      return parse_perm();
    }
    if (consume_keyword("cfinj")) {
      return parse_cfinj();
    }
    throw ParseError("expected an element literal or '('", _pos);
  }

  Expr parse_perm() {
    std::vector<std::vector<integer>> cycles;
    expect('(');
    do {
      std::vector<integer> cycle;
      cycle.push_back(parse_nat());
      while (digit_ahead()) {
        cycle.push_back(parse_nat());
      }
      expect(')');
      cycles.push_back(std::move(cycle));
    } while (consume('('));
    return build_literal([&] {
      integer top = 0;
      for (auto const& cycle : cycles) {
        for (integer x : cycle) {
          top = std::max(top, x);
        }
      }
      if (top >= CofiniteInjection::kMaxThreshold) {
        throw ValidationError("cycle point " + std::to_string(top) +
                              " is over the cap " +
                              std::to_string(CofiniteInjection::kMaxThreshold));
      }
      std::vector<integer> table(static_cast<std::size_t>(top + 1));
      std::vector<bool> seen(static_cast<std::size_t>(top + 1), false);
      for (integer x = 0; x <= top; ++x) {
        table[static_cast<std::size_t>(x)] = x;
      }
      for (auto const& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          integer const from = cycle[i];
          if (seen[static_cast<std::size_t>(from)]) {
            throw ValidationError("cycles are not disjoint at " +
                                  std::to_string(from));
          }
          seen[static_cast<std::size_t>(from)] = true;
          table[static_cast<std::size_t>(from)] =
              cycle[(i + 1) % cycle.size()];
        }
      }
      return CofiniteInjection(std::move(table), 0);
    });
  }

  Expr parse_cfinj() {
    expect('{');
    if (!consume_keyword("k")) {
      throw ParseError("expected 'k='", _pos);
    }
    expect('=');
    integer const shift = parse_int();
    expect(';');
    if (!consume_keyword("N")) {
      throw ParseError("expected 'N='", _pos);
    }
    expect('=');
    integer const rows = parse_nat();
    expect(';');
    if (!consume_keyword("t")) {
      throw ParseError("expected 't='", _pos);
    }
    expect('=');
    expect('[');
    std::vector<integer> table;
    if (peek() != ']') {
      do {
        integer const row = parse_nat();
        skip_ws();
        if (_pos + 1 >= _text.size() || _text[_pos] != '-' ||
            _text[_pos + 1] != '>') {
          throw ParseError("expected '->'", _pos);
        }
        _pos += 2;
        integer value = CofiniteInjection::kUndef;
        if (!consume('_')) {
          value = parse_nat();
        }
        if (row != static_cast<integer>(table.size())) {
          throw ValidationError("rows must be listed as 0..N-1 in order");
        }
        table.push_back(value);
      } while (consume(','));
    }
    expect(']');
    expect('}');
    if (static_cast<integer>(table.size()) != rows) {
      throw ValidationError("N=" + std::to_string(rows) + " but " +
                            std::to_string(table.size()) + " rows listed");
    }
    return build_literal(
        [&] { return CofiniteInjection(std::move(table), shift); });
  }

  Expr parse_term() {
    Expr e = parse_atom();
    while (true) {
      if (consume('\'')) {
        e = Expr::invert(std::move(e));
      } else if (consume('^')) {
        e = Expr::power(std::move(e), parse_int());
      } else {
        return e;
      }
    }
  }

  Expr parse_expr() {
    Expr e = parse_term();
    while (consume('*')) {
      e = Expr::compose(std::move(e), parse_term());
    }
    return e;
  }
};

}  // namespace

bool Expr::operator==(Expr const& other) const {
  return nodes_equal(*this, other);
}

Expr parse(std::string const& text) { return Parser(text).parse_toplevel(); }

CofiniteInjection eval(Expr const& e) {
  switch (e.kind()) {
    case Expr::Kind::literal:
      return e.value();
    case Expr::Kind::compose:
      return eval(e.lhs()) * eval(e.rhs());
    case Expr::Kind::invert:
      return eval(e.operand()).inverse();
    case Expr::Kind::power:
      return pow(eval(e.operand()), e.exponent());
  }
  throw std::logic_error("unhandled expression node");
}

std::string format(CofiniteInjection const& a) { return a.to_string(); }

}  // namespace cfinj
