#include "algint/expression.hpp"

#include "algint/errors.hpp"

#include <cctype>
#include <optional>

namespace algint {

namespace {

constexpr int kMaxDepth = 200;

// Either a pure rational or an algebra element.
struct Value {
  std::optional<Scalar> scalar;
  std::optional<Element> element;
};

class Parser {
 public:
  Parser(const AlgebraPtr& algebra, std::string_view text) : algebra_(algebra), text_(text) {}

  Element run() {
    Value v = expr();
    skipSpace();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return toElement(std::move(v), 0);
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element toElement(Value v, std::size_t at) const {
    if (v.element) return std::move(*v.element);
    if (!algebra_->identityIndex()) {
      throw ParseError("bare number needs an identity element, and '" + algebra_->name() +
                           "' has none",
                       at);
    }
    return Element::one(algebra_) * *v.scalar;
  }

  Value expr() {
    DepthGuard guard(*this);
    const std::size_t start = pos_;
    Value acc = term();
    for (;;) {
      int sign;
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
      const std::size_t at = pos_;
      Value rhs = term();
      if (acc.scalar && rhs.scalar) {
        acc.scalar = sign > 0 ? *acc.scalar + *rhs.scalar : *acc.scalar - *rhs.scalar;
        continue;
      }
      Element l = toElement(std::move(acc), start);
      Element r = toElement(std::move(rhs), at);
      acc = Value{std::nullopt, sign > 0 ? l + r : l - r};
    }
    return acc;
  }

  Value term() {
    Value acc = unary();
    int nonScalarFactors = acc.element ? 1 : 0;
    while (true) {
      skipSpace();
      // A '*' here is an operator; labels containing '*' were consumed greedily.
      if (!accept('*')) break;
      const std::size_t at = pos_;
      Value rhs = unary();
      if (rhs.element) ++nonScalarFactors;
      if (nonScalarFactors >= 3 && !algebra_->isAssociative()) {
        throw AmbiguousProduct("product of three or more factors in non-associative algebra '" +
                               algebra_->name() + "' needs parentheses (offset " +
                               std::to_string(at) + ")");
      }
      if (acc.scalar && rhs.scalar) {
        acc.scalar = *acc.scalar * *rhs.scalar;
      } else if (acc.scalar) {
        acc = Value{std::nullopt, *rhs.element * *acc.scalar};
      } else if (rhs.scalar) {
        *acc.element *= *rhs.scalar;
      } else {
        acc = Value{std::nullopt, multiply(*acc.element, *rhs.element)};
      }
    }
    return acc;
  }

  Value unary() {
    DepthGuard guard(*this);
    if (accept('-')) {
      Value v = unary();
      if (v.scalar) v.scalar = -*v.scalar;
      else *v.element *= Scalar(-1);
      return v;
    }
    if (accept('+')) return unary();
    return primary();
  }

  Value primary() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }

    const std::size_t literalLen = literalLength();
    std::size_t labelLen = 0;
    std::size_t labelIdx = 0;
    const std::string_view rest = text_.substr(pos_);
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
      const std::string& l = algebra_->labels()[i];
      if (l.size() > labelLen && rest.substr(0, l.size()) == l) {
        labelLen = l.size();
        labelIdx = i;
      }
    }
    if (literalLen == 0 && labelLen == 0) {
      throw ParseError("expected a number, basis label or '('", pos_);
    }
    if (literalLen >= labelLen) {
      const std::string_view lit = rest.substr(0, literalLen);
      const std::size_t at = pos_;
      pos_ += literalLen;
      try {
        return Value{Scalar::parse(lit), std::nullopt};
      } catch (const BadScalar& e) {
        throw ParseError(e.what(), at);
      }
    }
    pos_ += labelLen;
    return Value{std::nullopt, Element::basis(algebra_, labelIdx)};
  }

  // Length of digits ('/' digits)? at the cursor, 0 if none.
  std::size_t literalLength() const {
    std::size_t p = pos_;
    auto digits = [&](std::size_t from) {
      std::size_t q = from;
      while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
      return q;
    };
    std::size_t end = digits(p);
    if (end == p) return 0;
    if (end < text_.size() && text_[end] == '/') {
      const std::size_t denEnd = digits(end + 1);
      if (denEnd > end + 1) end = denEnd;
    }
    return end - p;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw ParseError("expression nested too deeply", parser.pos_);
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  const AlgebraPtr& algebra_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Element evalExpression(const AlgebraPtr& algebra, std::string_view text) {
  return Parser(algebra, text).run();
}

}  // namespace algint
