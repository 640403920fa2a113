#ifndef CTK_PARSE_HPP
#define CTK_PARSE_HPP

#include <cctype>

#include <ctk/shiftcase.hpp>

namespace ctk {

struct SyntaxError : std::runtime_error {
  size_t pos;
  SyntaxError(const std::string& m, size_t at)
      : std::runtime_error(m + " at position " + std::to_string(at)),
        pos(at) {}
};

struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := ('+'|'-')* power
// power  := atom ('^' ('-')? integer)?
// atom   := integer | 'q' | 'x' | 'y' | '(' expr ')'
class RatFuncParser {
 public:
  RatFuncParser(const std::string& text, CaseTag tag)
      : text_(text), tag_(tag) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return r;
  }

 private:
  const std::string& text_;
  CaseTag tag_;
  size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(
               static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    while (true) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        size_t at = pos_;
        RatFunc d = factor();
        if (d.isZero()) throw DivisionByZeroError(
            "division by zero at position " + std::to_string(at));
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (!eat('+'))
        break;
    }
    RatFunc r = power();
    return neg ? -r : r;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    size_t at = pos_;
    skip();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("expected integer exponent", at);
    long e = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > 10000) throw SyntaxError("exponent too large", at);
      ++pos_;
    }
    if (neg && base.isZero())
      throw DivisionByZeroError("zero raised to a negative power at position " +
                                std::to_string(at));
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  RatFunc atom() {
    skip();
    size_t at = pos_;
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", at);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return RatFunc(Rat(Int(digits)));
    }
    if (c == 'x' || c == 'y' || c == 'q') {
      ++pos_;
      if (c == 'q' && tag_ != CaseTag::QShift)
        throw SyntaxError("variable q is only available in the q-shift case",
                          at);
      return RatFunc::var(c == 'x' ? VX : c == 'y' ? VY : VQ);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", at);
  }
};

}  // namespace detail

inline RatFunc parseRatFunc(const std::string& text, CaseTag tag) {
  return detail::RatFuncParser(text, tag).run();
}

}  // namespace ctk

#endif  // CTK_PARSE_HPP
