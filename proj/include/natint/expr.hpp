#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "natint/interval.hpp"

namespace natint {

/// Evaluates one interval expression over a domain.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := interval | scalar | '{' expr '}' | fn '{' expr (',' expr)? '}'
///   fn     := min | max | recip
///
/// Braces group because parentheses already denote open intervals. A bare scalar is the
/// degenerate interval and adopts the flavor of whatever it is combined with.
inline NaturalInterval eval_expression(const Domain& d, std::string_view text);

namespace detail {

class ExprParser {
 public:
  ExprParser(const Domain& d, std::string_view text) : d_(d), s_(text) {}

  NaturalInterval run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("operator or end of input");
    return v.x;
  }

 private:
  struct Value {
    NaturalInterval x;
    bool bare = false;
  };

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected, s_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  static void align(Value& a, Value& b) {
    if (a.bare && !b.bare) a.x = a.x.with_flavor(b.x.flavor());
    if (b.bare && !a.bare) b.x = b.x.with_flavor(a.x.flavor());
  }

  template <class F>
  static Value combine(Value a, Value b, F f) {
    align(a, b);
    return {f(a.x, b.x), a.bare && b.bare};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) {
        v = combine(v, term(), iv_add);
      } else if (eat('-')) {
        v = combine(v, term(), iv_sub);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (eat('*')) {
        v = combine(v, factor(), iv_mul);
      } else if (eat('/')) {
        v = combine(v, factor(), iv_div);
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (eat('-')) {
      Value v = factor();
      return {iv_neg(v.x), v.bare};
    }
    Value v = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::uint64_t k = 0;
      if (!parse_uint(s_.substr(start, pos_ - start), k) || k == 0) {
        pos_ = start;
        fail("positive exponent");
      }
      v.x = iv_pow(v.x, k);
    }
    return v;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("interval, scalar or '{'");
    const char c = s_[pos_];
    if (c == '{') {
      ++pos_;
      Value v = expr();
      expect('}');
      return v;
    }
    if (c == '[' || c == '(') {
      const std::size_t close = s_.find_first_of("])", pos_ + 1);
      if (close == std::string_view::npos) fail("closing ']' or ')'");
      const std::size_t start = pos_;
      pos_ = close + 1;
      try {
        return {parse_interval(d_, s_.substr(start, pos_ - start)), false};
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.expected(), s_);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'I') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name != "min" && name != "max" && name != "recip") {
        pos_ = start;
        fail("min, max or recip");
      }
      expect('{');
      Value a = expr();
      if (name == "recip") {
        expect('}');
        return {iv_recip(a.x), a.bare};
      }
      expect(',');
      Value b = expr();
      expect('}');
      return combine(a, b, name == "min" ? iv_min : iv_max);
    }
    return scalar();
  }

  // A number with an optional fraction or decimal part and an optional trailing I, or I alone.
  Value scalar() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == '/'))
      ++pos_;
    if (pos_ < s_.size() && s_[pos_] == 'I') ++pos_;
    if (pos_ == start) fail("interval, scalar or '{'");
    try {
      return {NaturalInterval::degenerate(parse_scalar(d_, s_.substr(start, pos_ - start))), true};
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.expected(), s_);
    }
  }

  Domain d_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline NaturalInterval eval_expression(const Domain& d, std::string_view text) { return detail::ExprParser(d, text).run(); }

}  // namespace natint
