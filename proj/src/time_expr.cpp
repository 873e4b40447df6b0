#include "lapwalk/time_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lapwalk {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  long double parse() {
    long double v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad time expression \"" + std::string(s_) + "\": " + why);
  }

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

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  long double expr() {
    long double v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  long double term() {
    long double v = unary();
    while (true) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        const long double d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= unary();  // "3pi", "2sqrt(2)"
      } else {
        return v;
      }
    }
  }

  long double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  long double primary() {
    skip();
    if (eat('(')) {
      long double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string rest(s_.substr(pos_));
      char* end = nullptr;
      const long double v = std::strtold(rest.c_str(), &end);
      if (end == rest.c_str()) fail("bad number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    if (word == "pi") return kPi;
    if (word == "sqrt") {
      if (!eat('(')) fail("sqrt needs '('");
      const long double v = expr();
      if (!eat(')')) fail("missing ')'");
      if (v < 0) fail("sqrt of negative");
      return std::sqrt(v);
    }
    fail("unknown word \"" + std::string(word) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_time(std::string_view text) {
  const long double v = Parser(text).parse();
  if (!std::isfinite(v)) throw std::invalid_argument("time is not finite");
  return static_cast<double>(v);
}

}  // namespace lapwalk
