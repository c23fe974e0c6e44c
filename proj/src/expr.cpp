#include "ramanujan/expr.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ramanujan/common.hpp"

namespace ramanujan {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("expression '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
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

  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const double d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  double power() {
    const double base = atom();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  double atom() {
    skip();
    if (eat('(')) {
      const double v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      std::size_t used = 0;
      const std::string rest(s_.substr(pos_));
      double v = 0.0;
      try {
        v = std::stod(rest, &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      return v;
    }
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name == "pi") return kPi;
    if (name == "sqrt") {
      if (!eat('(')) fail("sqrt needs '('");
      const double v = sum();
      if (!eat(')')) fail("missing ')'");
      if (v < 0.0) fail("sqrt of a negative number");
      return std::sqrt(v);
    }
    fail(name.empty() ? "expected a value" : "unknown name '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

double evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace ramanujan
