#include "wordform/formula/sexpr.hpp"

#include <cctype>

#include "wordform/error.hpp"

namespace wordform {

namespace {

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::zero: out += '0'; return;
    case Kind::one: out += '1'; return;
    case Kind::pos: out += "x:" + std::to_string(f.var() + 1); return;
    case Kind::neg: out += "!x:" + std::to_string(f.var() + 1); return;
    default: break;
  }
  out += '(';
  out += to_string(f.kind());
  for (const auto& c : f.children()) {
    out += ' ';
    print(c, out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula formula() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto name = word();
      Kind kind;
      if (name == "and")
        kind = Kind::and_gate;
      else if (name == "or")
        kind = Kind::or_gate;
      else if (name == "maj")
        kind = Kind::maj_gate;
      else
        fail("unknown gate '" + name + "'");
      std::vector<Formula> kids;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) fail("unterminated gate");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        kids.push_back(formula());
      }
      return Formula::gate(kind, std::move(kids));
    }
    auto tok = word();
    if (tok == "0") return Formula::constant(false);
    if (tok == "1") return Formula::constant(true);
    bool positive = true;
    std::string_view rest = tok;
    if (!rest.empty() && rest[0] == '!') {
      positive = false;
      rest.remove_prefix(1);
    }
    if (rest.substr(0, 2) != "x:" || rest.size() == 2) fail("bad token '" + tok + "'");
    rest.remove_prefix(2);
    std::uint64_t v = 0;
    for (char d : rest) {
      if (!std::isdigit(static_cast<unsigned char>(d))) fail("bad literal index in '" + tok + "'");
      v = v * 10 + static_cast<std::uint64_t>(d - '0');
      if (v > 0xFFFFFFFFull) fail("literal index too large");
    }
    if (v == 0) fail("literal indices are one-based");
    return Formula::literal(static_cast<std::uint32_t>(v - 1), positive);
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string word() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (b == pos_) fail("expected a token");
    return std::string(s_.substr(b, pos_ - b));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

Formula parse_sexpr(std::string_view text) {
  Parser p(text);
  auto f = p.formula();
  p.finish();
  return f;
}

}  // namespace wordform
