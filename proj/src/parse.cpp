#include <cctype>

#include "motzkin/algebra.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/idempotents.hpp"

namespace motzkin {

namespace {

struct WordParser {
  const std::string& s;
  size_t pos = 0;
  int n;
  ParamPtr P;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in \"" +
                     s + "\"");
  }

  long read_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    try {
      return std::stol(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      fail("integer literal out of range");
    }
  }

  AlgElem atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of word");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      AlgElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = read_int();
      Rat r(num);
      if (eat('/')) r /= Rat(read_int());
      return AlgElem::identity(P, n) * P->scalar(r);
    }
    if (s.compare(pos, 2, "id") == 0) {
      pos += 2;
      return AlgElem::identity(P, n);
    }
    if (c == 'e' || c == 'l' || c == 'r' || c == 'p' || c == 'g') {
      ++pos;
      long i = read_int();
      if (c == 'g') {
        if (i < 1 || i > n) fail("g index out of range");
        return jw(static_cast<int>(i), P).extend(n - static_cast<int>(i));
      }
      GenKind kind = c == 'e'   ? GenKind::e
                     : c == 'l' ? GenKind::l
                     : c == 'r' ? GenKind::r
                                : GenKind::p;
      return AlgElem::gen(P, kind, n, static_cast<int>(i));
    }
    fail("unexpected character");
  }

  AlgElem factor() {
    skip_ws();
    if (pos < s.size() && s[pos] == '-') {
      ++pos;
      return -factor();
    }
    return atom();
  }

  AlgElem term() {
    AlgElem e = factor();
    while (eat('*')) e = e * factor();
    return e;
  }

  AlgElem expr() {
    AlgElem e = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }
};

}  // namespace

AlgElem parse_word(const std::string& word, int n, const ParamPtr& P) {
  WordParser parser{word, 0, n, P};
  AlgElem e = parser.expr();
  parser.skip_ws();
  if (parser.pos != word.size()) parser.fail("trailing input");
  return e;
}

}  // namespace motzkin
