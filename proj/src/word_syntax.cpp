#include "sunic/word_syntax.hpp"

#include <cctype>
#include <sstream>

namespace sunic {

namespace {

class Parser {
 public:
  Parser(const SpecPtr& spec, std::string_view text) : spec_(spec), s_(text) {}

  Element parse() {
    Element x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "word, position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'a' || c == 'b' || c == 'c' || c == 'd' || c == 'B' || c == '1' || c == '(' ||
           c == '[';
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  Element expr() {
    Element x = Element::identity(spec_);
    while (atom_start()) x = x * term();
    return x;
  }

  Element term() {
    Element x = atom();
    while (at('^')) {
      ++pos_;
      skip();
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                               s_[pos_] == '-' || s_[pos_] == '+'))
        x = x.pow(integer());
      else if (atom_start())
        x = conjugate(x, atom());
      else
        fail("expected exponent or conjugator");
    }
    return x;
  }

  Element atom() {
    skip();
    char c = s_[pos_];
    switch (c) {
      case 'a':
        ++pos_;
        return Element::a(spec_);
      case '1':
        ++pos_;
        return Element::identity(spec_);
      case 'b': {
        ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          std::size_t start = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          std::size_t i = std::stoul(std::string(s_.substr(start, pos_ - start)));
          if (i >= spec_->m()) fail("basis index " + std::to_string(i) + " out of range");
          return Element::basis(spec_, i);
        }
        return witness_element(spec_);
      }
      case 'c':
      case 'd': {
        ++pos_;
        auto cd = find_cd(*spec_);
        return Element::b(spec_, c == 'c' ? cd.c : cd.d);
      }
      case 'B': {
        ++pos_;
        expect('<');
        BVec v;
        for (;;) {
          std::int64_t k = integer();
          std::int64_t p = spec_->p();
          v.coords.push_back(static_cast<Fp>(((k % p) + p) % p));
          if (at(',')) {
            ++pos_;
            continue;
          }
          break;
        }
        expect('>');
        if (v.coords.size() != spec_->m()) fail("B-vector needs " + std::to_string(spec_->m()) + " coordinates");
        return Element::b(spec_, v);
      }
      case '(': {
        ++pos_;
        Element x = expr();
        expect(')');
        return x;
      }
      case '[': {
        ++pos_;
        Element x = expr();
        expect(',');
        Element y = expr();
        expect(']');
        return commutator(x, y);
      }
    }
    fail("unexpected character");
  }

  const SpecPtr& spec_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_word(const SpecPtr& spec, std::string_view text) { return Parser(spec, text).parse(); }

std::string format_word(const Element& x) {
  if (x.empty()) return "1";
  const auto& s = *x.spec();
  std::ostringstream os;
  bool first = true;
  for (Letter l : x.letters()) {
    if (!first) os << ' ';
    first = false;
    if (is_a(l)) {
      os << 'a';
      if (a_exp(l) != 1) os << '^' << a_exp(l);
      continue;
    }
    bool basis = false;
    for (std::size_t i = 0; i < s.m(); ++i)
      if (s.basis_code(i) == l) {
        os << 'b' << i;
        basis = true;
      }
    if (basis) continue;
    BVec v = s.decode(l);
    os << "B<";
    for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
    os << '>';
  }
  return os.str();
}

std::string format_vertex(const Vertex& v) {
  std::string r;
  for (Fp d : v) r += std::to_string(d);
  return r;
}

Vertex parse_vertex(const GroupSpec& spec, std::string_view text) {
  Vertex v;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || Fp(c - '0') >= spec.p())
      throw Error(ErrorKind::ParseError, "bad vertex '" + std::string(text) + "'");
    v.push_back(Fp(c - '0'));
  }
  return v;
}

}  // namespace sunic
