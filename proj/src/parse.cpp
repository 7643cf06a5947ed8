#include "cantorv/parse.hpp"

#include <cctype>

namespace cantorv {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}
  Cursor(const Cursor&) = default;
  Cursor& operator=(const Cursor& o) {
    pos_ = o.pos_;
    line_ = o.line_;
    col_ = o.col_;
    return *this;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }
  char take() {
    char c = peek();
    advance();
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(char c) {
    if (done() || peek() != c) return false;
    advance();
    return true;
  }
  bool accept_str(const std::string& s) {
    skip_ws();
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    for (size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }
  int integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      advance();
    }
    return v;
  }
  void finish() {
    if (!done()) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Term term_expr(Cursor& c, const Signature& sig) {
  char head = c.peek();
  if (head == 'g') {
    c.take();
    int i = c.integer();
    if (i < 1 || i > sig.rank) c.fail("generator index out of range");
    return Term::gen(i);
  }
  if (sig.arity == 2 && (head == 'L' || head == 'R')) {
    c.take();
    c.expect('(');
    Term t = term_expr(c, sig);
    c.expect(')');
    return Term::alpha(head == 'L' ? 1 : 2, std::move(t));
  }
  if (head == 'a') {
    c.take();
    int k = c.integer();
    if (k < 1 || k > sig.arity) c.fail("projection index out of range");
    c.expect('(');
    Term t = term_expr(c, sig);
    c.expect(')');
    return Term::alpha(k, std::move(t));
  }
  if (head == 'm') {
    c.take();
    c.expect('(');
    std::vector<Term> kids;
    kids.push_back(term_expr(c, sig));
    while (c.accept(',')) kids.push_back(term_expr(c, sig));
    c.expect(')');
    if (static_cast<int>(kids.size()) != sig.arity)
      c.fail("m takes " + std::to_string(sig.arity) + " arguments");
    return Term::mu(std::move(kids));
  }
  c.fail("expected a term");
}

std::string word_expr(Cursor& c, const Signature& sig) {
  if (c.accept('e')) return "";
  std::string w;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    char d = c.take();
    if (d - '0' >= sig.arity) c.fail("letter out of range for the arity");
    w.push_back(d);
  }
  if (w.empty()) c.fail("expected an address word or 'e'");
  return w;
}

Address address_expr(Cursor& c, const Signature& sig) {
  Address a;
  if (sig.rank == 1) {
    a.root = 1;
    // An explicit `1:` root is still accepted.
    if (c.peek() == '1') {
      Cursor probe = c;
      probe.take();
      if (probe.accept(':')) c = probe;
    }
  } else {
    a.root = c.integer();
    if (a.root < 1 || a.root > sig.rank) c.fail("root index out of range");
    c.expect(':');
  }
  a.word = word_expr(c, sig);
  return a;
}

PrefixCode code_expr(Cursor& c, const Signature& sig) {
  c.expect('{');
  std::vector<Address> addrs;
  if (!c.accept('}')) {
    addrs.push_back(address_expr(c, sig));
    while (c.accept(',')) addrs.push_back(address_expr(c, sig));
    c.expect('}');
  }
  return PrefixCode(sig, std::move(addrs));
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
  Cursor c(text);
  Term t = term_expr(c, sig);
  c.finish();
  return t;
}

Address parse_address(const std::string& text, const Signature& sig) {
  Cursor c(text);
  Address a = address_expr(c, sig);
  c.finish();
  return a;
}

PrefixCode parse_code(const std::string& text, const Signature& sig) {
  Cursor c(text);
  PrefixCode p = code_expr(c, sig);
  c.finish();
  return p;
}

Tableau parse_tableau(const std::string& text) {
  Cursor c(text);
  if (c.accept_str("id")) {
    c.expect('(');
    int n = c.integer();
    c.expect(',');
    int r = c.integer();
    c.expect(')');
    c.finish();
    return Tableau::identity(Signature(n, r));
  }
  if (!c.accept_str("n=")) c.fail("expected 'n='");
  int n = c.integer();
  if (!c.accept_str("r=")) c.fail("expected 'r='");
  int r = c.integer();
  const Signature sig(n, r);
  c.expect('{');
  std::vector<std::pair<Address, Address>> pairs;
  if (!c.accept('}')) {
    do {
      Address d = address_expr(c, sig);
      if (!c.accept_str("->")) c.fail("expected '->'");
      Address im = address_expr(c, sig);
      pairs.emplace_back(std::move(d), std::move(im));
    } while (c.accept(','));
    c.expect('}');
  }
  c.finish();
  return Tableau::make(sig, std::move(pairs));
}

CloneSeq parse_cloneseq(const std::string& text, const Signature& sig) {
  Cursor c(text);
  c.expect('[');
  std::vector<Clone> chain;
  chain.emplace_back(code_expr(c, sig));
  while (c.accept('>')) chain.emplace_back(code_expr(c, sig));
  c.expect(']');
  c.finish();
  return CloneSeq(std::move(chain));
}

std::string print_address(const Address& a, const Signature& sig) {
  return a.str(sig.rank);
}

std::string print_code(const PrefixCode& p) { return p.str(); }

std::string print_tableau(const Tableau& t) { return t.str(); }

std::string print_cloneseq(const CloneSeq& s) { return s.str(); }

}  // namespace cantorv
