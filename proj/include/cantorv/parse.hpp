#pragma once

#include <stdexcept>
#include <string>

#include "cantorv/clone.hpp"
#include "cantorv/code.hpp"
#include "cantorv/tableau.hpp"

namespace cantorv {

// Syntax error with 1-based line/column position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at " + std::to_string(l) + ":" +
                           std::to_string(c)),
        line(l),
        column(c) {}
};

// Term grammar: g<i>, a<k>(t), m(t1,...,tn); L/R alias a1/a2 when n = 2.
Term parse_term(const std::string& text, const Signature& sig);

// Address literal: <root>:<word>, root omitted when r = 1; `e` for the
// empty word.
Address parse_address(const std::string& text, const Signature& sig);

// Code literal: {0, 10, 11}.
PrefixCode parse_code(const std::string& text, const Signature& sig);

// Tableau literal: n=2 r=1 { 0->00, 10->01, 11->1 }; id(n,r) shorthand.
Tableau parse_tableau(const std::string& text);

// CloneSeq literal: [{0} > {00} > {000}].
CloneSeq parse_cloneseq(const std::string& text, const Signature& sig);

std::string print_address(const Address& a, const Signature& sig);
std::string print_code(const PrefixCode& p);
std::string print_tableau(const Tableau& t);
std::string print_cloneseq(const CloneSeq& s);

}  // namespace cantorv
