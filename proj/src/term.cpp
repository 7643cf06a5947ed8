#include "cantorv/term.hpp"

#include <algorithm>
#include <optional>

#include "cantorv/rng.hpp"

namespace cantorv {

Term Term::gen(int i) {
  Term t;
  t.kind = Kind::Gen;
  t.index = i;
  return t;
}

Term Term::mu(std::vector<Term> children) {
  Term t;
  t.kind = Kind::Mu;
  t.args = std::move(children);
  return t;
}

Term Term::alpha(int k, Term child) {
  Term t;
  t.kind = Kind::Alpha;
  t.index = k;
  t.args.push_back(std::move(child));
  return t;
}

bool Term::operator==(const Term& o) const {
  if (kind != o.kind) return false;
  if (kind != Kind::Mu && index != o.index) return false;
  return args == o.args;
}

int Term::depth() const {
  int d = 0;
  for (const Term& a : args) d = std::max(d, a.depth());
  return args.empty() ? 0 : d + 1;
}

int Term::size() const {
  int s = 1;
  for (const Term& a : args) s += a.size();
  return s;
}

void check_wellformed(const Term& t, const Signature& sig) {
  switch (t.kind) {
    case Term::Kind::Gen:
      if (t.index < 1 || t.index > sig.rank)
        throw std::invalid_argument("term: generator index " +
                                    std::to_string(t.index) +
                                    " out of range for " + sig.str());
      break;
    case Term::Kind::Alpha:
      if (t.index < 1 || t.index > sig.arity)
        throw std::invalid_argument("term: descent component " +
                                    std::to_string(t.index) +
                                    " out of range for " + sig.str());
      check_wellformed(t.args[0], sig);
      break;
    case Term::Kind::Mu:
      if (static_cast<int>(t.args.size()) != sig.arity)
        throw std::invalid_argument("term: mu expects " +
                                    std::to_string(sig.arity) + " arguments");
      for (const Term& a : t.args) check_wellformed(a, sig);
      break;
  }
}

// Rules, oriented left to right:
//   (1) a_k(m(t_1,...,t_n)) -> t_k
//   (2) m(a_1(t),...,a_n(t)) -> t
// Both shrink the term, and the innermost pass below yields the normal
// form in one traversal: contracting on normalized children cannot create
// a redex underneath the contraction site.
Term reduce(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return t;
    case Term::Kind::Alpha: {
      Term u = reduce(t.args[0]);
      if (u.kind == Term::Kind::Mu) return std::move(u.args[t.index - 1]);
      return Term::alpha(t.index, std::move(u));
    }
    case Term::Kind::Mu: {
      std::vector<Term> rs;
      rs.reserve(t.args.size());
      for (const Term& a : t.args) rs.push_back(reduce(a));
      bool collapses = true;
      for (size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].kind != Term::Kind::Alpha ||
            rs[i].index != static_cast<int>(i) + 1 ||
            rs[i].args[0] != rs[0].args[0]) {
          collapses = false;
          break;
        }
      }
      if (collapses) return std::move(rs[0].args[0]);
      return Term::mu(std::move(rs));
    }
  }
  return t;  // unreachable
}

namespace {

bool top_redex(const Term& t, Term& out) {
  if (t.kind == Term::Kind::Alpha && t.args[0].kind == Term::Kind::Mu) {
    out = t.args[0].args[t.index - 1];
    return true;
  }
  if (t.kind == Term::Kind::Mu) {
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (t.args[i].kind != Term::Kind::Alpha ||
          t.args[i].index != static_cast<int>(i) + 1 ||
          t.args[i].args[0] != t.args[0].args[0])
        return false;
    }
    out = t.args[0].args[0];
    return true;
  }
  return false;
}

// Contract the leftmost-outermost redex; false if t is normal.
bool step_outermost(const Term& t, Term& out) {
  if (top_redex(t, out)) return true;
  for (size_t i = 0; i < t.args.size(); ++i) {
    Term sub;
    if (step_outermost(t.args[i], sub)) {
      out = t;
      out.args[i] = std::move(sub);
      return true;
    }
  }
  return false;
}

}  // namespace

Term reduce_outermost(const Term& t) {
  Term cur = t;
  Term next;
  while (step_outermost(cur, next)) cur = std::move(next);
  return cur;
}

bool is_normal(const Term& t) {
  Term dummy;
  if (top_redex(t, dummy)) return false;
  for (const Term& a : t.args)
    if (!is_normal(a)) return false;
  return true;
}

bool equal(const Term& s, const Term& t) { return reduce(s) == reduce(t); }

std::string print_term(const Term& t, const Signature& sig) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return "g" + std::to_string(t.index);
    case Term::Kind::Alpha: {
      std::string head;
      if (sig.arity == 2)
        head = t.index == 1 ? "L" : "R";
      else
        head = "a" + std::to_string(t.index);
      return head + "(" + print_term(t.args[0], sig) + ")";
    }
    case Term::Kind::Mu: {
      std::string s = "m(";
      for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ",";
        s += print_term(t.args[i], sig);
      }
      return s + ")";
    }
  }
  return "";
}

Term random_term(const Signature& sig, int max_depth, Rng& rng) {
  if (sig.rank == 0)
    throw std::invalid_argument("random_term: rank-0 algebra is empty");
  if (max_depth == 0 || rng.chance(0.25))
    return Term::gen(rng.range(1, sig.rank));
  if (rng.chance(0.5)) {
    return Term::alpha(rng.range(1, sig.arity),
                       random_term(sig, max_depth - 1, rng));
  }
  std::vector<Term> kids;
  kids.reserve(sig.arity);
  for (int i = 0; i < sig.arity; ++i)
    kids.push_back(random_term(sig, max_depth - 1, rng));
  return Term::mu(std::move(kids));
}

}  // namespace cantorv
