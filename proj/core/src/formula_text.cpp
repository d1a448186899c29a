#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rbss/formula.hpp"

namespace rbss {

std::string Term::str() const {
  switch (kind) {
    case Kind::Var:
      return name;
    case Kind::Lit:
      return value->str();
    case Kind::MkSet: {
      std::ostringstream os;
      os << '{';
      for (size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ", ";
        os << elems[i]->str();
      }
      os << '}';
      return os.str();
    }
  }
  return "";
}

std::string Formula::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Member:
      os << "(in " << a->str() << ' ' << b->str() << ')';
      break;
    case Kind::Equal:
      os << "(= " << a->str() << ' ' << b->str() << ')';
      break;
    case Kind::Base: {
      static const char* names[] = {"less", "add", "mul", "zero", "one"};
      os << '(' << names[static_cast<int>(base)];
      for (const auto& t : args) os << ' ' << t->str();
      os << ')';
      break;
    }
    case Kind::And:
    case Kind::Or: {
      if (kids.empty()) return kind == Kind::And ? "true" : "false";
      os << (kind == Kind::And ? "(and" : "(or");
      for (const auto& k : kids) os << ' ' << k->str();
      os << ')';
      break;
    }
    case Kind::Not:
      os << "(not " << kids[0]->str() << ')';
      break;
    case Kind::BoundedExists:
      os << "(bex " << var << ' ' << bound->str() << ' ' << body->str() << ')';
      break;
    case Kind::BoundedForall:
      os << "(ball " << var << ' ' << bound->str() << ' ' << body->str() << ')';
      break;
    case Kind::Exists:
      os << "(exists " << var << ' ' << body->str() << ')';
      break;
  }
  return os.str();
}

namespace {

struct SexpParser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("bad formula text at position " + std::to_string(i) + ": " + msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++i;
  }

  static bool is_delim(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '{' ||
           c == '}' || c == ',';
  }

  std::string word() {
    skip_ws();
    // atom(p/q) travels as one word, parentheses and all
    if (s.compare(i, 5, "atom(") == 0) {
      size_t j = s.find(')', i + 5);
      if (j == std::string::npos) fail("unterminated atom");
      std::string w = s.substr(i, j + 1 - i);
      i = j + 1;
      return w;
    }
    size_t j = i;
    while (j < s.size() && !is_delim(s[j])) ++j;
    if (j == i) fail("expected a name");
    std::string w = s.substr(i, j - i);
    i = j;
    return w;
  }

  TermPtr term() {
    skip_ws();
    if (i >= s.size()) fail("expected a term");
    if (s[i] == '{') {
      ++i;
      std::vector<TermPtr> elems;
      skip_ws();
      if (at('}')) {
        ++i;
        return Term::mk_set({});
      }
      while (true) {
        elems.push_back(term());
        skip_ws();
        if (at(',')) {
          ++i;
          continue;
        }
        expect('}');
        return Term::mk_set(std::move(elems));
      }
    }
    std::string w = word();
    if (w.compare(0, 5, "atom(") == 0) {
      auto v = Rat::try_parse(w.substr(5, w.size() - 6));
      if (!v) fail("malformed rational in '" + w + "'");
      return Term::lit(HFSet::atom(*v));
    }
    // bare rationals are atom literals, so {2} is the singleton of atom 2
    if (auto v = Rat::try_parse(w)) return Term::lit(HFSet::atom(*v));
    return Term::var(std::move(w));
  }

  FormulaPtr formula() {
    skip_ws();
    if (i >= s.size()) fail("expected a formula");
    if (s[i] != '(') {
      std::string w = word();
      if (w == "true") return Formula::conj({});
      if (w == "false") return Formula::disj({});
      fail("expected '(' or true/false, got '" + w + "'");
    }
    ++i;
    std::string head = word();
    FormulaPtr f;
    if (head == "and" || head == "or") {
      std::vector<FormulaPtr> kids;
      while (!at(')')) kids.push_back(formula());
      f = head == "and" ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    } else if (head == "not") {
      f = Formula::negate(formula());
    } else if (head == "in" || head == "member") {
      TermPtr x = term(), y = term();
      f = Formula::member(std::move(x), std::move(y));
    } else if (head == "=" || head == "equal") {
      TermPtr x = term(), y = term();
      f = Formula::equal(std::move(x), std::move(y));
    } else if (head == "less") {
      TermPtr x = term(), y = term();
      f = Formula::pred(BasePred::Less, {std::move(x), std::move(y)});
    } else if (head == "add" || head == "mul") {
      TermPtr x = term(), y = term(), z = term();
      f = Formula::pred(head == "add" ? BasePred::Add : BasePred::Mul,
                        {std::move(x), std::move(y), std::move(z)});
    } else if (head == "zero" || head == "iszero") {
      f = Formula::pred(BasePred::IsZero, {term()});
    } else if (head == "one" || head == "isone") {
      f = Formula::pred(BasePred::IsOne, {term()});
    } else if (head == "bex" || head == "bounded-exists" || head == "ball" ||
               head == "bounded-forall") {
      std::string v = word();
      TermPtr range = term();
      FormulaPtr body = formula();
      bool ex = head == "bex" || head == "bounded-exists";
      f = ex ? Formula::bounded_exists(std::move(v), std::move(range), std::move(body))
             : Formula::bounded_forall(std::move(v), std::move(range), std::move(body));
    } else if (head == "exists") {
      std::string v = word();
      f = Formula::exists(std::move(v), formula());
    } else {
      fail("unknown form '" + head + "'");
    }
    expect(')');
    return f;
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  SexpParser p{text};
  FormulaPtr f = p.formula();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return f;
}

TermPtr parse_term(const std::string& text) {
  SexpParser p{text};
  TermPtr t = p.term();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return t;
}

}  // namespace rbss
