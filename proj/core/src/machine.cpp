#include "rbss/machine.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace rbss {

const Node& Machine::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw std::out_of_range("no node '" + id + "'");
  return it->second;
}

MachineParseError::MachineParseError(std::vector<Diagnostic> diags)
    : std::runtime_error(format(diags)), diags_(std::move(diags)) {}

std::string MachineParseError::format(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  os << "machine description has " << diags.size()
     << (diags.size() == 1 ? " error:" : " errors:");
  for (const auto& d : diags) os << "\n  line " << d.line << ": " << d.message;
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_end() const { return tok_.kind == Token::Kind::End; }
  bool error() const { return error_; }
  size_t error_pos() const { return error_pos_; }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size() || s_[i_] == '#') {
      tok_ = {Token::Kind::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '@'))
        ++j;
      tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      // A decimal point binds only when not part of a '..' range token.
      if (j < s_.size() && s_[j] == '.' && j + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
        ++j;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      }
      tok_ = {Token::Kind::Number, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    // multi-char symbols first
    static const char* two[] = {"->", ":=", ".."};
    for (const char* t : two) {
      if (s_.compare(i_, 2, t) == 0) {
        tok_ = {Token::Kind::Symbol, t, i_};
        i_ += 2;
        return;
      }
    }
    static const std::string single = "?:,[]()+-*/^.";
    if (single.find(c) != std::string::npos) {
      tok_ = {Token::Kind::Symbol, std::string(1, c), i_};
      ++i_;
      return;
    }
    error_ = true;
    error_pos_ = i_;
    tok_ = {Token::Kind::End, "", i_};
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
  bool error_ = false;
  size_t error_pos_ = 0;
};

// Recursive-descent expression parser producing a rational function.
// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := ('+'|'-')* atom ('^' uint)?; atom := number | var | '(' expr ')'.
class ExprParser {
 public:
  ExprParser(Lexer& lex, std::vector<std::string>& errs) : lex_(lex), errs_(errs) {}

  std::optional<RatFun> parse() {
    auto e = expr();
    return e;
  }

 private:
  std::optional<RatFun> expr() {
    auto acc = term();
    if (!acc) return std::nullopt;
    while (is_sym("+") || is_sym("-")) {
      bool plus = lex_.take().text == "+";
      auto rhs = term();
      if (!rhs) return std::nullopt;
      *acc = plus ? (*acc + *rhs) : (*acc - *rhs);
    }
    return acc;
  }

  std::optional<RatFun> term() {
    auto acc = factor();
    if (!acc) return std::nullopt;
    while (is_sym("*") || is_sym("/")) {
      bool mul = lex_.take().text == "*";
      auto rhs = factor();
      if (!rhs) return std::nullopt;
      if (mul) {
        *acc = *acc * *rhs;
      } else {
        if (rhs->num.is_zero()) {
          errs_.push_back("division by the zero polynomial");
          return std::nullopt;
        }
        *acc = *acc * rhs->reciprocal();
      }
    }
    return acc;
  }

  std::optional<RatFun> factor() {
    bool negate = false;
    while (is_sym("+") || is_sym("-")) negate ^= lex_.take().text == "-";
    auto a = atom();
    if (!a) return std::nullopt;
    if (is_sym("^")) {
      lex_.take();
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::Number || t.text.find('.') != std::string::npos) {
        errs_.push_back("exponent must be a nonnegative integer");
        return std::nullopt;
      }
      unsigned long e = std::stoul(lex_.take().text);
      RatFun r{a->num.pow(e), a->den.pow(e)};
      *a = r.normalized();
    }
    if (negate) *a = RatFun::constant(Rat(-1)) * *a;
    return a;
  }

  std::optional<RatFun> atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      auto r = Rat::try_parse(lex_.take().text);
      if (!r) {
        errs_.push_back("non-rational literal");
        return std::nullopt;
      }
      return RatFun::constant(*r);
    }
    if (t.kind == Token::Kind::Ident) {
      // copy: take() recycles the token storage peek() handed out
      const std::string id = t.text;
      if (id.size() >= 2 && id[0] == 'x' &&
          id.find_first_not_of("0123456789", 1) == std::string::npos) {
        lex_.take();
        return RatFun::var(std::stol(id.substr(1)));
      }
      errs_.push_back("unexpected identifier '" + id + "' in expression (coordinates are x0, x1, ...)");
      return std::nullopt;
    }
    if (is_sym("(")) {
      lex_.take();
      auto e = expr();
      if (!e) return std::nullopt;
      if (!is_sym(")")) {
        errs_.push_back("missing ')'");
        return std::nullopt;
      }
      lex_.take();
      return e;
    }
    errs_.push_back("expected a rational expression");
    return std::nullopt;
  }

  bool is_sym(const char* s) const {
    return lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == s;
  }

  Lexer& lex_;
  std::vector<std::string>& errs_;
};

struct LineParser {
  Machine& m;
  std::vector<Diagnostic>& diags;
  int line = 0;
  bool saw_input = false;
  bool saw_name = false;
  int input_line = 0;
  std::map<std::string, int> node_lines;

  void fail(const std::string& msg) { diags.push_back({line, msg}); }

  std::optional<std::string> take_ident(Lexer& lex, const char* what) {
    if (lex.peek().kind != Token::Kind::Ident) {
      fail(std::string("expected ") + what);
      return std::nullopt;
    }
    return lex.take().text;
  }

  bool take_sym(Lexer& lex, const char* sym) {
    if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == sym) {
      lex.take();
      return true;
    }
    fail(std::string("expected '") + sym + "'");
    return false;
  }

  std::optional<long> take_int(Lexer& lex, const char* what) {
    bool neg = false;
    if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "-") {
      lex.take();
      neg = true;
    }
    if (lex.peek().kind != Token::Kind::Number ||
        lex.peek().text.find('.') != std::string::npos) {
      fail(std::string("expected ") + what);
      return std::nullopt;
    }
    long v = std::stol(lex.take().text);
    return neg ? -v : v;
  }

  void expect_line_end(Lexer& lex) {
    if (!lex.at_end()) fail("unexpected trailing input '" + lex.peek().text + "'");
  }

  void parse(const std::string& text) {
    Lexer lex(text);
    if (lex.at_end()) {
      if (lex.error()) fail("unrecognized character");
      return;
    }
    if (lex.peek().kind != Token::Kind::Ident) {
      fail("expected 'machine', 'input', or 'node'");
      return;
    }
    std::string kw = lex.take().text;
    if (kw == "machine") {
      auto name = take_ident(lex, "a machine name");
      if (!name) return;
      if (saw_name) fail("duplicate 'machine' line");
      saw_name = true;
      m.name = *name;
      expect_line_end(lex);
    } else if (kw == "input") {
      std::optional<long> arity;
      if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "*") {
        lex.take();
      } else {
        arity = take_int(lex, "an input arity (or '*')");
        if (!arity) return;
        if (*arity < 0) {
          fail("input arity must be nonnegative");
          return;
        }
      }
      if (!take_sym(lex, "->")) return;
      auto target = take_ident(lex, "a target node id");
      if (!target) return;
      if (saw_input) {
        fail("duplicate 'input' line; a machine has a unique input node");
        return;
      }
      saw_input = true;
      input_line = line;
      m.arity = arity;
      m.entry = *target;
      expect_line_end(lex);
    } else if (kw == "node") {
      parse_node(lex);
    } else {
      fail("unknown declaration '" + kw + "'");
    }
    if (lex.error()) fail("unrecognized character in line");
  }

  void parse_node(Lexer& lex) {
    auto id = take_ident(lex, "a node id");
    if (!id) return;
    if (*id == kInputNodeId) {
      fail("node id '@input' is reserved for the input node");
      return;
    }
    // remember the declaration even if the body fails to parse, so later
    // references to this id do not pile on a second, collateral error
    if (!node_lines.count(*id)) node_lines[*id] = line;
    auto kind = take_ident(lex, "a node kind (compute|branch|shift|output)");
    if (!kind) return;

    Node node;
    node.id = *id;
    std::vector<std::string> exprerrs;

    if (*kind == "compute") {
      node.kind = Node::Kind::Compute;
      while (true) {
        const Token& t = lex.peek();
        if (t.kind != Token::Kind::Ident || t.text.size() < 2 || t.text[0] != 'x' ||
            t.text.find_first_not_of("0123456789", 1) != std::string::npos) {
          fail("expected an assignment target x<i>");
          return;
        }
        long target = std::stol(lex.take().text.substr(1));
        if (!take_sym(lex, ":=")) return;
        ExprParser ep(lex, exprerrs);
        auto fn = ep.parse();
        if (!fn) break;
        if (node.assigns.count(target)) fail("duplicate assignment to x" + std::to_string(target));
        node.assigns.emplace(target, fn->normalized());
        if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == ",") {
          lex.take();
          continue;
        }
        break;
      }
      for (const auto& e : exprerrs) fail(e);
      if (!exprerrs.empty()) return;
      if (node.assigns.empty()) {
        fail("compute node needs at least one assignment");
        return;
      }
      if (lex.peek().kind != Token::Kind::Ident || lex.peek().text != "goto") {
        fail("compute node must end with 'goto <id>' (exactly one outgoing edge)");
        return;
      }
      lex.take();
      auto nxt = take_ident(lex, "a successor node id");
      if (!nxt) return;
      node.next = *nxt;
      expect_line_end(lex);
    } else if (*kind == "branch") {
      node.kind = Node::Kind::Branch;
      ExprParser ep(lex, exprerrs);
      auto fn = ep.parse();
      for (const auto& e : exprerrs) fail(e);
      if (!fn) return;
      auto norm = fn->normalized();
      if (!(norm.den.is_constant() && norm.den.const_value().is_one())) {
        fail("branch test must be a polynomial (no division by coordinates)");
        return;
      }
      node.test = norm.num;
      if (!take_sym(lex, "?")) {
        fail("branch node must have exactly two outgoing edges ('? <id> : <id>')");
        return;
      }
      auto yes = take_ident(lex, "a node id for the nonnegative edge");
      if (!yes) {
        fail("branch node must have exactly two outgoing edges ('? <id> : <id>')");
        return;
      }
      if (!take_sym(lex, ":")) {
        fail("branch node must have exactly two outgoing edges ('? <id> : <id>')");
        return;
      }
      auto no = take_ident(lex, "a node id for the negative edge");
      if (!no) {
        fail("branch node must have exactly two outgoing edges ('? <id> : <id>')");
        return;
      }
      node.on_nonneg = *yes;
      node.on_neg = *no;
      expect_line_end(lex);
    } else if (*kind == "shift") {
      node.kind = Node::Kind::Shift;
      auto dir = take_ident(lex, "'left' or 'right'");
      if (!dir) return;
      if (*dir != "left" && *dir != "right") {
        fail("shift direction must be 'left' or 'right'");
        return;
      }
      node.shifts_left = *dir == "left";
      if (lex.peek().kind != Token::Kind::Ident || lex.peek().text != "goto") {
        fail("shift node must end with 'goto <id>' (exactly one outgoing edge)");
        return;
      }
      lex.take();
      auto nxt = take_ident(lex, "a successor node id");
      if (!nxt) return;
      node.next = *nxt;
      expect_line_end(lex);
    } else if (*kind == "output") {
      node.kind = Node::Kind::Output;
      if (!take_sym(lex, "[")) return;
      if (!(lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "]")) {
        while (true) {
          OutItem item;
          auto parse_bound = [&](OutBound& b) -> bool {
            if (lex.peek().kind == Token::Kind::Ident && lex.peek().text == "n") {
              lex.take();
              b.is_marker = true;
              return true;
            }
            auto v = take_int(lex, "an output coordinate (integer or 'n')");
            if (!v) return false;
            b.value = *v;
            return true;
          };
          if (!parse_bound(item.lo)) return;
          if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "..") {
            lex.take();
            item.is_range = true;
            if (!parse_bound(item.hi)) return;
          } else {
            if (item.lo.is_marker) {
              item.is_range = true;  // bare 'n' reads as the single coordinate n
              item.hi = item.lo;
            } else {
              item.index = item.lo.value;
            }
          }
          node.outputs.push_back(item);
          if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == ",") {
            lex.take();
            continue;
          }
          break;
        }
      }
      if (!take_sym(lex, "]")) return;
      expect_line_end(lex);
    } else {
      fail("unknown node kind '" + *kind + "' (compute|branch|shift|output)");
      return;
    }

    if (m.nodes.count(node.id)) {
      fail("duplicate node id '" + node.id + "'");
      return;
    }
    m.nodes.emplace(node.id, std::move(node));
  }
};

}  // namespace

Machine parse_machine(const std::string& text) {
  Machine m;
  std::vector<Diagnostic> diags;
  LineParser lp{m, diags};

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    lp.line = lineno;
    lp.parse(line);
  }

  // cross-reference validation; each complaint points at the declaration that
  // names the missing node (a missing input line has no better anchor than EOF)
  lp.line = lineno;
  if (!lp.saw_input) lp.fail("missing 'input' declaration; a machine has a unique input node");
  auto declared = [&](const std::string& id) {
    return m.nodes.count(id) != 0 || lp.node_lines.count(id) != 0;
  };
  auto check_target = [&](const std::string& from, const std::string& to) {
    if (!to.empty() && !declared(to)) {
      lp.line = lp.node_lines.count(from) ? lp.node_lines[from] : lineno;
      lp.fail("node '" + from + "' references unknown node '" + to + "'");
    }
  };
  if (lp.saw_input && !declared(m.entry)) {
    lp.line = lp.input_line;
    lp.fail("input edge references unknown node '" + m.entry + "'");
  }
  for (const auto& [id, n] : m.nodes) {
    switch (n.kind) {
      case Node::Kind::Compute:
      case Node::Kind::Shift:
        check_target(id, n.next);
        break;
      case Node::Kind::Branch:
        check_target(id, n.on_nonneg);
        check_target(id, n.on_neg);
        break;
      case Node::Kind::Output:
        break;
    }
  }

  // connectivity: every declared node must be reachable from the input node
  if (diags.empty()) {
    std::set<std::string> seen;
    std::deque<std::string> work{m.entry};
    seen.insert(m.entry);
    while (!work.empty()) {
      const Node& n = m.nodes.at(work.front());
      work.pop_front();
      auto visit = [&](const std::string& to) {
        if (!to.empty() && seen.insert(to).second) work.push_back(to);
      };
      if (n.kind == Node::Kind::Compute || n.kind == Node::Kind::Shift) visit(n.next);
      if (n.kind == Node::Kind::Branch) {
        visit(n.on_nonneg);
        visit(n.on_neg);
      }
    }
    for (const auto& [id, n] : m.nodes) {
      (void)n;
      if (!seen.count(id)) {
        lp.line = lp.node_lines.count(id) ? lp.node_lines[id] : lineno;
        lp.fail("node '" + id + "' is not reachable from the input node (graph must be connected)");
      }
    }
  }

  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    throw MachineParseError(std::move(diags));
  }
  return m;
}

}  // namespace rbss
