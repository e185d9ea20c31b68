#include "plansim/pddl/parser.hpp"

#include <cctype>
#include <memory>

#include "plansim/util/strings.hpp"

namespace plansim::pddl {

namespace {

// ---------------------------------------------------------------------------
// S-expression reader
// ---------------------------------------------------------------------------

struct Sexp {
  // Atom when children is empty and text non-empty; list otherwise.
  std::string text;
  std::vector<Sexp> children;
  bool is_list = false;
  int line = 0;
  int column = 0;

  bool is_atom() const { return !is_list; }
};

class Reader {
 public:
  Reader(std::string_view src, std::vector<Diagnostic>& errors) : src_(src), errors_(&errors) {}

  std::optional<Sexp> read_toplevel() {
    skip_ws();
    if (at_end()) {
      error(line_, col_, "empty input, expected (define ...)");
      return std::nullopt;
    }
    auto sexp = read_sexp();
    if (!sexp) return std::nullopt;
    skip_ws();
    if (!at_end()) error(line_, col_, "unexpected trailing content after top-level form");
    return sexp;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::optional<Sexp> read_sexp() {
    skip_ws();
    if (at_end()) {
      error(line_, col_, "unexpected end of input");
      return std::nullopt;
    }
    int l = line_, c = col_;
    if (peek() == '(') {
      advance();
      Sexp list;
      list.is_list = true;
      list.line = l;
      list.column = c;
      for (;;) {
        skip_ws();
        if (at_end()) {
          error(l, c, "unclosed '('");
          return std::nullopt;
        }
        if (peek() == ')') {
          advance();
          return list;
        }
        auto child = read_sexp();
        if (!child) return std::nullopt;
        list.children.push_back(std::move(*child));
      }
    }
    if (peek() == ')') {
      error(l, c, "unexpected ')'");
      advance();
      return std::nullopt;
    }
    Sexp atom;
    atom.line = l;
    atom.column = c;
    std::string text;
    while (!at_end()) {
      char ch = peek();
      if (ch == '(' || ch == ')' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) break;
      text += ch;
      advance();
    }
    atom.text = to_lower(text);
    return atom;
  }

  void error(int l, int c, std::string msg) { errors_->push_back({l, c, std::move(msg)}); }

  std::string_view src_;
  std::vector<Diagnostic>* errors_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------------------
// AST builders
// ---------------------------------------------------------------------------

class Builder {
 public:
  explicit Builder(std::vector<Diagnostic>& errors) : errors_(&errors) {}

 protected:
  void error(const Sexp& at, std::string msg) {
    errors_->push_back({at.line, at.column, std::move(msg)});
  }

  bool expect_atom(const Sexp& s, const char* what, std::string* out) {
    if (!s.is_atom() || s.text.empty()) {
      error(s, std::string("expected ") + what);
      return false;
    }
    *out = s.text;
    return true;
  }

  // Reads "n1 n2 - type n3 ..." groups. Types are optional per group.
  std::vector<TypedName> read_typed_list(const Sexp& list, std::size_t from, const char* what) {
    std::vector<TypedName> out;
    std::vector<std::size_t> pending;  // indexes into out awaiting a type
    for (std::size_t i = from; i < list.children.size(); ++i) {
      const Sexp& item = list.children[i];
      if (!item.is_atom()) {
        error(item, std::string("expected ") + what + " name");
        continue;
      }
      if (item.text == "-") {
        if (i + 1 >= list.children.size() || !list.children[i + 1].is_atom()) {
          error(item, "expected type name after '-'");
          break;
        }
        const std::string type = list.children[i + 1].text;
        if (pending.empty()) error(item, "dangling '-' with no names before it");
        for (std::size_t idx : pending) out[idx].type = type;
        pending.clear();
        ++i;
        continue;
      }
      pending.push_back(out.size());
      out.push_back({item.text, std::nullopt});
    }
    return out;
  }

  std::optional<Literal> read_literal(const Sexp& s, bool allow_negation) {
    if (!s.is_list || s.children.empty()) {
      error(s, "expected a literal like (pred arg ...)");
      return std::nullopt;
    }
    const Sexp& head = s.children[0];
    if (!head.is_atom()) {
      error(head, "expected predicate name");
      return std::nullopt;
    }
    if (head.text == "not") {
      if (!allow_negation) {
        error(s, "negation is not allowed here");
        return std::nullopt;
      }
      if (s.children.size() != 2) {
        error(s, "(not ...) takes exactly one literal");
        return std::nullopt;
      }
      auto inner = read_literal(s.children[1], false);
      if (!inner) return std::nullopt;
      inner->negated = true;
      return inner;
    }
    if (is_adl_keyword(head.text)) {
      error(s, "unsupported construct '" + head.text + "' (only the :strips/:typing subset is accepted)");
      return std::nullopt;
    }
    Literal lit;
    lit.predicate = head.text;
    for (std::size_t i = 1; i < s.children.size(); ++i) {
      const Sexp& arg = s.children[i];
      if (!arg.is_atom()) {
        error(arg, "literal arguments must be names or variables");
        return std::nullopt;
      }
      lit.args.push_back(arg.text);
    }
    return lit;
  }

  // (and L...) | single literal | () meaning the empty conjunction.
  std::vector<Literal> read_conjunction(const Sexp& s, bool allow_negation) {
    std::vector<Literal> out;
    if (s.is_list && s.children.empty()) return out;
    if (s.is_list && s.children[0].is_atom() && s.children[0].text == "and") {
      for (std::size_t i = 1; i < s.children.size(); ++i) {
        if (auto lit = read_literal(s.children[i], allow_negation)) out.push_back(std::move(*lit));
      }
      return out;
    }
    if (auto lit = read_literal(s, allow_negation)) out.push_back(std::move(*lit));
    return out;
  }

  static bool is_adl_keyword(const std::string& word) {
    return word == "or" || word == "forall" || word == "exists" || word == "when" ||
           word == "imply" || word == "=" || word == "increase" || word == "decrease" ||
           word == "assign";
  }

  std::vector<Diagnostic>* errors_;
};

class DomainBuilder : Builder {
 public:
  explicit DomainBuilder(std::vector<Diagnostic>& errors) : Builder(errors) {}

  std::optional<Domain> build(const Sexp& top) {
    if (!top.is_list || top.children.size() < 2 || !top.children[0].is_atom() ||
        top.children[0].text != "define") {
      error(top, "expected (define (domain ...) ...)");
      return std::nullopt;
    }
    const Sexp& head = top.children[1];
    if (!head.is_list || head.children.size() != 2 || !head.children[0].is_atom() ||
        head.children[0].text != "domain" || !head.children[1].is_atom()) {
      error(head, "expected (domain <name>)");
      return std::nullopt;
    }
    Domain domain;
    domain.name = head.children[1].text;
    for (std::size_t i = 2; i < top.children.size(); ++i) {
      const Sexp& section = top.children[i];
      if (!section.is_list || section.children.empty() || !section.children[0].is_atom()) {
        error(section, "expected a (:section ...) form");
        continue;
      }
      const std::string& tag = section.children[0].text;
      if (tag == ":requirements") {
        read_requirements(section, &domain);
      } else if (tag == ":types") {
        read_types(section, &domain);
      } else if (tag == ":predicates") {
        read_predicates(section, &domain);
      } else if (tag == ":action") {
        read_action(section, &domain);
      } else if (tag == ":constants" || tag == ":functions") {
        error(section, "unsupported section '" + tag + "'");
      } else {
        error(section, "unknown section '" + tag + "'");
      }
    }
    return domain;
  }

 private:
  void read_requirements(const Sexp& section, Domain* domain) {
    for (std::size_t i = 1; i < section.children.size(); ++i) {
      const Sexp& flag = section.children[i];
      if (!flag.is_atom()) {
        error(flag, "expected a requirement flag");
        continue;
      }
      if (flag.text == ":strips" || flag.text == ":typing" ||
          flag.text == ":negative-preconditions") {
        domain->requirements.push_back(flag.text);
      } else {
        error(flag, "unknown requirement flag '" + flag.text + "'");
      }
    }
  }

  void read_types(const Sexp& section, Domain* domain) {
    for (std::size_t i = 1; i < section.children.size(); ++i) {
      const Sexp& t = section.children[i];
      if (!t.is_atom()) {
        error(t, "expected type name");
        continue;
      }
      if (t.text == "-") {
        error(t, "type hierarchies are not supported");
        return;
      }
      domain->types.push_back(t.text);
    }
  }

  void read_predicates(const Sexp& section, Domain* domain) {
    for (std::size_t i = 1; i < section.children.size(); ++i) {
      const Sexp& p = section.children[i];
      if (!p.is_list || p.children.empty() || !p.children[0].is_atom()) {
        error(p, "expected (name ?params...) in :predicates");
        continue;
      }
      PredicateDecl decl;
      decl.name = p.children[0].text;
      decl.params = read_typed_list(p, 1, "parameter");
      domain->predicates.push_back(std::move(decl));
    }
  }

  void read_action(const Sexp& section, Domain* domain) {
    if (section.children.size() < 2 || !section.children[1].is_atom()) {
      error(section, "expected (:action <name> ...)");
      return;
    }
    ActionSchema action;
    action.name = section.children[1].text;
    bool saw_params = false;
    for (std::size_t i = 2; i + 1 < section.children.size(); i += 2) {
      const Sexp& key = section.children[i];
      const Sexp& val = section.children[i + 1];
      if (!key.is_atom()) {
        error(key, "expected :parameters/:precondition/:effect");
        return;
      }
      if (key.text == ":parameters") {
        if (!val.is_list) {
          error(val, ":parameters expects a list");
          return;
        }
        action.params = read_typed_list(val, 0, "parameter");
        saw_params = true;
      } else if (key.text == ":precondition") {
        action.preconditions = read_conjunction(val, true);
      } else if (key.text == ":effect") {
        action.effects = read_conjunction(val, true);
      } else {
        error(key, "unknown action key '" + key.text + "'");
      }
    }
    if (!saw_params) error(section, "action '" + action.name + "' is missing :parameters");
    domain->actions.push_back(std::move(action));
  }
};

class ProblemBuilder : Builder {
 public:
  explicit ProblemBuilder(std::vector<Diagnostic>& errors) : Builder(errors) {}

  std::optional<Problem> build(const Sexp& top) {
    if (!top.is_list || top.children.size() < 2 || !top.children[0].is_atom() ||
        top.children[0].text != "define") {
      error(top, "expected (define (problem ...) ...)");
      return std::nullopt;
    }
    const Sexp& head = top.children[1];
    if (!head.is_list || head.children.size() != 2 || !head.children[0].is_atom() ||
        head.children[0].text != "problem" || !head.children[1].is_atom()) {
      error(head, "expected (problem <name>)");
      return std::nullopt;
    }
    Problem problem;
    problem.name = head.children[1].text;
    for (std::size_t i = 2; i < top.children.size(); ++i) {
      const Sexp& section = top.children[i];
      if (!section.is_list || section.children.empty() || !section.children[0].is_atom()) {
        error(section, "expected a (:section ...) form");
        continue;
      }
      const std::string& tag = section.children[0].text;
      if (tag == ":domain") {
        if (section.children.size() != 2 || !section.children[1].is_atom()) {
          error(section, "expected (:domain <name>)");
        } else {
          problem.domain_name = section.children[1].text;
        }
      } else if (tag == ":objects") {
        problem.objects = read_typed_list(section, 1, "object");
      } else if (tag == ":init") {
        read_init(section, &problem);
      } else if (tag == ":goal") {
        if (section.children.size() != 2) {
          error(section, "expected (:goal <condition>)");
        } else {
          problem.goal = read_conjunction(section.children[1], true);
        }
      } else {
        error(section, "unknown section '" + tag + "'");
      }
    }
    if (problem.domain_name.empty()) error(top, "problem is missing (:domain ...)");
    return problem;
  }

 private:
  void read_init(const Sexp& section, Problem* problem) {
    for (std::size_t i = 1; i < section.children.size(); ++i) {
      auto lit = read_literal(section.children[i], false);
      if (!lit) continue;
      for (const auto& arg : lit->args) {
        if (!arg.empty() && arg[0] == '?') {
          error(section.children[i], "init atoms must be ground (no variables)");
        }
      }
      problem->init.push_back({lit->predicate, lit->args});
    }
  }
};

}  // namespace

Parsed<Domain> parse_domain(std::string_view text) {
  Parsed<Domain> result;
  Reader reader(text, result.errors);
  auto sexp = reader.read_toplevel();
  if (sexp && result.errors.empty()) {
    DomainBuilder builder(result.errors);
    auto domain = builder.build(*sexp);
    if (domain && result.errors.empty()) result.value = std::move(domain);
  }
  return result;
}

Parsed<Problem> parse_problem(std::string_view text) {
  Parsed<Problem> result;
  Reader reader(text, result.errors);
  auto sexp = reader.read_toplevel();
  if (sexp && result.errors.empty()) {
    ProblemBuilder builder(result.errors);
    auto problem = builder.build(*sexp);
    if (problem && result.errors.empty()) result.value = std::move(problem);
  }
  return result;
}

}  // namespace plansim::pddl
