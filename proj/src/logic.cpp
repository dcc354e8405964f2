#include "lehmus/logic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>

namespace lehmus::logic {

struct Formula::Node {
  Kind kind;
  std::string name;                         // Variable
  bool value = false;                       // Constant
  std::shared_ptr<const Node> left, right;  // Not uses left only
};

Formula Formula::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = value;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->left = std::move(f.node_);
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Iff;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  assert(node_->kind == Kind::Variable);
  return node_->name;
}

bool Formula::value() const {
  assert(node_->kind == Kind::Constant);
  return node_->value;
}

Formula Formula::child() const { return Formula(node_->left); }

Formula Formula::left() const { return Formula(node_->left); }

Formula Formula::right() const { return Formula(node_->right); }

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      out.insert(f.name());
      break;
    case Formula::Kind::Constant:
      break;
    case Formula::Kind::Not:
      collect_variables(f.child(), out);
      break;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  collect_variables(*this, names);
  return {names.begin(), names.end()};
}

bool Formula::operator==(const Formula& rhs) const {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  switch (kind()) {
    case Kind::Variable:
      return name() == rhs.name();
    case Kind::Constant:
      return value() == rhs.value();
    case Kind::Not:
      return child() == rhs.child();
    default:
      return left() == rhs.left() && right() == rhs.right();
  }
}

namespace {

// Higher binds tighter. -> and <-> are right-associative, & and | left.
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

const char* operator_token(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff:
      return "<->";
    case Formula::Kind::Implies:
      return "->";
    case Formula::Kind::Or:
      return "|";
    case Formula::Kind::And:
      return "&";
    default:
      return "";
  }
}

void render(const Formula& f, int min_precedence, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < min_precedence;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Variable:
      out += f.name();
      break;
    case Formula::Kind::Constant:
      out += f.value() ? "true" : "false";
      break;
    case Formula::Kind::Not:
      out += '~';
      render(f.child(), prec, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      render(f.left(), prec, out);
      out += ' ';
      out += operator_token(f.kind());
      out += ' ';
      render(f.right(), prec + 1, out);
      break;
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      render(f.left(), prec + 1, out);
      out += ' ';
      out += operator_token(f.kind());
      out += ' ';
      render(f.right(), prec, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

VariableLimitError::VariableLimitError(std::size_t count)
    : std::runtime_error("formula has " + std::to_string(count) +
                         " variables; the enumeration limit is " +
                         std::to_string(kVariableLimit)) {}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class TokenKind { Ident, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      if (word == "true") {
        tokens.push_back({TokenKind::True, std::move(word), start});
      } else if (word == "false") {
        tokens.push_back({TokenKind::False, std::move(word), start});
      } else {
        tokens.push_back({TokenKind::Ident, std::move(word), start});
      }
      continue;
    }
    switch (c) {
      case '~':
      case '!':
        tokens.push_back({TokenKind::Not, std::string(1, c), start});
        ++i;
        break;
      case '&':
        tokens.push_back({TokenKind::And, "&", start});
        ++i;
        break;
      case '|':
        tokens.push_back({TokenKind::Or, "|", start});
        ++i;
        break;
      case '(':
        tokens.push_back({TokenKind::LParen, "(", start});
        ++i;
        break;
      case ')':
        tokens.push_back({TokenKind::RParen, ")", start});
        ++i;
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tokens.push_back({TokenKind::Implies, "->", start});
          i += 2;
        } else {
          throw ParseError("expected '->'", start);
        }
        break;
      case '<':
        if (i + 3 <= text.size() && text.substr(i, 3) == "<->") {
          tokens.push_back({TokenKind::Iff, "<->", start});
          i += 3;
        } else {
          throw ParseError("expected '<->'", start);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected token '" + peek().text + "'", peek().position);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(TokenKind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(TokenKind::Iff)) {
      return Formula::biconditional(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(TokenKind::Implies)) {
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(TokenKind::Or)) {
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(TokenKind::And)) {
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (accept(TokenKind::Not)) {
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& token = advance();
    switch (token.kind) {
      case TokenKind::Ident:
        return Formula::variable(token.text);
      case TokenKind::True:
        return Formula::constant(true);
      case TokenKind::False:
        return Formula::constant(false);
      case TokenKind::LParen: {
        Formula inner = parse_iff();
        if (!accept(TokenKind::RParen)) {
          throw ParseError("expected ')'", peek().position);
        }
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + token.text + "'", token.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  bool only_space = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      only_space = false;
      break;
    }
  }
  if (text.empty() || only_space) {
    throw ParseError("empty input", 0);
  }
  return Parser(tokenize(text)).parse();
}

// ---------------------------------------------------------------------------
// Evaluation and enumeration
// ---------------------------------------------------------------------------

namespace {

void check_coverage(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      if (!assignment.contains(f.name())) {
        throw MissingVariableError(f.name());
      }
      break;
    case Formula::Kind::Constant:
      break;
    case Formula::Kind::Not:
      check_coverage(f.child(), assignment);
      break;
    default:
      check_coverage(f.left(), assignment);
      check_coverage(f.right(), assignment);
      break;
  }
}

bool evaluate_unchecked(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      return assignment.at(f.name());
    case Formula::Kind::Constant:
      return f.value();
    case Formula::Kind::Not:
      return !evaluate_unchecked(f.child(), assignment);
    case Formula::Kind::And:
      return evaluate_unchecked(f.left(), assignment) &&
             evaluate_unchecked(f.right(), assignment);
    case Formula::Kind::Or:
      return evaluate_unchecked(f.left(), assignment) ||
             evaluate_unchecked(f.right(), assignment);
    case Formula::Kind::Implies:
      return !evaluate_unchecked(f.left(), assignment) ||
             evaluate_unchecked(f.right(), assignment);
    case Formula::Kind::Iff:
      return evaluate_unchecked(f.left(), assignment) ==
             evaluate_unchecked(f.right(), assignment);
  }
  return false;  // unreachable
}

// Row decoding shared by the enumeration routines: variable j of n takes
// bit (n-1-j) of the row index, so rows count up with false < true.
Assignment assignment_for_index(const std::vector<std::string>& variables,
                                std::uint32_t index) {
  Assignment a;
  const std::size_t n = variables.size();
  for (std::size_t j = 0; j < n; ++j) {
    a[variables[j]] = (index >> (n - 1 - j)) & 1u;
  }
  return a;
}

void check_limit(std::size_t count) {
  if (count > kVariableLimit) throw VariableLimitError(count);
}

// Enumeration-speed form: variables resolved to row-index bit positions
// up front, so a row evaluates with bit tests only.
struct CompiledNode {
  Formula::Kind kind;
  std::uint32_t mask = 0;  // Variable: its bit in the row index
  bool value = false;      // Constant
  std::unique_ptr<CompiledNode> left, right;
};

std::unique_ptr<CompiledNode> compile(const Formula& f,
                                      const std::vector<std::string>& variables) {
  auto node = std::make_unique<CompiledNode>();
  node->kind = f.kind();
  switch (f.kind()) {
    case Formula::Kind::Variable: {
      const auto it = std::lower_bound(variables.begin(), variables.end(), f.name());
      const std::size_t slot = static_cast<std::size_t>(it - variables.begin());
      node->mask = 1u << (variables.size() - 1 - slot);
      break;
    }
    case Formula::Kind::Constant:
      node->value = f.value();
      break;
    case Formula::Kind::Not:
      node->left = compile(f.child(), variables);
      break;
    default:
      node->left = compile(f.left(), variables);
      node->right = compile(f.right(), variables);
      break;
  }
  return node;
}

bool eval_row(const CompiledNode& node, std::uint32_t row) {
  switch (node.kind) {
    case Formula::Kind::Variable:
      return (row & node.mask) != 0;
    case Formula::Kind::Constant:
      return node.value;
    case Formula::Kind::Not:
      return !eval_row(*node.left, row);
    case Formula::Kind::And:
      return eval_row(*node.left, row) && eval_row(*node.right, row);
    case Formula::Kind::Or:
      return eval_row(*node.left, row) || eval_row(*node.right, row);
    case Formula::Kind::Implies:
      return !eval_row(*node.left, row) || eval_row(*node.right, row);
    case Formula::Kind::Iff:
      return eval_row(*node.left, row) == eval_row(*node.right, row);
  }
  return false;  // unreachable
}

}  // namespace

bool evaluate(const Formula& f, const Assignment& assignment) {
  check_coverage(f, assignment);
  return evaluate_unchecked(f, assignment);
}

Assignment TruthTable::assignment(std::size_t row) const {
  return assignment_for_index(variables, rows[row].index);
}

TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.variables = f.variables();
  check_limit(table.variables.size());
  const auto compiled = compile(f, table.variables);
  const std::uint32_t row_count = 1u << table.variables.size();
  table.rows.reserve(row_count);
  for (std::uint32_t index = 0; index < row_count; ++index) {
    table.rows.push_back({index, eval_row(*compiled, index)});
  }
  return table;
}

bool are_equivalent(const Formula& f, const Formula& g) {
  std::set<std::string> names;
  collect_variables(f, names);
  collect_variables(g, names);
  const std::vector<std::string> variables(names.begin(), names.end());
  check_limit(variables.size());
  const auto lhs = compile(f, variables);
  const auto rhs = compile(g, variables);
  const std::uint32_t row_count = 1u << variables.size();
  for (std::uint32_t index = 0; index < row_count; ++index) {
    if (eval_row(*lhs, index) != eval_row(*rhs, index)) return false;
  }
  return true;
}

bool is_tautology(const Formula& f) {
  const std::vector<std::string> variables = f.variables();
  check_limit(variables.size());
  const auto compiled = compile(f, variables);
  const std::uint32_t row_count = 1u << variables.size();
  for (std::uint32_t index = 0; index < row_count; ++index) {
    if (!eval_row(*compiled, index)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Law catalog
// ---------------------------------------------------------------------------

namespace {

EquivalenceLaw equivalence(std::string id, std::string anchor, std::string_view lhs,
                           std::string_view rhs) {
  return {std::move(id), std::move(anchor), parse_formula(lhs), parse_formula(rhs)};
}

EquivalenceLaw tautology_claim(std::string id, std::string anchor, std::string_view f) {
  return {std::move(id), std::move(anchor), parse_formula(f), std::nullopt};
}

}  // namespace

std::vector<EquivalenceLaw> builtin_catalog() {
  std::vector<EquivalenceLaw> laws;

  // Chains are stored pairwise: each entry claims one equivalence.
  laws.push_back(equivalence("L1.1", "p & ~q -> r  <=>  p & ~r -> q",
                             "p & ~q -> r", "p & ~r -> q"));
  laws.push_back(equivalence("L1.2", "p & ~r -> q  <=>  p -> q | r",
                             "p & ~r -> q", "p -> q | r"));

  laws.push_back(equivalence("L2", "split premise: (t&p->r) & (t&q->r)  <=>  t&(p|q)->r",
                             "(t & p -> r) & (t & q -> r)", "t & (p | q) -> r"));

  laws.push_back(equivalence("L3.1", "negated implication: ~(p->q)  <=>  ~(~p | q)",
                             "~(p -> q)", "~(~p | q)"));
  laws.push_back(equivalence("L3.2", "De Morgan step: ~(~p | q)  <=>  ~(~p) & ~q",
                             "~(~p | q)", "~(~p) & ~q"));
  laws.push_back(equivalence("L3.3", "double negation step: ~(~p) & ~q  <=>  p & ~q",
                             "~(~p) & ~q", "p & ~q"));

  laws.push_back(tautology_claim("L4", "vacuous implication: (p & ~p) -> q",
                                 "(p & ~p) -> q"));

  laws.push_back(tautology_claim("L5", "trivial implication: q -> (p -> q)",
                                 "q -> (p -> q)"));

  laws.push_back(equivalence("L6", "biconditional definition: p<->q  <=>  (p->q)&(q->p)",
                             "p <-> q", "(p -> q) & (q -> p)"));

  laws.push_back(equivalence("L7.k2", "proof by cases, two cases",
                             "(p1 -> q) & (p2 -> q)", "(p1 | p2) -> q"));
  laws.push_back(equivalence("L7.k3", "proof by cases, three cases",
                             "(p1 -> q) & (p2 -> q) & (p3 -> q)",
                             "(p1 | p2 | p3) -> q"));

  laws.push_back(equivalence("L8", "law of contrapositive: ~q -> ~p  <=>  p -> q",
                             "~q -> ~p", "p -> q"));

  laws.push_back(equivalence("L9.1", "implication as disjunction: p->q  <=>  ~p | q",
                             "p -> q", "~p | q"));
  laws.push_back(equivalence("L9.2", "negated implication: ~(p->q)  <=>  p & ~q",
                             "~(p -> q)", "p & ~q"));

  laws.push_back(equivalence("L10.1", "contradiction base: p->q  <=>  ~q & p -> ~p",
                             "p -> q", "~q & p -> ~p"));
  laws.push_back(equivalence("L10.2", "contradiction base: ~q & p -> ~p  <=>  ~(p->q) -> ~p",
                             "~q & p -> ~p", "~(p -> q) -> ~p"));
  laws.push_back(equivalence("L10.3", "contradiction base: p->q  <=>  ~q & p -> q",
                             "p -> q", "~q & p -> q"));
  laws.push_back(equivalence("L10.4", "contradiction base: ~q & p -> q  <=>  ~(p->q) -> q",
                             "~q & p -> q", "~(p -> q) -> q"));

  laws.push_back(equivalence("L11.1", "contradiction against a theorem: p->q  <=>  ~q & p -> ~true",
                             "p -> q", "~q & p -> ~true"));
  laws.push_back(equivalence("L11.2", "contradiction against a theorem: ~q & p -> ~true  <=>  ~(p->q) -> ~true",
                             "~q & p -> ~true", "~(p -> q) -> ~true"));

  laws.push_back(equivalence("L12.k2.neg", "negated case split, two cases",
                             "~(q1 | q2)", "~q1 & ~q2"));
  laws.push_back(equivalence("L12.k3.neg", "negated case split, three cases",
                             "~(q1 | q2 | q3)", "~q1 & ~q2 & ~q3"));
  laws.push_back(equivalence("L12.k2.imp", "refuting each case, two cases",
                             "(p -> ~q1) & (p -> ~q2)", "p -> ~q1 & ~q2"));
  laws.push_back(equivalence("L12.k3.imp", "refuting each case, three cases",
                             "(p -> ~q1) & (p -> ~q2) & (p -> ~q3)",
                             "p -> ~q1 & ~q2 & ~q3"));

  return laws;
}

VerificationReport verify_catalog(std::span<const EquivalenceLaw> laws) {
  VerificationReport report;
  report.config.emplace_back("catalog_size", std::to_string(laws.size()));
  for (const auto& law : laws) {
    CheckRecord record;
    record.check_id = "logic.catalog." + law.id;
    record.anchor = law.anchor;
    if (law.rhs.has_value()) {
      record.pass = are_equivalent(law.lhs, *law.rhs);
      record.inputs.emplace_back("lhs", law.lhs.str());
      record.inputs.emplace_back("rhs", law.rhs->str());
    } else {
      record.pass = is_tautology(law.lhs);
      record.inputs.emplace_back("formula", law.lhs.str());
    }
    record.exact = record.pass;
    report.add(std::move(record));
  }
  return report;
}

VerificationReport verify_catalog() {
  const auto laws = builtin_catalog();
  return verify_catalog(laws);
}

}  // namespace lehmus::logic
