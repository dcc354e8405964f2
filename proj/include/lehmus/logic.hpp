#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lehmus/report.hpp"

namespace lehmus::logic {

/// Immutable propositional formula over named variables and the
/// constants true/false. Copies share structure and are cheap; values
/// are safe to use from multiple threads.
class Formula {
 public:
  enum class Kind { Variable, Constant, Not, And, Or, Implies, Iff };

  static Formula variable(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& name() const;  // Variable only
  bool value() const;               // Constant only
  Formula child() const;            // Not only
  Formula left() const;             // binary nodes
  Formula right() const;            // binary nodes

  /// Variable names, sorted lexicographically, without duplicates.
  std::vector<std::string> variables() const;

  /// Renders with the minimal parentheses the grammar needs; the result
  /// parses back to a structurally equal formula.
  std::string str() const;

  bool operator==(const Formula& rhs) const;  // structural equality

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  /// Byte offset into the input where the parse failed.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class MissingVariableError : public std::runtime_error {
 public:
  explicit MissingVariableError(const std::string& variable)
      : std::runtime_error("assignment does not cover variable '" + variable + "'"),
        variable_(variable) {}
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

class VariableLimitError : public std::runtime_error {
 public:
  explicit VariableLimitError(std::size_t count);
};

/// Exhaustive enumeration stays sub-second up to this many variables.
inline constexpr std::size_t kVariableLimit = 20;

/// Grammar (ASCII):
///   identifiers  [a-zA-Z][a-zA-Z0-9_]*  except the keywords true/false
///   operators    ~ or ! (not), & (and), | (or), -> (implies), <-> (iff)
///   precedence   ~  >  &  >  |  >  ->  >  <->
///   -> and <-> associate to the right; & and | to the left.
Formula parse_formula(std::string_view text);

using Assignment = std::map<std::string, bool>;

/// Classical two-valued semantics; the assignment must cover every
/// variable of the formula (first uncovered variable, in depth-first
/// order, is reported otherwise).
bool evaluate(const Formula& f, const Assignment& assignment);

/// Full table in canonical order: variables sorted lexicographically,
/// rows counted with false = 0 and true = 1, first variable most
/// significant. Row i's assignment is decoded from its index.
struct TruthTable {
  struct Row {
    std::uint32_t index = 0;
    bool value = false;
  };

  std::vector<std::string> variables;
  std::vector<Row> rows;

  bool cell(std::size_t row, std::size_t variable) const {
    const std::size_t n = variables.size();
    return (rows[row].index >> (n - 1 - variable)) & 1u;
  }
  Assignment assignment(std::size_t row) const;
};

TruthTable truth_table(const Formula& f);

/// True iff f and g agree on every assignment over the union of their
/// variable sets.
bool are_equivalent(const Formula& f, const Formula& g);

bool is_tautology(const Formula& f);

/// One catalog entry: either an equivalence pair (rhs present) or a
/// single tautology claim (rhs absent), never both.
struct EquivalenceLaw {
  std::string id;
  std::string anchor;
  Formula lhs;
  std::optional<Formula> rhs;
};

/// The built-in law catalog: the equivalence chains behind formal /
/// vacuous / trivial proofs, biconditional decomposition, proof by
/// cases (k = 2, 3), contraposition and the contradiction-method bases.
std::vector<EquivalenceLaw> builtin_catalog();

VerificationReport verify_catalog(std::span<const EquivalenceLaw> laws);
VerificationReport verify_catalog();

}  // namespace lehmus::logic
