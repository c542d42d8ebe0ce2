#pragma once

// Constraint language over JKL triples and its existential adjacency semantics.
//
// Grammar (atoms separated by ';'):
//   atom  := expr rel expr | '|' expr '|' ('=' | '>=') integer
//   rel   := '=' | '!=' | '<=' | '>='          (<= is subset, >= is superset)
//   expr  := term (op term)*                   (left-associative, one precedence level)
//   op    := '\' | 'u' | 'n'                   (difference, union, intersection)
//   term  := J | K | L | I | D | empty | downset(minJ) | '(' expr ')'
//
// downset(minJ) is {k in I | k < min J} under the family's order. An atom that
// mentions it is false when J is empty.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtensor/family.hpp"
#include "gtensor/process.hpp"

namespace gtensor {

enum class SetSymbol { J, K, L, I, D, Empty, Downset };

struct SetExpr {
  enum class Op { Symbol, Union, Intersection, Difference };

  Op op = Op::Symbol;
  SetSymbol symbol = SetSymbol::Empty;
  std::vector<SetExpr> operands;  // two operands unless op == Symbol

  static SetExpr of(SetSymbol s) { return SetExpr{Op::Symbol, s, {}}; }
  static SetExpr binary(Op op, SetExpr lhs, SetExpr rhs);

  bool mentions(SetSymbol s) const;
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

enum class Relation { Equal, NotEqual, Subset, Superset };
enum class CardinalityRelation { Equal, AtLeast };

struct Atom {
  enum class Kind { Relation, Cardinality };

  Kind kind = Kind::Relation;
  SetExpr lhs;
  SetExpr rhs;  // unused for cardinality atoms
  Relation relation = Relation::Equal;
  CardinalityRelation cardinality = CardinalityRelation::Equal;
  std::size_t count = 0;

  bool mentions(SetSymbol s) const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Conjunction of atoms.
struct ConstraintSpec {
  std::vector<Atom> atoms;

  bool needs_order() const;
  bool needs_distinguished() const;
  /// Syntactically contains `L = empty` (either side).
  bool forces_empty_l() const;

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

/// Throws ParseError (with position) or, for unknown identifiers, a ParseError
/// of kind UnknownSymbol.
ConstraintSpec parse_constraints(std::string_view text);
/// Canonical text; parse_constraints(to_string(s)) == s.
std::string to_string(const ConstraintSpec& spec);
std::string to_string(const SetExpr& expr);

/// Index-set structure that atoms may refer to.
struct IndexStructure {
  IndexSet all;
  std::optional<std::vector<std::size_t>> order_ranks;
  std::optional<IndexSet> distinguished;

  static IndexStructure of(const GraphFamily& fam);
};

/// Truth of the conjunction under concrete sets. Throws MissingStructure when
/// the spec mentions D or downset and the structure lacks it.
bool evaluate(const ConstraintSpec& spec, const JklTriple& t, const IndexStructure& structure);

/// A triple consistent with the pair (j in J only where components are
/// adjacent, k in K only where equal, l in L only where neither) that
/// partitions I, has J non-empty and satisfies `spec`; nullopt if none exists.
/// Handles f == g (relevant only for loop-allowing factors).
std::optional<JklTriple> constraint_witness(const ConstraintSpec& spec, const ProductVertex& f,
                                            const ProductVertex& g, const GraphFamily& fam,
                                            const SearchBudget& budget = SearchBudget::standard());

/// Existential adjacency; throws EqualVertices when f == g.
bool constraint_adjacent(const ConstraintSpec& spec, const ProductVertex& f, const ProductVertex& g,
                         const GraphFamily& fam, const SearchBudget& budget = SearchBudget::standard());

/// Constraint text for each built-in product.
std::string_view standard_constraint_text(BuiltinProduct kind);
ConstraintSpec standard_constraints(BuiltinProduct kind);

}  // namespace gtensor
