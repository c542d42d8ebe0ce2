#include "gtensor/constraint.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gtensor {

SetExpr SetExpr::binary(Op op, SetExpr lhs, SetExpr rhs) {
  SetExpr e;
  e.op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

bool SetExpr::mentions(SetSymbol s) const {
  if (op == Op::Symbol) return symbol == s;
  return std::any_of(operands.begin(), operands.end(), [s](const SetExpr& e) { return e.mentions(s); });
}

bool Atom::mentions(SetSymbol s) const {
  return lhs.mentions(s) || (kind == Kind::Relation && rhs.mentions(s));
}

bool ConstraintSpec::needs_order() const {
  return std::any_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.mentions(SetSymbol::Downset); });
}

bool ConstraintSpec::needs_distinguished() const {
  return std::any_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.mentions(SetSymbol::D); });
}

bool ConstraintSpec::forces_empty_l() const {
  const SetExpr l = SetExpr::of(SetSymbol::L);
  const SetExpr empty = SetExpr::of(SetSymbol::Empty);
  return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
    return a.kind == Atom::Kind::Relation && a.relation == Relation::Equal &&
           ((a.lhs == l && a.rhs == empty) || (a.lhs == empty && a.rhs == l));
  });
}

// --- parsing -------------------------------------------------------------------

namespace {

enum class Tok { Ident, Int, LParen, RParen, Bar, Semi, Eq, Ne, Le, Ge, Backslash, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, {}, start};
    const char c = src_[pos_];
    auto one = [&](Tok t) { ++pos_; return Token{t, src_.substr(start, 1), start}; };
    auto two = [&](Tok t) { pos_ += 2; return Token{t, src_.substr(start, 2), start}; };
    auto peek = [&](char want) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == want; };

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, src_.substr(start, pos_ - start), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Int, src_.substr(start, pos_ - start), start};
    }
    // U+2205 EMPTY SET
    if (src_.substr(pos_, 3) == "\xE2\x88\x85") {
      pos_ += 3;
      return {Tok::Ident, "empty", start};
    }
    switch (c) {
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case '|': return one(Tok::Bar);
      case ';': return one(Tok::Semi);
      case '=': return one(Tok::Eq);
      case '!': if (peek('=')) return two(Tok::Ne); break;
      case '<': if (peek('=')) return two(Tok::Le); break;
      case '>': if (peek('=')) return two(Tok::Ge); break;
      case '\\': return peek('\\') ? two(Tok::Backslash) : one(Tok::Backslash);
      default: break;
    }
    throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  ConstraintSpec parse() {
    ConstraintSpec spec;
    while (true) {
      spec.atoms.push_back(atom());
      if (current_.kind == Tok::Semi) {
        advance();
        if (current_.kind == Tok::End) break;
        continue;
      }
      if (current_.kind == Tok::End) break;
      fail("expected ';' or end of input");
    }
    return spec;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.pos, message);
  }

  void expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    advance();
  }

  Atom atom() {
    Atom a;
    if (current_.kind == Tok::Bar) {
      advance();
      a.kind = Atom::Kind::Cardinality;
      a.lhs = expr();
      expect(Tok::Bar, "'|'");
      if (current_.kind == Tok::Eq) {
        a.cardinality = CardinalityRelation::Equal;
      } else if (current_.kind == Tok::Ge) {
        a.cardinality = CardinalityRelation::AtLeast;
      } else {
        fail("expected '=' or '>=' after cardinality");
      }
      advance();
      if (current_.kind != Tok::Int) fail("expected an integer");
      const auto text = current_.text;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), a.count);
      if (ec != std::errc{}) fail("integer out of range");
      advance();
      return a;
    }
    a.kind = Atom::Kind::Relation;
    a.lhs = expr();
    switch (current_.kind) {
      case Tok::Eq: a.relation = Relation::Equal; break;
      case Tok::Ne: a.relation = Relation::NotEqual; break;
      case Tok::Le: a.relation = Relation::Subset; break;
      case Tok::Ge: a.relation = Relation::Superset; break;
      default: fail("expected a relation (=, !=, <=, >=)");
    }
    advance();
    a.rhs = expr();
    return a;
  }

  SetExpr expr() {
    SetExpr lhs = term();
    while (true) {
      SetExpr::Op op;
      if (current_.kind == Tok::Backslash) {
        op = SetExpr::Op::Difference;
      } else if (current_.kind == Tok::Ident && current_.text == "u") {
        op = SetExpr::Op::Union;
      } else if (current_.kind == Tok::Ident && current_.text == "n") {
        op = SetExpr::Op::Intersection;
      } else {
        return lhs;
      }
      advance();
      lhs = SetExpr::binary(op, std::move(lhs), term());
    }
  }

  SetExpr term() {
    if (current_.kind == Tok::LParen) {
      advance();
      SetExpr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (current_.kind != Tok::Ident) fail("expected a set expression");
    const Token tok = current_;
    advance();
    if (tok.text == "J") return SetExpr::of(SetSymbol::J);
    if (tok.text == "K") return SetExpr::of(SetSymbol::K);
    if (tok.text == "L") return SetExpr::of(SetSymbol::L);
    if (tok.text == "I") return SetExpr::of(SetSymbol::I);
    if (tok.text == "D") return SetExpr::of(SetSymbol::D);
    if (tok.text == "empty") return SetExpr::of(SetSymbol::Empty);
    if (tok.text == "downset") {
      expect(Tok::LParen, "'(' after downset");
      if (current_.kind != Tok::Ident || current_.text != "minJ") fail("downset takes only minJ");
      advance();
      expect(Tok::RParen, "')'");
      return SetExpr::of(SetSymbol::Downset);
    }
    throw ParseError(tok.pos, "unknown symbol '" + std::string(tok.text) + "'", ErrorKind::UnknownSymbol);
  }

  Lexer lexer_;
  Token current_{Tok::End, {}, 0};
};

std::string_view symbol_text(SetSymbol s) {
  switch (s) {
    case SetSymbol::J: return "J";
    case SetSymbol::K: return "K";
    case SetSymbol::L: return "L";
    case SetSymbol::I: return "I";
    case SetSymbol::D: return "D";
    case SetSymbol::Empty: return "empty";
    case SetSymbol::Downset: return "downset(minJ)";
  }
  return "?";
}

std::string_view op_text(SetExpr::Op op) {
  switch (op) {
    case SetExpr::Op::Union: return "u";
    case SetExpr::Op::Intersection: return "n";
    case SetExpr::Op::Difference: return "\\";
    case SetExpr::Op::Symbol: break;
  }
  return "?";
}

}  // namespace

ConstraintSpec parse_constraints(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const SetExpr& expr) {
  if (expr.op == SetExpr::Op::Symbol) return std::string(symbol_text(expr.symbol));
  // Left operands associate without parentheses; a compound right operand needs them.
  const SetExpr& lhs = expr.operands[0];
  const SetExpr& rhs = expr.operands[1];
  std::string right = to_string(rhs);
  if (rhs.op != SetExpr::Op::Symbol) right = "(" + right + ")";
  return to_string(lhs) + " " + std::string(op_text(expr.op)) + " " + right;
}

std::string to_string(const ConstraintSpec& spec) {
  std::string out;
  for (const Atom& a : spec.atoms) {
    if (!out.empty()) out += "; ";
    if (a.kind == Atom::Kind::Cardinality) {
      out += "|" + to_string(a.lhs) + "| " + (a.cardinality == CardinalityRelation::Equal ? "=" : ">=") + " " +
             std::to_string(a.count);
      continue;
    }
    std::string_view rel;
    switch (a.relation) {
      case Relation::Equal: rel = "="; break;
      case Relation::NotEqual: rel = "!="; break;
      case Relation::Subset: rel = "<="; break;
      case Relation::Superset: rel = ">="; break;
    }
    out += to_string(a.lhs) + " " + std::string(rel) + " " + to_string(a.rhs);
  }
  return out;
}

// --- evaluation ------------------------------------------------------------------

IndexStructure IndexStructure::of(const GraphFamily& fam) {
  IndexStructure s;
  s.all = fam.all();
  if (fam.order()) s.order_ranks = fam.order_ranks();
  s.distinguished = fam.distinguished();
  return s;
}

namespace {

void require_structure(const ConstraintSpec& spec, const IndexStructure& structure) {
  if (spec.needs_distinguished() && !structure.distinguished) {
    throw Error(ErrorKind::MissingStructure, "constraints mention D but no distinguished set is given");
  }
  if (spec.needs_order() && !structure.order_ranks) {
    throw Error(ErrorKind::MissingStructure, "constraints mention downset(minJ) but no order is given");
  }
}

// nullopt when the expression mentions downset(minJ) and J is empty.
std::optional<IndexSet> eval(const SetExpr& e, const JklTriple& t, const IndexStructure& s) {
  switch (e.op) {
    case SetExpr::Op::Symbol:
      switch (e.symbol) {
        case SetSymbol::J: return t.j;
        case SetSymbol::K: return t.k;
        case SetSymbol::L: return t.l;
        case SetSymbol::I: return s.all;
        case SetSymbol::D: return *s.distinguished;
        case SetSymbol::Empty: return IndexSet{};
        case SetSymbol::Downset: {
          if (t.j.empty()) return std::nullopt;
          const auto& rank = *s.order_ranks;
          std::size_t min_rank = rank.size();
          for (std::size_t i : t.j.members()) min_rank = std::min(min_rank, rank[i]);
          IndexSet below;
          for (std::size_t i : s.all.members()) {
            if (rank[i] < min_rank) below.insert(i);
          }
          return below;
        }
      }
      return std::nullopt;
    case SetExpr::Op::Union:
    case SetExpr::Op::Intersection:
    case SetExpr::Op::Difference: {
      const auto a = eval(e.operands[0], t, s);
      const auto b = eval(e.operands[1], t, s);
      if (!a || !b) return std::nullopt;
      if (e.op == SetExpr::Op::Union) return *a | *b;
      if (e.op == SetExpr::Op::Intersection) return *a & *b;
      return *a - *b;
    }
  }
  return std::nullopt;
}

bool holds(const Atom& a, const JklTriple& t, const IndexStructure& s) {
  const auto lhs = eval(a.lhs, t, s);
  if (!lhs) return false;
  if (a.kind == Atom::Kind::Cardinality) {
    return a.cardinality == CardinalityRelation::Equal ? lhs->size() == a.count : lhs->size() >= a.count;
  }
  const auto rhs = eval(a.rhs, t, s);
  if (!rhs) return false;
  switch (a.relation) {
    case Relation::Equal: return *lhs == *rhs;
    case Relation::NotEqual: return *lhs != *rhs;
    case Relation::Subset: return lhs->subset_of(*rhs);
    case Relation::Superset: return rhs->subset_of(*lhs);
  }
  return false;
}

}  // namespace

bool evaluate(const ConstraintSpec& spec, const JklTriple& t, const IndexStructure& structure) {
  require_structure(spec, structure);
  return std::all_of(spec.atoms.begin(), spec.atoms.end(),
                     [&](const Atom& a) { return holds(a, t, structure); });
}

std::optional<JklTriple> constraint_witness(const ConstraintSpec& spec, const ProductVertex& f,
                                            const ProductVertex& g, const GraphFamily& fam,
                                            const SearchBudget& budget) {
  const IndexStructure structure = IndexStructure::of(fam);
  require_structure(spec, structure);

  // Fixed memberships plus the indices (loops at f(i) = g(i)) that may go to J or K.
  JklTriple base;
  std::vector<std::size_t> ambiguous;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const bool edge = fam.factor(i).adjacent(f[i], g[i]);
    const bool equal = f[i] == g[i];
    if (edge && equal) {
      ambiguous.push_back(i);
    } else if (edge) {
      base.j.insert(i);
    } else if (equal) {
      base.k.insert(i);
    } else {
      base.l.insert(i);
    }
  }
  require_within(budget, saturating_pow(2, ambiguous.size()), "constraint witness search");

  const std::uint64_t choices = std::uint64_t{1} << ambiguous.size();
  for (std::uint64_t mask = 0; mask < choices; ++mask) {
    JklTriple t = base;
    for (std::size_t b = 0; b < ambiguous.size(); ++b) {
      if ((mask >> b) & 1U) {
        t.j.insert(ambiguous[b]);
      } else {
        t.k.insert(ambiguous[b]);
      }
    }
    if (t.j.empty()) continue;
    if (std::all_of(spec.atoms.begin(), spec.atoms.end(), [&](const Atom& a) { return holds(a, t, structure); })) {
      return t;
    }
  }
  return std::nullopt;
}

bool constraint_adjacent(const ConstraintSpec& spec, const ProductVertex& f, const ProductVertex& g,
                         const GraphFamily& fam, const SearchBudget& budget) {
  if (f == g) throw Error(ErrorKind::EqualVertices, "adjacency is defined on pairs of distinct vertices");
  return constraint_witness(spec, f, g, fam, budget).has_value();
}

std::string_view standard_constraint_text(BuiltinProduct kind) {
  switch (kind) {
    case BuiltinProduct::Cartesian: return "|J| = 1; K = I \\ J; L = empty";
    case BuiltinProduct::Direct: return "J = I; K = empty; L = empty";
    case BuiltinProduct::Strong: return "J != empty; K = I \\ J; L = empty";
    case BuiltinProduct::Lexicographic: return "J != empty; K >= downset(minJ); L = I \\ (J u K)";
    case BuiltinProduct::DProduct: return "J >= D; K <= I \\ J; L = I \\ (J u K)";
  }
  return "";
}

ConstraintSpec standard_constraints(BuiltinProduct kind) {
  return parse_constraints(standard_constraint_text(kind));
}

}  // namespace gtensor
