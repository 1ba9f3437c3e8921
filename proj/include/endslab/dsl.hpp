#ifndef ENDSLAB_DSL_HPP_
#define ENDSLAB_DSL_HPP_

// A small LL(1) language for groups, actions and generating sets:
//
//   spec     := ( 'rule' '(' IDENT ')' | group [ 'acting' action ] )
//               [ 'with' 'gens' gens ]
//   group    := 'Z' [ '^' INT ] | 'F' '(' INT ')' | 'C' '(' INT ')'
//             | 'Sym' '(' INT ')' | 'wreath' '(' group ',' group ',' top ')'
//   top      := 'translation' | 'regular' | 'trivial' | 'coset' '(' subgroup ')'
//   action   := 'translation' | 'regular' | 'coset' '(' subgroup ')'
//             | 'head' | 'imprimitive' [ '(' subgroup ')' ]
//   subgroup := 'trivial' | 'full' | literal { ',' literal }
//   gens     := 'standard' | 'all' | '{' literal { ',' literal } '}'
//   literal  := int | '(' int { ',' int } ')' | '[' INT { ',' INT } ']' | word
//   word     := LETTER [ '^' int ] { '*' LETTER [ '^' int ] }
//   int      := [ '-' ] INT

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "errors.hpp"
#include "gens.hpp"
#include "group.hpp"
#include "wreath.hpp"

namespace endslab::dsl {

  // Source position, 1-based. Positions never take part in AST equality.
  struct SourcePos {
    int  line   = 1;
    int  column = 1;
    bool operator==(SourcePos const&) const {
      return true;
    }
  };

  class ParseError : public Error {
   public:
    enum class Kind { Lexical, Syntax, Arity };

    ParseError(Kind kind, SourcePos pos, std::string message,
               std::vector<std::string> expected = {});

    Kind kind() const noexcept {
      return _kind;
    }
    int line() const noexcept {
      return _pos.line;
    }
    int column() const noexcept {
      return _pos.column;
    }
    std::vector<std::string> const& expected() const noexcept {
      return _expected;
    }

   private:
    Kind                     _kind;
    SourcePos                _pos;
    std::vector<std::string> _expected;
  };

  // Well-formed input the library cannot build, e.g. a coset action of a free
  // group on a nontrivial subgroup.
  class ElaborationError : public Error {
   public:
    using Error::Error;
  };

  // Value-semantic owning pointer for recursive nodes.
  template <typename T>
  class Box {
   public:
    Box(T v) : _p(std::make_unique<T>(std::move(v))) {}  // NOLINT
    Box(Box const& o) : _p(std::make_unique<T>(*o._p)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(Box const& o) {
      _p = std::make_unique<T>(*o._p);
      return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    T const& operator*() const {
      return *_p;
    }
    T const* operator->() const {
      return _p.get();
    }
    friend bool operator==(Box const& a, Box const& b) {
      return *a._p == *b._p;
    }

   private:
    std::unique_ptr<T> _p;
  };

  struct Literal {
    enum class Kind { Integer, Tuple, Permutation, Word };
    Kind                 kind = Kind::Integer;
    std::vector<int64_t> values;  // Integer (one value), Tuple, Permutation
    std::vector<std::pair<std::string, int64_t>> factors;  // Word: name^exp
    SourcePos            pos;

    bool operator==(Literal const&) const = default;
  };

  struct SubgroupNode {
    enum class Kind { Trivial, Full, Elements };
    Kind                 kind = Kind::Trivial;
    std::vector<Literal> elements;
    SourcePos            pos;

    bool operator==(SubgroupNode const&) const = default;
  };

  struct ActionNode {
    enum class Kind { Translation, Regular, Trivial, Coset, Head, Imprimitive, Rule };
    Kind                        kind = Kind::Translation;
    std::optional<SubgroupNode> subgroup;  // Coset; optional for Imprimitive
    std::string                 rule;      // Rule
    SourcePos                   pos;

    bool operator==(ActionNode const&) const = default;
  };

  struct GroupNode {
    enum class Kind { Lattice, Free, Cyclic, Symmetric, Wreath };
    Kind                     kind  = Kind::Lattice;
    int64_t                  param = 1;  // dimension, rank, order or degree
    std::optional<Box<GroupNode>> base, top;
    std::optional<ActionNode>     top_action;
    SourcePos                pos;

    bool operator==(GroupNode const&) const = default;
  };

  struct GensNode {
    enum class Kind { Standard, All, Explicit };
    Kind                 kind = Kind::Standard;
    std::vector<Literal> elements;
    SourcePos            pos;

    bool operator==(GensNode const&) const = default;
  };

  struct SpecAst {
    std::optional<GroupNode>  group;   // absent for rule(...) specs
    std::optional<ActionNode> action;  // the rule for rule(...) specs
    std::optional<GensNode>   gens;

    bool operator==(SpecAst const&) const = default;
  };

  // Throws ParseError.
  SpecAst parse_spec(std::string const& text);

  // Comma-separated literal list, e.g. "4" or "(2,0), (0,2)".
  std::vector<Literal> parse_literals(std::string const& text);

  // Throws ElaborationError when the literal does not denote an element of g.
  GroupElement to_element(Group const& g, Literal const& l);

  // Canonical text; parse_spec(print(ast)) == ast.
  std::string print(SpecAst const& ast);
  std::string print(GroupNode const& g);
  std::string print(ActionNode const& a);
  std::string print(Literal const& l);

  struct Elaborated {
    Group                              group;
    std::shared_ptr<PointedAction const>   action;
    std::shared_ptr<SymmetricGenSet const> gens;
    std::shared_ptr<WreathGroup const> wreath;  // set for wreath groups
  };

  // Throws ElaborationError and the library errors of the constructors.
  Elaborated elaborate(SpecAst const& ast);

  Elaborated load(std::string const& text);

  // Random well-formed AST for round-trip testing. Nesting depth of wreath
  // products is bounded by max_depth.
  SpecAst random_ast(std::mt19937_64& rng, int max_depth = 2);

}  // namespace endslab::dsl

#endif  // ENDSLAB_DSL_HPP_
