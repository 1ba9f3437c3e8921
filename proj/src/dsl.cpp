#include "endslab/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <sstream>

namespace endslab::dsl {

  namespace {
    std::string describe(SourcePos pos, std::string const& message,
                         std::vector<std::string> const& expected) {
      std::ostringstream os;
      os << "line " << pos.line << ", column " << pos.column << ": " << message;
      if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          os << (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") << expected[i];
        }
        os << ")";
      }
      return os.str();
    }
  }  // namespace

  ParseError::ParseError(Kind kind, SourcePos pos, std::string message,
                         std::vector<std::string> expected)
      : Error(describe(pos, message, expected)),
        _kind(kind),
        _pos(pos),
        _expected(std::move(expected)) {}

  ////////////////////////////////////////////////////////////////////////
  // Lexer
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Token {
      enum class Kind { Ident, Int, Punct, End };
      Kind        kind;
      std::string text;
      int64_t     value = 0;
      SourcePos   pos;
    };

    std::string show(Token const& t) {
      switch (t.kind) {
        case Token::Kind::End: return "end of input";
        case Token::Kind::Int: return "integer " + t.text;
        default: return "'" + t.text + "'";
      }
    }

    std::vector<Token> lex(std::string const& text) {
      std::vector<Token> out;
      SourcePos          pos;
      std::size_t        i = 0;
      auto advance = [&]() {
        if (text[i] == '\n') {
          ++pos.line;
          pos.column = 1;
        } else {
          ++pos.column;
        }
        ++i;
      };
      while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
          advance();
          continue;
        }
        Token t{Token::Kind::Punct, "", 0, pos};
        if (std::isalpha(c) || c == '_') {
          t.kind = Token::Kind::Ident;
          while (i < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            t.text += text[i];
            advance();
          }
        } else if (std::isdigit(c)) {
          t.kind = Token::Kind::Int;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            int d = text[i] - '0';
            if (t.value > (std::numeric_limits<int64_t>::max() - d) / 10) {
              throw ParseError(ParseError::Kind::Lexical, t.pos, "integer literal too large");
            }
            t.value = t.value * 10 + d;
            t.text += text[i];
            advance();
          }
        } else if (std::string_view("()[]{},^*-").find(static_cast<char>(c))
                   != std::string_view::npos) {
          t.text = std::string(1, static_cast<char>(c));
          advance();
        } else {
          throw ParseError(ParseError::Kind::Lexical, pos,
                           std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back(std::move(t));
      }
      out.push_back(Token{Token::Kind::End, "", 0, pos});
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Parser
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::string> quoted(std::initializer_list<char const*> xs) {
      std::vector<std::string> out;
      for (auto x : xs) {
        out.push_back(std::string("'") + x + "'");
      }
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) : _toks(lex(text)) {}

      SpecAst spec() {
        SpecAst ast;
        if (is_ident("rule")) {
          ActionNode a{ActionNode::Kind::Rule, std::nullopt, "", peek().pos};
          next();
          expect('(');
          a.rule = ident("a fixture name");
          expect(')');
          ast.action = std::move(a);
        } else {
          ast.group = group();
          if (is_ident("acting")) {
            next();
            ast.action = action();
          }
        }
        if (is_ident("with")) {
          next();
          expect_ident("gens");
          ast.gens = gens();
        }
        if (peek().kind != Token::Kind::End) {
          std::vector<std::string> exp;
          if (!ast.gens) {
            exp.push_back("'with'");
          }
          if (ast.group && !ast.action) {
            exp.insert(exp.begin(), "'acting'");
          }
          exp.push_back("end of input");
          fail(exp);
        }
        return ast;
      }

      std::vector<Literal> literals() {
        std::vector<Literal> out{literal(false)};
        while (is_punct(',')) {
          next();
          out.push_back(literal(false));
        }
        if (peek().kind != Token::Kind::End) {
          fail({"','", "end of input"});
        }
        return out;
      }

     private:
      Token const& peek() const {
        return _toks[_i];
      }
      Token const& next() {
        return _toks[_i++];
      }
      bool is_ident(std::string_view s) const {
        return peek().kind == Token::Kind::Ident && peek().text == s;
      }
      bool is_punct(char c) const {
        return peek().kind == Token::Kind::Punct && peek().text[0] == c;
      }

      [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(ParseError::Kind::Syntax, peek().pos, "unexpected " + show(peek()),
                         std::move(expected));
      }

      void expect(char c) {
        if (!is_punct(c)) {
          fail({std::string("'") + c + "'"});
        }
        next();
      }
      void expect_ident(std::string_view s) {
        if (!is_ident(s)) {
          fail({"'" + std::string(s) + "'"});
        }
        next();
      }
      std::string ident(std::string const& what) {
        if (peek().kind != Token::Kind::Ident) {
          fail({what});
        }
        return next().text;
      }
      int64_t natural() {
        if (peek().kind != Token::Kind::Int) {
          fail({"an integer"});
        }
        return next().value;
      }
      int64_t integer() {
        bool neg = false;
        if (is_punct('-')) {
          next();
          neg = true;
        }
        if (peek().kind != Token::Kind::Int) {
          fail({"an integer"});
        }
        int64_t v = next().value;
        return neg ? -v : v;
      }

      GroupNode group() {
        GroupNode g;
        g.pos = peek().pos;
        auto arity = [&](int64_t v, int64_t lo, int64_t hi, char const* what) {
          if (v < lo || v > hi) {
            std::string range = hi == std::numeric_limits<int64_t>::max()
                                    ? ">= " + std::to_string(lo)
                                    : "in [" + std::to_string(lo) + ", "
                                          + std::to_string(hi) + "]";
            throw ParseError(ParseError::Kind::Arity, g.pos,
                             std::string(what) + " must be " + range + ", got "
                                 + std::to_string(v));
          }
        };
        auto call = [&](GroupNode::Kind k, int64_t lo, int64_t hi, char const* what) {
          next();
          expect('(');
          g.kind  = k;
          g.param = natural();
          expect(')');
          arity(g.param, lo, hi, what);
        };
        constexpr int64_t unbounded = std::numeric_limits<int64_t>::max();
        if (is_ident("Z")) {
          next();
          g.kind = GroupNode::Kind::Lattice;
          if (is_punct('^')) {
            next();
            g.param = natural();
            arity(g.param, 1, 64, "lattice dimension");
          }
        } else if (is_ident("F")) {
          call(GroupNode::Kind::Free, 1, 26, "free rank");
        } else if (is_ident("C")) {
          call(GroupNode::Kind::Cyclic, 1, unbounded, "cyclic order");
        } else if (is_ident("Sym")) {
          call(GroupNode::Kind::Symmetric, 1, 20, "symmetric degree");
        } else if (is_ident("wreath")) {
          next();
          expect('(');
          g.kind = GroupNode::Kind::Wreath;
          g.base = group();
          expect(',');
          g.top = group();
          expect(',');
          g.top_action = top_action();
          expect(')');
        } else {
          fail(quoted({"Z", "F", "C", "Sym", "wreath", "rule"}));
        }
        return g;
      }

      ActionNode top_action() {
        ActionNode a;
        a.pos = peek().pos;
        if (is_ident("translation")) {
          a.kind = ActionNode::Kind::Translation;
        } else if (is_ident("regular")) {
          a.kind = ActionNode::Kind::Regular;
        } else if (is_ident("trivial")) {
          a.kind = ActionNode::Kind::Trivial;
        } else if (is_ident("coset")) {
          next();
          a.kind = ActionNode::Kind::Coset;
          expect('(');
          a.subgroup = subgroup();
          expect(')');
          return a;
        } else {
          fail(quoted({"translation", "regular", "trivial", "coset"}));
        }
        next();
        return a;
      }

      ActionNode action() {
        ActionNode a;
        a.pos = peek().pos;
        if (is_ident("translation")) {
          a.kind = ActionNode::Kind::Translation;
        } else if (is_ident("regular")) {
          a.kind = ActionNode::Kind::Regular;
        } else if (is_ident("head")) {
          a.kind = ActionNode::Kind::Head;
        } else if (is_ident("coset")) {
          next();
          a.kind = ActionNode::Kind::Coset;
          expect('(');
          a.subgroup = subgroup();
          expect(')');
          return a;
        } else if (is_ident("imprimitive")) {
          next();
          a.kind = ActionNode::Kind::Imprimitive;
          if (is_punct('(')) {
            next();
            a.subgroup = subgroup();
            expect(')');
          }
          return a;
        } else {
          fail(quoted({"translation", "regular", "coset", "head", "imprimitive"}));
        }
        next();
        return a;
      }

      SubgroupNode subgroup() {
        SubgroupNode s;
        s.pos = peek().pos;
        if (is_ident("trivial")) {
          next();
          s.kind = SubgroupNode::Kind::Trivial;
        } else if (is_ident("full")) {
          next();
          s.kind = SubgroupNode::Kind::Full;
        } else {
          s.kind = SubgroupNode::Kind::Elements;
          s.elements.push_back(literal(true));
          while (is_punct(',')) {
            next();
            s.elements.push_back(literal(false));
          }
        }
        return s;
      }

      GensNode gens() {
        GensNode g;
        g.pos = peek().pos;
        if (is_ident("standard")) {
          next();
          g.kind = GensNode::Kind::Standard;
        } else if (is_ident("all")) {
          next();
          g.kind = GensNode::Kind::All;
        } else if (is_punct('{')) {
          next();
          g.kind = GensNode::Kind::Explicit;
          g.elements.push_back(literal(false));
          while (is_punct(',')) {
            next();
            g.elements.push_back(literal(false));
          }
          expect('}');
        } else {
          fail(quoted({"standard", "all", "{"}));
        }
        return g;
      }

      Literal literal(bool allow_keywords) {
        Literal l;
        l.pos = peek().pos;
        if (peek().kind == Token::Kind::Int || is_punct('-')) {
          l.kind = Literal::Kind::Integer;
          l.values.push_back(integer());
        } else if (is_punct('(')) {
          next();
          l.kind = Literal::Kind::Tuple;
          l.values.push_back(integer());
          while (is_punct(',')) {
            next();
            l.values.push_back(integer());
          }
          expect(')');
        } else if (is_punct('[')) {
          next();
          l.kind = Literal::Kind::Permutation;
          l.values.push_back(natural());
          while (is_punct(',')) {
            next();
            l.values.push_back(natural());
          }
          expect(']');
        } else if (peek().kind == Token::Kind::Ident) {
          l.kind = Literal::Kind::Word;
          l.factors.push_back(factor());
          while (is_punct('*')) {
            next();
            l.factors.push_back(factor());
          }
        } else {
          auto exp = quoted({"-", "(", "["});
          exp.insert(exp.begin(), "an integer");
          exp.push_back("a generator letter");
          if (allow_keywords) {
            exp.insert(exp.begin(), {"'trivial'", "'full'"});
          }
          fail(exp);
        }
        return l;
      }

      std::pair<std::string, int64_t> factor() {
        if (peek().kind != Token::Kind::Ident || peek().text.size() != 1
            || !std::islower(static_cast<unsigned char>(peek().text[0]))) {
          fail({"a generator letter"});
        }
        std::string name = next().text;
        int64_t     exp  = 1;
        if (is_punct('^')) {
          next();
          exp = integer();
        }
        return {name, exp};
      }

      std::vector<Token> _toks;
      std::size_t        _i = 0;
    };

    template <typename T, typename F>
    std::string join(std::vector<T> const& xs, F&& f, std::string const& sep = ", ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) {
          out += sep;
        }
        out += f(xs[i]);
      }
      return out;
    }

    std::string print(SubgroupNode const& s) {
      switch (s.kind) {
        case SubgroupNode::Kind::Trivial: return "trivial";
        case SubgroupNode::Kind::Full: return "full";
        case SubgroupNode::Kind::Elements:
          return join(s.elements, [](Literal const& l) { return dsl::print(l); });
      }
      return "";
    }

    std::string print(GensNode const& g) {
      switch (g.kind) {
        case GensNode::Kind::Standard: return "standard";
        case GensNode::Kind::All: return "all";
        case GensNode::Kind::Explicit:
          return "{" + join(g.elements, [](Literal const& l) { return dsl::print(l); }) + "}";
      }
      return "";
    }
  }  // namespace

  SpecAst parse_spec(std::string const& text) {
    return Parser(text).spec();
  }

  std::vector<Literal> parse_literals(std::string const& text) {
    return Parser(text).literals();
  }

  ////////////////////////////////////////////////////////////////////////
  // Printer
  ////////////////////////////////////////////////////////////////////////

  std::string print(Literal const& l) {
    auto num = [](int64_t v) { return std::to_string(v); };
    switch (l.kind) {
      case Literal::Kind::Integer: return num(l.values.at(0));
      case Literal::Kind::Tuple: return "(" + join(l.values, num) + ")";
      case Literal::Kind::Permutation: return "[" + join(l.values, num) + "]";
      case Literal::Kind::Word:
        return join(
            l.factors,
            [](auto const& f) {
              return f.second == 1 ? f.first : f.first + "^" + std::to_string(f.second);
            },
            "*");
    }
    return "";
  }

  std::string print(ActionNode const& a) {
    switch (a.kind) {
      case ActionNode::Kind::Translation: return "translation";
      case ActionNode::Kind::Regular: return "regular";
      case ActionNode::Kind::Trivial: return "trivial";
      case ActionNode::Kind::Head: return "head";
      case ActionNode::Kind::Coset: return "coset(" + print(*a.subgroup) + ")";
      case ActionNode::Kind::Imprimitive:
        return a.subgroup ? "imprimitive(" + print(*a.subgroup) + ")" : "imprimitive";
      case ActionNode::Kind::Rule: return "rule(" + a.rule + ")";
    }
    return "";
  }

  std::string print(GroupNode const& g) {
    switch (g.kind) {
      case GroupNode::Kind::Lattice:
        return g.param == 1 ? "Z" : "Z^" + std::to_string(g.param);
      case GroupNode::Kind::Free: return "F(" + std::to_string(g.param) + ")";
      case GroupNode::Kind::Cyclic: return "C(" + std::to_string(g.param) + ")";
      case GroupNode::Kind::Symmetric: return "Sym(" + std::to_string(g.param) + ")";
      case GroupNode::Kind::Wreath:
        return "wreath(" + print(**g.base) + ", " + print(**g.top) + ", "
               + print(*g.top_action) + ")";
    }
    return "";
  }

  std::string print(SpecAst const& ast) {
    std::string out;
    if (ast.group) {
      out = print(*ast.group);
      if (ast.action) {
        out += " acting " + print(*ast.action);
      }
    } else if (ast.action) {
      out = print(*ast.action);
    }
    if (ast.gens) {
      out += " with gens " + print(*ast.gens);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elaboration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct BuiltGroup {
      Group                              group;
      std::shared_ptr<WreathGroup const> wreath;
    };

    GroupElement element_of(Group const& g, Literal const& l) {
      auto bad = [&]() {
        return ElaborationError("literal " + print(l) + " is not an element of " + g.name());
      };
      switch (g.family()) {
        case Family::Lattice: {
          auto dim = static_cast<std::size_t>(g.parameter());
          if ((l.kind == Literal::Kind::Integer && dim == 1)
              || (l.kind == Literal::Kind::Tuple && l.values.size() == dim)) {
            return make_vector(l.values);
          }
          throw bad();
        }
        case Family::Cyclic:
          if (l.kind != Literal::Kind::Integer) {
            throw bad();
          }
          return make_cyclic(g.parameter(), l.values[0]);
        case Family::Symmetric: {
          if (l.kind != Literal::Kind::Permutation
              || static_cast<int64_t>(l.values.size()) != g.parameter()) {
            throw bad();
          }
          std::vector<uint32_t> images(l.values.begin(), l.values.end());
          std::vector<uint32_t> sorted = images;
          std::sort(sorted.begin(), sorted.end());
          for (uint32_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != i) {
              throw ElaborationError(print(l) + " is not a permutation of 0.."
                                     + std::to_string(sorted.size() - 1));
            }
          }
          return make_permutation(std::move(images));
        }
        case Family::Free: {
          if (l.kind != Literal::Kind::Word) {
            throw bad();
          }
          int                  rank = static_cast<int>(g.parameter());
          std::vector<int32_t> letters;
          for (auto const& [name, exp] : l.factors) {
            int32_t letter = 0;
            for (int32_t k = 1; k <= rank; ++k) {
              if (free_letter_name(rank, k) == name) {
                letter = k;
              }
            }
            if (letter == 0) {
              throw ElaborationError("'" + name + "' is not a generator of " + g.name());
            }
            if (exp < -1000 || exp > 1000) {
              throw ElaborationError("exponent " + std::to_string(exp) + " is out of range");
            }
            for (int64_t e = 0; e < std::abs(exp); ++e) {
              letters.push_back(exp < 0 ? -letter : letter);
            }
          }
          return make_word(rank, std::move(letters));
        }
        case Family::Wreath:
          throw ElaborationError("wreath product elements have no literal syntax");
      }
      throw bad();
    }

    SubgroupSpec subgroup_of(Group const& g, SubgroupNode const& s) {
      switch (s.kind) {
        case SubgroupNode::Kind::Trivial: return subgroup::Trivial{};
        case SubgroupNode::Kind::Full: return subgroup::Full{};
        case SubgroupNode::Kind::Elements: break;
      }
      switch (g.family()) {
        case Family::Lattice: {
          if (g.parameter() == 1 && s.elements.size() == 1
              && s.elements[0].kind == Literal::Kind::Integer) {
            int64_t n = std::abs(s.elements[0].values[0]);
            return n == 0 ? SubgroupSpec{subgroup::Trivial{}}
                          : SubgroupSpec{subgroup::MultiplesOf{n}};
          }
          subgroup::Lattice l;
          for (auto const& e : s.elements) {
            l.basis.push_back(element_of(g, e).as_lattice().coords);
          }
          return l;
        }
        case Family::Cyclic:
        case Family::Symmetric: {
          subgroup::Generated gen;
          for (auto const& e : s.elements) {
            gen.gens.push_back(element_of(g, e));
          }
          return gen;
        }
        case Family::Free:
          throw ElaborationError("coset actions of " + g.name()
                                 + " support only the trivial and full subgroups");
        case Family::Wreath:
          throw ElaborationError("coset actions of wreath products support only the "
                                 "trivial and full subgroups");
      }
      return subgroup::Trivial{};
    }

    PointedAction trivial_action(Group const& g) {
      return PointedAction(
          g, [](GroupElement const&, Point const& x) { return x; }, Point(int64_t{0}),
          g.name() + " acting trivially on a point");
    }

    BuiltGroup build_group(GroupNode const& node) {
      switch (node.kind) {
        case GroupNode::Kind::Lattice:
          return {Group::lattice(static_cast<int>(node.param)), nullptr};
        case GroupNode::Kind::Free: return {Group::free(static_cast<int>(node.param)), nullptr};
        case GroupNode::Kind::Cyclic: return {Group::cyclic(node.param), nullptr};
        case GroupNode::Kind::Symmetric:
          return {Group::symmetric(static_cast<int>(node.param)), nullptr};
        case GroupNode::Kind::Wreath: break;
      }
      auto base = build_group(**node.base);
      auto top  = build_group(**node.top);
      auto const& ta = *node.top_action;
      PointedAction act = [&]() {
        switch (ta.kind) {
          case ActionNode::Kind::Translation:
          case ActionNode::Kind::Regular: return translation_action(top.group);
          case ActionNode::Kind::Trivial: return trivial_action(top.group);
          case ActionNode::Kind::Coset:
            return coset_action(top.group, subgroup_of(top.group, *ta.subgroup));
          default:
            throw ElaborationError("'" + print(ta) + "' cannot serve as the top action");
        }
      }();
      auto rep = act.basepoint();
      auto w   = WreathGroup::create(base.group, top.group, std::move(act), {rep});
      return {w->as_group(), w};
    }

    std::shared_ptr<SymmetricGenSet const> build_gens(Group const&                   g,
                                                      std::optional<GensNode> const& node) {
      if (!node || node->kind == GensNode::Kind::Standard) {
        return std::make_shared<SymmetricGenSet const>(standard_gens(g));
      }
      if (node->kind == GensNode::Kind::All) {
        if (g.family() != Family::Cyclic && g.family() != Family::Symmetric) {
          throw ElaborationError("'all' generators need a cyclic or symmetric group, not "
                                 + g.name());
        }
        return std::make_shared<SymmetricGenSet const>(all_nonidentity_gens(g));
      }
      std::vector<GroupElement> elems;
      for (auto const& l : node->elements) {
        elems.push_back(element_of(g, l));
      }
      return std::make_shared<SymmetricGenSet const>(
          SymmetricGenSet::close(g, std::move(elems), true));
    }
  }  // namespace

  Elaborated elaborate(SpecAst const& ast) {
    if (!ast.group) {
      if (!ast.action || ast.action->kind != ActionNode::Kind::Rule) {
        throw ElaborationError("a spec needs a group or a rule(...) fixture");
      }
      auto action = std::make_shared<PointedAction const>(rule_action(ast.action->rule));
      auto gens   = build_gens(action->group(), ast.gens);
      return {action->group(), action, gens, nullptr};
    }

    auto built = build_group(*ast.group);
    auto const& g = built.group;
    auto gens     = build_gens(g, ast.gens);

    auto need_wreath = [&](char const* what) {
      if (!built.wreath) {
        throw ElaborationError(std::string("'") + what + "' needs a wreath product, not "
                               + g.name());
      }
    };

    auto make_action = [&]() -> PointedAction {
      if (!ast.action) {
        return translation_action(g);
      }
      auto const& a = *ast.action;
      switch (a.kind) {
        case ActionNode::Kind::Translation:
        case ActionNode::Kind::Regular: return translation_action(g);
        case ActionNode::Kind::Coset: return coset_action(g, subgroup_of(g, *a.subgroup));
        case ActionNode::Kind::Head:
          need_wreath("head");
          return head_projection_action(built.wreath);
        case ActionNode::Kind::Imprimitive: {
          need_wreath("imprimitive");
          auto const& rep = built.wreath->orbit_reps().front();
          if (!a.subgroup) {
            return imprimitive_action(built.wreath, rep);
          }
          return imprimitive_coset_action(
              built.wreath, subgroup_of(built.wreath->base(), *a.subgroup), rep);
        }
        case ActionNode::Kind::Trivial: return trivial_action(g);
        case ActionNode::Kind::Rule:
          throw ElaborationError("rule(...) fixtures stand alone and take no group");
      }
      throw ElaborationError("unknown action");
    };

    auto action = std::make_shared<PointedAction const>(make_action());
    return {g, action, gens, built.wreath};
  }

  GroupElement to_element(Group const& g, Literal const& l) {
    return element_of(g, l);
  }

  Elaborated load(std::string const& text) {
    return elaborate(parse_spec(text));
  }

  ////////////////////////////////////////////////////////////////////////
  // Random ASTs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int64_t pick(std::mt19937_64& rng, int64_t lo, int64_t hi) {
      return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
    }

    Literal random_literal(std::mt19937_64& rng) {
      Literal l;
      l.kind = static_cast<Literal::Kind>(pick(rng, 0, 3));
      switch (l.kind) {
        case Literal::Kind::Integer: l.values = {pick(rng, -50, 50)}; break;
        case Literal::Kind::Tuple:
          for (int64_t i = pick(rng, 1, 3); i > 0; --i) {
            l.values.push_back(pick(rng, -9, 9));
          }
          break;
        case Literal::Kind::Permutation:
          for (int64_t i = pick(rng, 1, 5); i > 0; --i) {
            l.values.push_back(pick(rng, 0, 6));
          }
          break;
        case Literal::Kind::Word:
          for (int64_t i = pick(rng, 1, 3); i > 0; --i) {
            std::string name(1, "xyzab"[pick(rng, 0, 4)]);
            l.factors.emplace_back(name, pick(rng, -3, 3));
          }
          break;
      }
      return l;
    }

    SubgroupNode random_subgroup(std::mt19937_64& rng) {
      SubgroupNode s;
      s.kind = static_cast<SubgroupNode::Kind>(pick(rng, 0, 2));
      if (s.kind == SubgroupNode::Kind::Elements) {
        for (int64_t i = pick(rng, 1, 3); i > 0; --i) {
          s.elements.push_back(random_literal(rng));
        }
      }
      return s;
    }

    GroupNode random_group(std::mt19937_64& rng, int depth) {
      GroupNode g;
      g.kind = static_cast<GroupNode::Kind>(pick(rng, 0, depth > 0 ? 4 : 3));
      switch (g.kind) {
        case GroupNode::Kind::Lattice: g.param = pick(rng, 1, 4); break;
        case GroupNode::Kind::Free: g.param = pick(rng, 1, 26); break;
        case GroupNode::Kind::Cyclic: g.param = pick(rng, 1, 1000); break;
        case GroupNode::Kind::Symmetric: g.param = pick(rng, 1, 20); break;
        case GroupNode::Kind::Wreath: {
          g.base = random_group(rng, depth - 1);
          g.top  = random_group(rng, depth - 1);
          ActionNode a;
          a.kind = std::array{ActionNode::Kind::Translation, ActionNode::Kind::Regular,
                              ActionNode::Kind::Trivial,
                              ActionNode::Kind::Coset}[pick(rng, 0, 3)];
          if (a.kind == ActionNode::Kind::Coset) {
            a.subgroup = random_subgroup(rng);
          }
          g.top_action = std::move(a);
          break;
        }
      }
      return g;
    }
  }  // namespace

  SpecAst random_ast(std::mt19937_64& rng, int max_depth) {
    SpecAst ast;
    if (pick(rng, 0, 9) == 0) {
      ActionNode a;
      a.kind = ActionNode::Kind::Rule;
      a.rule = pick(rng, 0, 1) ? "f2_four_ends" : "fixture_" + std::to_string(pick(rng, 0, 99));
      ast.action = std::move(a);
    } else {
      ast.group = random_group(rng, max_depth);
      if (pick(rng, 0, 1)) {
        ActionNode a;
        a.kind = std::array{ActionNode::Kind::Translation, ActionNode::Kind::Regular,
                            ActionNode::Kind::Coset, ActionNode::Kind::Head,
                            ActionNode::Kind::Imprimitive}[pick(rng, 0, 4)];
        if (a.kind == ActionNode::Kind::Coset
            || (a.kind == ActionNode::Kind::Imprimitive && pick(rng, 0, 1))) {
          a.subgroup = random_subgroup(rng);
        }
        ast.action = std::move(a);
      }
    }
    if (pick(rng, 0, 1)) {
      GensNode g;
      g.kind = static_cast<GensNode::Kind>(pick(rng, 0, 2));
      if (g.kind == GensNode::Kind::Explicit) {
        for (int64_t i = pick(rng, 1, 4); i > 0; --i) {
          g.elements.push_back(random_literal(rng));
        }
      }
      ast.gens = std::move(g);
    }
    return ast;
  }

}  // namespace endslab::dsl
