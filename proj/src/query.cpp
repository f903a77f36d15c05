#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gts/cli.hpp"

namespace gts {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

// ---- lexer ----

enum class Tok { Ident, Number, LParen, RParen, Comma, Equals, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t l, std::size_t c, const std::string& m) : std::runtime_error(m), line(l), column(c) {}
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::string s, std::size_t c) { out.push_back(Token{k, std::move(s), line, c}); };
  while (i < text.size()) {
    char c = text[i];
    std::size_t start_col = col;
    if (c == '\n') {
      push(Tok::Newline, "\\n", start_col);
      ++i, ++line, col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i, ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t j = i;
    if (ident_start(c)) {
      // Line names such as standard/lom keep their slash.
      while (j < text.size() && (ident_char(text[j]) || (text[j] == '/' && j + 1 < text.size() && ident_start(text[j + 1]))))
        ++j;
      push(Tok::Ident, std::string(text.substr(i, j - i)), start_col);
    } else if (digit(c) || ((c == '-' || c == '+') && j + 1 < text.size() && (digit(text[j + 1]) || text[j + 1] == 'i'))) {
      ++j;
      if (text[j] == 'i') {
        if (text.substr(j, 3) != "inf") throw SyntaxError(line, start_col, "malformed number");
        j += 3;
      } else {
        while (j < text.size() && digit(text[j])) ++j;
        if (j < text.size() && text[j] == '/') {
          ++j;
          if (j >= text.size() || !digit(text[j])) throw SyntaxError(line, start_col, "malformed rational");
          while (j < text.size() && digit(text[j])) ++j;
        }
        if (j < text.size() && text[j] == '.') throw SyntaxError(line, start_col, "decimal literals are not allowed");
      }
      push(Tok::Number, std::string(text.substr(i, j - i)), start_col);
    } else {
      ++j;
      switch (c) {
        case '(': push(Tok::LParen, "(", start_col); break;
        case ')': push(Tok::RParen, ")", start_col); break;
        case ',': push(Tok::Comma, ",", start_col); break;
        case '=': push(Tok::Equals, "=", start_col); break;
        default: throw SyntaxError(line, start_col, std::string("unexpected character '") + c + "'");
      }
    }
    col += j - i;
    i = j;
  }
  push(Tok::End, "end of input", col);
  return out;
}

// ---- query signatures ----

// A slot is either a literal keyword or a value of some kind.
struct Slot {
  std::string_view keyword;
  ValueKind kind = ValueKind::Set;
};

Slot kw(std::string_view k) { return Slot{k, ValueKind::Set}; }
Slot val(ValueKind k) { return Slot{{}, k}; }

struct QuerySignature {
  QueryKind kind;
  std::string_view name;
  std::vector<Slot> slots;
};

const std::vector<QuerySignature>& signatures() {
  using K = ValueKind;
  static const std::vector<QuerySignature> table{
      {QueryKind::Boundedness, "boundedness", {val(K::Set)}},
      {QueryKind::Contains, "contains", {val(K::Set), kw("at"), val(K::Number)}},
      {QueryKind::Closure, "closure", {val(K::Set), kw("in"), val(K::Topology)}},
      {QueryKind::Interior, "interior", {val(K::Set), kw("in"), val(K::Topology)}},
      {QueryKind::Open, "open", {val(K::Set), kw("in"), val(K::Topology)}},
      {QueryKind::Distance, "distance", {val(K::Metric), kw("from"), val(K::Number), kw("to"), val(K::Number)}},
      {QueryKind::Ball, "ball", {val(K::Metric), kw("at"), val(K::Number), kw("radius"), val(K::Number)}},
      {QueryKind::Nbhd, "nbhd", {val(K::Metric), kw("of"), val(K::Set), kw("radius"), val(K::Number)}},
      {QueryKind::Bounded, "bounded", {val(K::Metric), val(K::Set)}},
      {QueryKind::EssFinite, "ess_finite", {val(K::Family), kw("on"), val(K::Set)}},
      {QueryKind::Cov, "cov", {val(K::Line), val(K::Family)}},
      {QueryKind::Op, "op", {val(K::Line), val(K::Set)}},
      {QueryKind::Sm, "sm", {val(K::Line), val(K::Set)}},
      {QueryKind::Cb, "cb", {val(K::Line), val(K::Set)}},
      {QueryKind::Acb, "acb", {val(K::Line), val(K::Set)}},
      {QueryKind::Born, "born", {val(K::Bornology), val(K::Set)}},
      {QueryKind::Pt, "pt", {val(K::Line)}},
      {QueryKind::Chain, "chain", {val(K::Metric), val(K::Schema), kw("delta"), val(K::Number)}},
      {QueryKind::ChainSearch, "chain_search", {val(K::Metric), val(K::Schema)}},
      {QueryKind::ChainUniform, "chain_uniform", {val(K::Metric), val(K::Schema)}},
      {QueryKind::Proper, "proper", {val(K::Bornology), val(K::Topology), val(K::Topology)}},
      {QueryKind::BaseOpen, "base_open", {val(K::Bornology), val(K::Topology)}},
      {QueryKind::Verdict, "verdict", {val(K::Line), val(K::Bornology), val(K::Metric)}},
      {QueryKind::Uniform, "uniform", {val(K::Line), val(K::Bornology), val(K::Metric)}},
      {QueryKind::Axioms, "axioms", {val(K::Line)}},
      {QueryKind::Oracle,
       "oracle",
       {val(K::Family), kw("on"), val(K::Set), kw("window"), val(K::Number), val(K::Number)}},
  };
  return table;
}

const QuerySignature& signature(QueryKind k) {
  for (const auto& s : signatures())
    if (s.kind == k) return s;
  throw std::logic_error("query kind without signature");
}

const std::map<std::string_view, ValueKind>& declaration_keywords() {
  static const std::map<std::string_view, ValueKind> m{
      {"set", ValueKind::Set},           {"family", ValueKind::Family}, {"metric", ValueKind::Metric},
      {"bornology", ValueKind::Bornology}, {"schema", ValueKind::Schema}, {"line", ValueKind::Line},
      {"number", ValueKind::Number},     {"topology", ValueKind::Topology},
  };
  return m;
}

std::string_view declaration_keyword(ValueKind k) {
  for (const auto& [name, kind] : declaration_keywords())
    if (kind == k) return name;
  return "?";
}

// ---- parser ----

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  QueryDoc document() {
    QueryDoc doc;
    skip_newlines();
    if (peek_ident("gtsq")) {
      next();
      Token v = expect(Tok::Number, "schema version");
      if (v.text != std::to_string(kQuerySchemaVersion))
        throw SyntaxError(v.line, v.column, "unsupported document version " + v.text);
      end_statement();
    }
    while (skip_newlines(), peek().kind != Tok::End) {
      Token head = expect(Tok::Ident, "a statement");
      if (head.text == "query") {
        doc.queries.push_back(query(head.line));
      } else if (auto it = declaration_keywords().find(head.text); it != declaration_keywords().end()) {
        Token name = expect(Tok::Ident, "a declaration name");
        if (names_.count(name.text)) throw SyntaxError(name.line, name.column, "duplicate declaration '" + name.text + "'");
        if (declaration_keywords().count(name.text) || name.text == "query")
          throw SyntaxError(name.line, name.column, "reserved word '" + name.text + "'");
        expect(Tok::Equals, "'='");
        Value v = value(it->second);
        names_.emplace(name.text, v);
        doc.declarations.push_back(Declaration{it->second, name.text, std::move(v)});
      } else {
        throw SyntaxError(head.line, head.column, "unknown statement '" + head.text + "'");
      }
      end_statement();
    }
    return doc;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::map<std::string, Value> names_;

  const Token& peek() {
    // Newlines inside parentheses are whitespace.
    while (depth_ > 0 && toks_[pos_].kind == Tok::Newline) ++pos_;
    return toks_[pos_];
  }
  bool peek_ident(std::string_view s) { return peek().kind == Tok::Ident && peek().text == s; }
  Token next() {
    Token t = peek();
    if (t.kind != Tok::End) ++pos_;
    if (t.kind == Tok::LParen) ++depth_;
    if (t.kind == Tok::RParen) --depth_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw SyntaxError(t.line, t.column, msg); }
  Token expect(Tok k, std::string_view what) {
    if (peek().kind != k) fail(peek(), "expected " + std::string(what) + ", found '" + peek().text + "'");
    return next();
  }
  void expect_keyword(std::string_view k) {
    if (!peek_ident(k)) fail(peek(), "expected '" + std::string(k) + "', found '" + peek().text + "'");
    next();
  }
  void skip_newlines() {
    while (toks_[pos_].kind == Tok::Newline) ++pos_;
  }
  void end_statement() {
    if (peek().kind != Tok::Newline && peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
  }

  Query query(std::size_t line) {
    Token name = expect(Tok::Ident, "a query kind");
    auto kind = parse_query_kind(name.text);
    if (!kind) fail(name, "unknown query '" + name.text + "'");
    Query q{*kind, {}, line};
    for (const auto& slot : signature(*kind).slots) {
      if (!slot.keyword.empty()) {
        expect_keyword(slot.keyword);
        continue;
      }
      q.args.push_back(operand(slot.kind));
    }
    return q;
  }

  Operand operand(ValueKind k) {
    const Token& t = peek();
    if (t.kind == Tok::Ident && names_.count(t.text) && toks_[pos_ + 1].kind != Tok::LParen) {
      Token n = next();
      return Operand{n.text, resolve(n, k)};
    }
    return Operand{{}, value(k)};
  }

  Value resolve(const Token& n, ValueKind k) {
    const Value& v = names_.at(n.text);
    if (kind_of(v) != k)
      fail(n, "'" + n.text + "' is a " + std::string(to_string(kind_of(v))) + ", expected a " +
                  std::string(to_string(k)));
    return v;
  }

  // Declared name of the wanted kind, if the next token is one.
  std::optional<Value> reference(ValueKind k) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || !names_.count(t.text)) return std::nullopt;
    Token n = next();
    return resolve(n, k);
  }

  Value value(ValueKind k) {
    switch (k) {
      case ValueKind::Set: return set();
      case ValueKind::Family: return family();
      case ValueKind::Metric: return metric_expr();
      case ValueKind::Bornology: return bornology();
      case ValueKind::Schema: return schema();
      case ValueKind::Line: return line_expr();
      case ValueKind::Number: return number();
      case ValueKind::Topology: return topology();
    }
    fail(peek(), "unknown value kind");
  }

  Rational number() {
    if (auto v = reference(ValueKind::Number)) return std::get<Rational>(*v);
    Token t = expect(Tok::Number, "a rational");
    if (t.text.find("inf") != std::string::npos) fail(t, "expected a finite rational");
    return parse_rational(t.text[0] == '+' ? std::string_view(t.text).substr(1) : std::string_view(t.text));
  }

  ExtRat ext() {
    if (peek_ident("inf")) {
      next();
      return ExtRat::pos_inf();
    }
    Token t = expect(Tok::Number, "a rational or infinity");
    if (t.text == "-inf") return ExtRat::neg_inf();
    if (t.text == "+inf") return ExtRat::pos_inf();
    return parse_rational(t.text[0] == '+' ? std::string_view(t.text).substr(1) : std::string_view(t.text));
  }

  long integer() {
    Token t = expect(Tok::Number, "an integer");
    if (t.text.find('/') != std::string::npos || t.text.find("inf") != std::string::npos) fail(t, "expected an integer");
    return std::stol(t.text);
  }

  bool closedness() {
    if (peek_ident("closed")) return next(), true;
    if (peek_ident("open")) return next(), false;
    fail(peek(), "expected 'closed' or 'open'");
  }

  template <class F>
  void list(F&& item) {
    expect(Tok::LParen, "'('");
    if (peek().kind != Tok::RParen) {
      item();
      while (peek().kind == Tok::Comma) next(), item();
    }
    expect(Tok::RParen, "')'");
  }

  template <class F>
  auto guarded(const Token& at, F&& build) {
    try {
      return build();
    } catch (const ConstructionError& e) {
      fail(at, e.what());
    }
  }

  RealSet set() {
    if (auto v = reference(ValueKind::Set)) return std::get<RealSet>(*v);
    Token head = expect(Tok::Ident, "a set expression");
    const std::string& h = head.text;
    if (h == "empty") return RealSet::empty();
    if (h == "reals") return RealSet::reals();
    if (h == "interval") {
      expect(Tok::LParen, "'('");
      bool lc = closedness();
      ExtRat lo = ext();
      expect(Tok::Comma, "','");
      bool hc = closedness();
      ExtRat hi = ext();
      expect(Tok::RParen, "')'");
      return guarded(head, [&] { return RealSet::of(Interval::make(lo, lc, hi, hc)); });
    }
    if (h == "point") {
      if (peek().kind != Tok::LParen) return RealSet::point(number());
      expect(Tok::LParen, "'('");
      Rational x = number();
      expect(Tok::RParen, "')'");
      return RealSet::point(x);
    }
    if (h == "points") {
      std::vector<Rational> xs;
      list([&] { xs.push_back(number()); });
      return RealSet::points(xs);
    }
    if (h == "union" || h == "intersect") {
      std::vector<RealSet> parts;
      list([&] { parts.push_back(set()); });
      if (parts.empty()) return h == "union" ? RealSet::empty() : RealSet::reals();
      RealSet acc = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) acc = h == "union" ? unite(acc, parts[i]) : intersect(acc, parts[i]);
      return acc;
    }
    if (h == "difference") {
      expect(Tok::LParen, "'('");
      RealSet a = set();
      expect(Tok::Comma, "','");
      RealSet b = set();
      expect(Tok::RParen, "')'");
      return difference(a, b);
    }
    if (h == "complement") {
      expect(Tok::LParen, "'('");
      RealSet a = set();
      expect(Tok::RParen, "')'");
      return complement(a);
    }
    if (h == "shift") {
      expect(Tok::LParen, "'('");
      RealSet a = set();
      expect(Tok::Comma, "','");
      Rational by = number();
      expect(Tok::RParen, "')'");
      return shift(a, by);
    }
    if (h == "tail_left" || h == "tail_right") {
      expect(Tok::LParen, "'('");
      RealSet pattern = set();
      expect(Tok::Comma, "','");
      Rational period = number();
      expect(Tok::Comma, "','");
      Rational cut = number();
      expect(Tok::RParen, "')'");
      if (pattern.has_tails() || !boundedness(pattern).bounded) fail(head, "a tail pattern must be bounded");
      PeriodicTail t{pattern.core(), period, cut};
      return guarded(head, [&] {
        return h == "tail_left" ? RealSet::normalize({}, t, std::nullopt) : RealSet::normalize({}, std::nullopt, t);
      });
    }
    fail(head, names_.count(h) ? "'" + h + "' is not a set" : "unknown identifier '" + h + "'");
  }

  IndexRange range() {
    Token t = expect(Tok::Ident, "an index range");
    if (t.text == "all") return IndexRange::all();
    if (t.text == "from") return IndexRange::from(integer());
    if (t.text == "upto") return IndexRange::upto(integer());
    if (t.text == "between") {
      long a = integer();
      long b = integer();
      return IndexRange::between(a, b);
    }
    fail(t, "expected all, from, upto or between");
  }

  FamilySpec family() {
    if (auto v = reference(ValueKind::Family)) return std::get<FamilySpec>(*v);
    Token head = expect(Tok::Ident, "a family expression");
    const std::string& h = head.text;
    if (h == "finite") {
      std::vector<RealSet> members;
      list([&] { members.push_back(set()); });
      return FamilySpec::finite(std::move(members));
    }
    if (h == "union") {
      std::vector<FamilySpec> parts;
      list([&] { parts.push_back(family()); });
      return FamilySpec::union_of_families(std::move(parts));
    }
    expect(Tok::LParen, "'('");
    FamilySpec out;
    if (h == "periodic") {
      RealSet seed = set();
      expect(Tok::Comma, "','");
      Rational period = number();
      IndexRange r = IndexRange::all();
      if (peek().kind == Tok::Comma) next(), r = range();
      out = guarded(head, [&] { return FamilySpec::periodic(seed, period, r); });
    } else if (h == "split") {
      Rational cut = number();
      expect(Tok::Comma, "','");
      FamilySpec left = family();
      expect(Tok::Comma, "','");
      FamilySpec right = family();
      out = FamilySpec::split(cut, std::move(left), std::move(right));
    } else if (h == "restricted") {
      FamilySpec base = family();
      expect(Tok::Comma, "','");
      out = FamilySpec::restricted(std::move(base), set());
    } else if (h == "ladder_below" || h == "ladder_above") {
      ExtRat limit = ext();
      Rational scale(1);
      bool closed_end = false;
      if (peek().kind == Tok::Comma) {
        next();
        scale = number();
        if (peek().kind == Tok::Comma) next(), closed_end = closedness();
      }
      out = guarded(head, [&] {
        return h == "ladder_below" ? FamilySpec::ladder_below(limit, scale, closed_end)
                                   : FamilySpec::ladder_above(limit, scale, closed_end);
      });
    } else {
      fail(head, names_.count(h) ? "'" + h + "' is not a family" : "unknown identifier '" + h + "'");
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  QuasiMetric metric_expr() {
    if (auto v = reference(ValueKind::Metric)) return std::get<QuasiMetric>(*v);
    Token head = expect(Tok::Ident, "a metric");
    if (head.text == "conj" || head.text == "float_paper") {
      expect(Tok::LParen, "'('");
      QuasiMetric inner = metric_expr();
      expect(Tok::RParen, "')'");
      if (head.text == "conj") return conjugate(inner);
      inner.phi_mode = PhiMode::FloatPaper;
      return inner;
    }
    if (auto n = parse_metric_name(head.text)) return metric(*n);
    fail(head, "unknown identifier '" + head.text + "'");
  }

  LineId line_expr() {
    if (auto v = reference(ValueKind::Line)) return std::get<LineId>(*v);
    Token t = expect(Tok::Ident, "a line");
    if (auto id = parse_line(t.text)) return *id;
    fail(t, "unknown identifier '" + t.text + "'");
  }

  TopologyKind topology() {
    if (auto v = reference(ValueKind::Topology)) return std::get<TopologyKind>(*v);
    Token t = expect(Tok::Ident, "a topology");
    if (auto k = parse_topology(t.text)) return *k;
    fail(t, "unknown identifier '" + t.text + "'");
  }

  Bornology bornology() {
    if (auto v = reference(ValueKind::Bornology)) return std::get<Bornology>(*v);
    Token head = expect(Tok::Ident, "a bornology");
    const std::string& h = head.text;
    if (h == "FB") return Bornology::fb();
    if (h == "ALL") return Bornology::all();
    if (h == "CB_nat") return Bornology::nat_bounded();
    if (h == "UB") return Bornology::ub();
    if (h == "LB") return Bornology::lb();
    expect(Tok::LParen, "'('");
    Bornology out;
    if (h == "B") {
      out = Bornology::metric_bounded(metric_expr());
    } else if (h == "schema") {
      out = Bornology::custom(schema());
    } else if (h == "Sm" || h == "CB" || h == "ACB") {
      LineBornKind k = h == "Sm" ? LineBornKind::Sm : h == "CB" ? LineBornKind::CB : LineBornKind::ACB;
      out = Bornology::of_line(line_expr(), k);
    } else {
      fail(head, "unknown identifier '" + h + "'");
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  AffineEnd affine_end() {
    if (!peek_ident("affine")) return AffineEnd{ext(), Rational(0)};
    next();
    expect(Tok::LParen, "'('");
    ExtRat alpha = ext();
    expect(Tok::Comma, "','");
    Rational beta = number();
    expect(Tok::RParen, "')'");
    return AffineEnd{alpha, beta};
  }

  BaseSchema schema() {
    if (auto v = reference(ValueKind::Schema)) return std::get<BaseSchema>(*v);
    Token head = expect(Tok::Ident, "a base schema");
    if (head.text == "grid") return BaseSchema::integer_grid();
    if (head.text != "intervals") fail(head, "unknown identifier '" + head.text + "'");
    expect(Tok::LParen, "'('");
    long start = integer();
    std::vector<SchemaInterval> parts;
    while (peek().kind == Tok::Comma) {
      next();
      expect_keyword("piece");
      expect(Tok::LParen, "'('");
      SchemaInterval p;
      p.lo_closed = closedness();
      p.lo = affine_end();
      expect(Tok::Comma, "','");
      p.hi_closed = closedness();
      p.hi = affine_end();
      expect(Tok::RParen, "')'");
      parts.push_back(p);
    }
    expect(Tok::RParen, "')'");
    return guarded(head, [&] { return BaseSchema::intervals(std::move(parts), start); });
  }
};

// ---- printer ----

std::string ext_text(const ExtRat& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return to_string(x.value());
}

std::string interval_text(const Interval& i) {
  if (i.is_point()) return "point " + to_string(i.lo.value());
  return std::string("interval(") + (i.lo_closed ? "closed " : "open ") + ext_text(i.lo) + ", " +
         (i.hi_closed ? "closed " : "open ") + ext_text(i.hi) + ")";
}

std::string intervals_text(const std::vector<Interval>& is) {
  if (is.empty()) return "empty";
  if (is.size() == 1) return interval_text(is[0]);
  std::string s = "union(";
  for (std::size_t i = 0; i < is.size(); ++i) s += (i ? ", " : "") + interval_text(is[i]);
  return s + ")";
}

std::string set_text(const RealSet& a) {
  if (a == RealSet::reals()) return "reals";
  std::vector<std::string> parts;
  auto tail = [](const PeriodicTail& t, bool left) {
    return std::string(left ? "tail_left(" : "tail_right(") + intervals_text(t.pattern) + ", " + to_string(t.period) +
           ", " + to_string(t.cut) + ")";
  };
  if (auto t = a.left_tail()) parts.push_back(tail(*t, true));
  for (const auto& i : a.core()) parts.push_back(interval_text(i));
  if (auto t = a.right_tail()) parts.push_back(tail(*t, false));
  if (parts.empty()) return "empty";
  if (parts.size() == 1) return parts[0];
  std::string s = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

std::string range_text(const IndexRange& r) {
  switch (r.kind) {
    case IndexRange::Kind::All: return "all";
    case IndexRange::Kind::From: return "from " + std::to_string(r.first);
    case IndexRange::Kind::Upto: return "upto " + std::to_string(r.last);
    case IndexRange::Kind::Finite: return "between " + std::to_string(r.first) + " " + std::to_string(r.last);
  }
  return "all";
}

std::string family_text(const FamilySpec& f) {
  return std::visit(
      Overload{
          [](const FiniteFamily& x) {
            std::string s = "finite(";
            for (std::size_t i = 0; i < x.members.size(); ++i) s += (i ? ", " : "") + set_text(x.members[i]);
            return s + ")";
          },
          [](const PeriodicFamily& x) {
            return "periodic(" + set_text(x.seed) + ", " + to_string(x.period) + ", " + range_text(x.range) + ")";
          },
          [](const SplitFamily& x) {
            return "split(" + to_string(x.cut) + ", " + family_text(*x.left) + ", " + family_text(*x.right) + ")";
          },
          [](const RestrictedFamily& x) {
            return "restricted(" + family_text(*x.base) + ", " + set_text(x.window) + ")";
          },
          [](const LadderFamily& x) {
            return std::string(x.direction == LadderFamily::Direction::Below ? "ladder_below(" : "ladder_above(") +
                   ext_text(x.limit) + ", " + to_string(x.scale) + (x.closed_end ? ", closed)" : ", open)");
          },
          [](const UnionFamily& x) {
            std::string s = "union(";
            for (std::size_t i = 0; i < x.parts.size(); ++i) s += (i ? ", " : "") + family_text(x.parts[i]);
            return s + ")";
          },
      },
      f.node);
}

std::string metric_text(const QuasiMetric& d) {
  std::string s(to_string(d.name));
  if (d.phi_mode == PhiMode::FloatPaper) s = "float_paper(" + s + ")";
  return d.conjugated ? "conj(" + s + ")" : s;
}

std::string affine_text(const AffineEnd& e) {
  if (e.beta == 0) return ext_text(e.alpha);
  return "affine(" + ext_text(e.alpha) + ", " + to_string(e.beta) + ")";
}

std::string schema_text(const BaseSchema& s) {
  if (s.kind == BaseSchema::Kind::IntegerGrid) return "grid";
  std::string out = "intervals(" + std::to_string(s.start);
  for (const auto& p : s.parts)
    out += std::string(", piece(") + (p.lo_closed ? "closed " : "open ") + affine_text(p.lo) + ", " +
           (p.hi_closed ? "closed " : "open ") + affine_text(p.hi) + ")";
  return out + ")";
}

std::string bornology_text(const Bornology& b) {
  switch (b.kind) {
    case Bornology::Kind::MetricBounded: return "B(" + metric_text(*b.metric) + ")";
    case Bornology::Kind::Custom: return "schema(" + schema_text(*b.schema) + ")";
    case Bornology::Kind::OfLine: return std::string(to_string(b.which)) + "(" + to_string(b.line) + ")";
    default: return to_string(b);
  }
}

}  // namespace

std::string_view to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Set: return "set";
    case ValueKind::Family: return "family";
    case ValueKind::Metric: return "metric";
    case ValueKind::Bornology: return "bornology";
    case ValueKind::Schema: return "schema";
    case ValueKind::Line: return "line";
    case ValueKind::Number: return "number";
    case ValueKind::Topology: return "topology";
  }
  return "?";
}

ValueKind kind_of(const Value& v) { return static_cast<ValueKind>(v.index()); }

std::string_view to_string(QueryKind k) { return signature(k).name; }

std::optional<QueryKind> parse_query_kind(std::string_view s) {
  for (const auto& sig : signatures())
    if (sig.name == s) return sig.kind;
  return std::nullopt;
}

const std::vector<QueryKind>& all_query_kinds() {
  static const std::vector<QueryKind> kinds = [] {
    std::vector<QueryKind> out;
    for (const auto& sig : signatures()) out.push_back(sig.kind);
    return out;
  }();
  return kinds;
}

std::vector<ValueKind> query_operands(QueryKind k) {
  std::vector<ValueKind> out;
  for (const auto& slot : signature(k).slots)
    if (slot.keyword.empty()) out.push_back(slot.kind);
  return out;
}

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

ParseResult parse_query_doc(std::string_view text) {
  try {
    Parser p(lex(text));
    return ParseResult{p.document(), std::nullopt};
  } catch (const SyntaxError& e) {
    return ParseResult{std::nullopt, Diagnostic{e.line, e.column, e.what()}};
  }
}

std::string print_value(const Value& v) {
  return std::visit(Overload{
                        [](const RealSet& s) { return set_text(s); },
                        [](const FamilySpec& f) { return family_text(f); },
                        [](const QuasiMetric& d) { return metric_text(d); },
                        [](const Bornology& b) { return bornology_text(b); },
                        [](const BaseSchema& s) { return schema_text(s); },
                        [](const LineId& id) { return to_string(id); },
                        [](const Rational& q) { return to_string(q); },
                        [](const TopologyKind& t) { return std::string(to_string(t)); },
                    },
                    v);
}

std::string print_query_doc(const QueryDoc& doc) {
  std::ostringstream out;
  out << "gtsq " << doc.version << "\n";
  for (const auto& d : doc.declarations)
    out << declaration_keyword(d.kind) << " " << d.name << " = " << print_value(d.value) << "\n";
  for (const auto& q : doc.queries) {
    out << "query " << to_string(q.kind);
    std::size_t arg = 0;
    for (const auto& slot : signature(q.kind).slots) {
      if (!slot.keyword.empty()) {
        out << " " << slot.keyword;
        continue;
      }
      const Operand& o = q.args.at(arg++);
      out << " " << (o.name.empty() ? print_value(o.value) : o.name);
    }
    out << "\n";
  }
  return out.str();
}

std::string_view grammar_text() {
  return R"grammar(gtsq query grammar, version 1

document    := [ "gtsq" "1" NL ] { statement NL }
statement   := declaration | query
declaration := kind NAME "=" value        kind: set family metric bornology schema line number topology
query       := "query" QUERY operands     operands follow the table below

Comments start with '#'. Newlines inside parentheses are ignored. Names must be
declared before use. Rationals are p or p/q; decimals are rejected and
non-reduced fractions are reduced.

rat      := INT | INT "/" INT
ext      := rat | "-inf" | "+inf" | "inf"
set      := NAME | "empty" | "reals"
          | "interval" "(" ("closed"|"open") ext "," ("closed"|"open") ext ")"
          | "point" rat | "point" "(" rat ")" | "points" "(" rat { "," rat } ")"
          | "union" "(" set { "," set } ")" | "intersect" "(" set { "," set } ")"
          | "difference" "(" set "," set ")" | "complement" "(" set ")"
          | "shift" "(" set "," rat ")"
          | "tail_left" "(" set "," rat "," rat ")"      bounded pattern, period, cut
          | "tail_right" "(" set "," rat "," rat ")"
family   := NAME | "finite" "(" [ set { "," set } ] ")"
          | "periodic" "(" set "," rat [ "," range ] ")"  range: all | from K | upto K | between K K
          | "split" "(" rat "," family "," family ")"
          | "restricted" "(" family "," set ")"
          | "ladder_below" "(" ext [ "," rat [ "," ("closed"|"open") ] ] ")"
          | "ladder_above" "(" ext [ "," rat [ "," ("closed"|"open") ] ] ")"
          | "union" "(" family { "," family } ")"
metric   := NAME | METRIC | "conj" "(" metric ")" | "float_paper" "(" metric ")"
            METRIC: d_n d_n1 d_n_plus d_n_plus_1 d_u rho_u rho_u1 rho_S rho_S1 rho_L rho_0 rho_0_1 rho_S_minus
bornology:= NAME | "FB" | "ALL" | "CB_nat" | "UB" | "LB" | "B" "(" metric ")"
          | ("Sm"|"CB"|"ACB") "(" line ")" | "schema" "(" schema ")"
schema   := NAME | "grid" | "intervals" "(" INT { "," piece } ")"
piece    := "piece" "(" ("closed"|"open") end "," ("closed"|"open") end ")"
end      := ext | "affine" "(" ext "," rat ")"         alpha + beta*n
line     := NAME | standard/VARIANT | sorgenfrey/VARIANT | uu | ul | uf
topology := NAME | Nat | Upper | Lower | SorgR | SorgL | Discrete

queries:
  boundedness SET                      contains SET at RAT
  closure SET in TOPOLOGY              interior SET in TOPOLOGY
  open SET in TOPOLOGY                 distance METRIC from RAT to RAT
  ball METRIC at RAT radius RAT        nbhd METRIC of SET radius RAT
  bounded METRIC SET                   ess_finite FAMILY on SET
  cov LINE FAMILY                      op LINE SET
  sm LINE SET   cb LINE SET   acb LINE SET
  born BORNOLOGY SET                   pt LINE
  chain METRIC SCHEMA delta RAT        chain_search METRIC SCHEMA
  chain_uniform METRIC SCHEMA          proper BORNOLOGY TOPOLOGY TOPOLOGY
  base_open BORNOLOGY TOPOLOGY         verdict LINE BORNOLOGY METRIC
  uniform LINE BORNOLOGY METRIC        axioms LINE
  oracle FAMILY on SET window INT INT
)grammar";
}

}  // namespace gts
