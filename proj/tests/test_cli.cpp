#include "covers_laws.hpp"
#include "doctest.h"
#include "gts/cli.hpp"
#include "support.hpp"

using namespace gts;
using namespace gts::testing;

namespace {

QueryDoc parse_ok(std::string_view text) {
  ParseResult r = parse_query_doc(text);
  INFO(text);
  if (r.error) INFO(to_string(*r.error));
  REQUIRE(r.doc.has_value());
  return *r.doc;
}

Diagnostic parse_err(std::string_view text) {
  ParseResult r = parse_query_doc(text);
  INFO(text);
  REQUIRE(r.error.has_value());
  return *r.error;
}

const std::string& verdict_of(const Report& r, std::size_t i) { return r.entries.at(i).verdict; }

// Random documents covering every value kind and query kind.
class DocGen {
public:
  explicit DocGen(std::uint64_t seed) : fam_(seed) {}

  QuasiMetric metric_value() {
    const auto& names = all_metric_names();
    QuasiMetric d = metric(names[static_cast<std::size_t>(g().pick(0, static_cast<long>(names.size()) - 1))]);
    if (g().coin(25)) d = conjugate(d);
    if (g().coin(15)) d.phi_mode = PhiMode::FloatPaper;
    return d;
  }

  LineId line_value() { return all_lines()[static_cast<std::size_t>(g().pick(0, 28))]; }

  BaseSchema schema_value() {
    if (g().coin(20)) return BaseSchema::integer_grid();
    std::vector<SchemaInterval> parts;
    long pieces = g().pick(1, 2);
    for (long i = 0; i < pieces; ++i) {
      SchemaInterval p;
      p.lo = g().coin(20) ? AffineEnd{ninf()} : AffineEnd{g().dyadic(-3, 0), q(-g().pick(0, 2))};
      p.hi = g().coin(20) ? AffineEnd{pinf()} : AffineEnd{g().dyadic(0, 3), q(g().pick(0, 2))};
      p.lo_closed = p.lo.alpha.is_finite() && g().coin();
      p.hi_closed = p.hi.alpha.is_finite() && g().coin();
      parts.push_back(p);
    }
    return BaseSchema::intervals(std::move(parts), g().pick(0, 2));
  }

  Bornology bornology_value() {
    switch (g().pick(0, 7)) {
      case 0: return Bornology::fb();
      case 1: return Bornology::all();
      case 2: return Bornology::nat_bounded();
      case 3: return Bornology::ub();
      case 4: return Bornology::lb();
      case 5: return Bornology::metric_bounded(metric_value());
      case 6: return Bornology::custom(schema_value());
      default: return Bornology::of_line(line_value(), static_cast<LineBornKind>(g().pick(0, 2)));
    }
  }

  Value value(ValueKind k) {
    switch (k) {
      case ValueKind::Set: return g().set();
      case ValueKind::Family: return fam_.family();
      case ValueKind::Metric: return metric_value();
      case ValueKind::Bornology: return bornology_value();
      case ValueKind::Schema: return schema_value();
      case ValueKind::Line: return line_value();
      case ValueKind::Number: return g().dyadic(-4, 4, 8);
      case ValueKind::Topology: return static_cast<TopologyKind>(g().pick(0, 5));
    }
    return RealSet();
  }

  QueryDoc doc() {
    QueryDoc d;
    long decls = g().pick(0, 6);
    for (long i = 0; i < decls; ++i) {
      auto k = static_cast<ValueKind>(g().pick(0, 7));
      d.declarations.push_back(Declaration{k, "v" + std::to_string(i), value(k)});
    }
    long queries = g().pick(0, 6);
    const auto& kinds = all_query_kinds();
    for (long i = 0; i < queries; ++i) {
      Query q;
      q.kind = kinds[static_cast<std::size_t>(g().pick(0, static_cast<long>(kinds.size()) - 1))];
      for (ValueKind k : query_operands(q.kind)) {
        std::vector<const Declaration*> refs;
        for (const auto& decl : d.declarations)
          if (decl.kind == k) refs.push_back(&decl);
        if (!refs.empty() && g().coin()) {
          const Declaration* r = refs[static_cast<std::size_t>(g().pick(0, static_cast<long>(refs.size()) - 1))];
          q.args.push_back(Operand{r->name, r->value});
        } else {
          q.args.push_back(Operand{{}, value(k)});
        }
      }
      d.queries.push_back(std::move(q));
    }
    return d;
  }

private:
  SetGen& g() { return fam_.sets(); }
  FamilyGen fam_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse examples") {
  QueryDoc d = parse_ok("set A = union(interval(closed 0, open 1), point 2)\nquery boundedness A\n");
  REQUIRE(d.declarations.size() == 1);
  CHECK(std::get<RealSet>(d.declarations[0].value) ==
        unite(RealSet::of(Interval::closed_open(q(0), q(1))), RealSet::point(q(2))));
  REQUIRE(d.queries.size() == 1);
  CHECK(d.queries[0].args[0].name == "A");

  QueryDoc b = parse_ok("query ball rho_S at 0 radius 1/2");
  CHECK(verdict_of(run(b), 0) == to_string(RealSet::of(Interval::closed_open(q(0), q(1, 2)))));

  Diagnostic e = parse_err("set A = point 1\nquery boundedness B\n");
  CHECK(e.line == 2);
  CHECK(e.column == 19);
  CHECK(e.message.find("unknown identifier") != std::string::npos);
}

TEST_CASE("rationals are exact and canonical") {
  QueryDoc d = parse_ok("number x = 6/8");
  CHECK(std::get<Rational>(d.declarations[0].value) == q(3, 4));
  CHECK(parse_err("number x = 0.75").message.find("decimal") != std::string::npos);
  CHECK(parse_err("number x = 1/").message.find("malformed") != std::string::npos);
}

TEST_CASE("diagnostics") {
  CHECK(parse_err("set A = point 1\nset A = point 2").message.find("duplicate") != std::string::npos);
  CHECK(parse_err("metric d = rho_S\nquery boundedness d").message.find("is a metric") != std::string::npos);
  CHECK(parse_err("query nonsense 1").message.find("unknown query") != std::string::npos);
  CHECK(parse_err("set A = interval(open 1, open 0)").line == 1);
  CHECK(parse_err("family F = periodic(interval(open 0, open +inf), 1)").message.find("bounded") != std::string::npos);
  CHECK(parse_err("gtsq 2").message.find("version") != std::string::npos);
  CHECK(parse_err("query pt standard/uu").message.find("unknown identifier") != std::string::npos);
  CHECK(parse_err("set A = point 1 point 2").message.find("unexpected") != std::string::npos);
}

TEST_CASE("newlines inside parentheses are whitespace") {
  QueryDoc d = parse_ok("set A = union(\n  point 1,\n  point 2\n)\nquery boundedness A");
  CHECK(std::get<RealSet>(d.declarations[0].value) == RealSet::points(std::vector<Rational>{q(1), q(2)}));
  CHECK(d.queries[0].line == 5);
}

TEST_CASE("every value form parses") {
  QueryDoc d = parse_ok(R"(
set tails = union(tail_left(interval(closed 0, open 1/2), 1, -2), tail_right(point 0, 2, 3))
set holes = difference(reals, points(0, 1, 2))
set mirrored = complement(shift(interval(open -inf, closed 0), 1))
family lad = ladder_above(-inf, 2, open)
family mix = union(split(0, finite(interval(open -inf, open 1)), periodic(interval(closed 0, open 2), 1, from 0)), restricted(lad, interval(open 0, open 1)))
metric d = conj(float_paper(d_n_plus))
bornology b1 = B(rho_L)
bornology b2 = Sm(sorgenfrey/l_plus_st)
bornology b3 = schema(intervals(1, piece(open -inf, closed affine(0, 1)), piece(closed 5, open +inf)))
line l = uf
topology t = SorgL
)");
  CHECK(d.declarations.size() == 11);
  CHECK(std::get<RealSet>(d.declarations[0].value).has_tails());
  CHECK(std::get<QuasiMetric>(d.declarations[5].value).conjugated);
  CHECK(std::get<QuasiMetric>(d.declarations[5].value).phi_mode == PhiMode::FloatPaper);
  CHECK(std::get<LineId>(d.declarations[9].value) == upper_line(LineVariant::uf));
}

TEST_CASE("printing round-trips") {
  DocGen gen(0xc11);
  for (int i = 0; i < 300; ++i) {
    QueryDoc d = gen.doc();
    std::string text = print_query_doc(d);
    INFO(text);
    ParseResult r = parse_query_doc(text);
    if (r.error) INFO(to_string(*r.error));
    REQUIRE(r.doc.has_value());
    CHECK(*r.doc == d);
    CHECK(print_query_doc(*r.doc) == text);
  }
}

TEST_CASE("run") {
  Report empty = run(QueryDoc{});
  CHECK(empty.entries.empty());
  CHECK(empty.passed() == 0);
  CHECK(empty.failed() == 0);
  CHECK(render_machine(empty).find("summary total=0 passed=0 failed=0") != std::string::npos);

  QueryDoc chains = parse_ok(R"(
schema grow = intervals(0, piece(closed affine(-1, -1), closed affine(1, 1)))
query chain d_n grow delta 1/2
query chain d_n_plus grow delta 1/8
query chain_uniform d_n_plus intervals(0, piece(open -inf, open affine(0, 1)))
)");
  Report r = run(chains);
  CHECK(verdict_of(r, 0) == "pass");
  CHECK(verdict_of(r, 1) == "fail_at(1)");
  CHECK(verdict_of(r, 2) == "pass");
  CHECK(r.failed() == 0);

  Report mixed = run(parse_ok("query ball float_paper(d_n_plus) at 0 radius 1\nquery boundedness reals"));
  CHECK_FALSE(mixed.entries[0].ok);
  CHECK(verdict_of(mixed, 0) == "error");
  CHECK(mixed.entries[1].ok);

  Report refused = run(parse_ok("query oracle periodic(interval(open 0, open 2), 1) on interval(closed 0, closed 5) "
                                "window 0 1"));
  CHECK_FALSE(refused.entries[0].ok);
}

TEST_CASE("chain cap shows up as truncation") {
  QueryDoc d = parse_ok("query chain_search d_n_plus intervals(0, piece(closed affine(-1, -1), closed affine(1, 1)))");
  Caps caps;
  caps.chain = 4;
  CHECK(verdict_of(run(d, caps), 0) == "truncated(4)");
}

TEST_CASE("reports are deterministic and quoted") {
  QueryDoc d = parse_ok("query closure union(point 0, interval(open 1, open 2)) in Nat\nquery sm standard/ut reals");
  Report a = run(d), b = run(d);
  CHECK(render_machine(a) == render_machine(b));
  std::string m = render_machine(a);
  CHECK(m.rfind("gtsq-report schema=1 engine=", 0) == 0);
  CHECK(m.find("verdict=\"{0} U [1, 2]\"") != std::string::npos);
  CHECK(render_human(a).find("2 entries, 2 passed, 0 failed") != std::string::npos);
}

TEST_CASE("identity table agrees with the bornology tables") {
  const auto& ids = bornology_identities();
  CHECK(ids.size() >= 40);
  for (const auto& e : identity_entries(LineCatalog::standard(), probe_corpus())) {
    INFO(e.name);
    CHECK(e.ok);
  }
}

TEST_CASE("a corrupted smallness table is caught with anchors") {
  LineCatalog bad = LineCatalog::standard();
  LineId ut = line(LineFamily::Standard, LineVariant::ut);
  auto real_sm = bad.sm;
  bad.sm = [=](LineId id, const RealSet& a) { return id == ut ? true : real_sm(id, a); };
  std::vector<std::string> anchors;
  for (const auto& e : identity_entries(bad, probe_corpus()))
    if (!e.ok)
      for (const auto& [k, v] : e.fields)
        if (k == "anchor") anchors.push_back(v);
  CHECK(std::find(anchors.begin(), anchors.end(), "ut: FB = Sm") != anchors.end());
  CHECK(std::find(anchors.begin(), anchors.end(), "ut: Sm within CB") != anchors.end());

  Report r = corpus_verify(Caps{}, bad);
  CHECK(r.failed() > 0);
  bool refuter_flagged = false;
  for (const auto& e : r.entries)
    if (e.section == "refuter" && e.name == "standard/ut") refuter_flagged = !e.ok;
  CHECK(refuter_flagged);
}

TEST_CASE("grammar text names every query") {
  std::string_view g = grammar_text();
  for (QueryKind k : all_query_kinds()) CHECK(g.find(to_string(k)) != std::string_view::npos);
}

}  // TEST_SUITE
