#ifndef GTS_CLI_HPP
#define GTS_CLI_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gts/checkers.hpp"
#include "gts/covers.hpp"
#include "gts/lines.hpp"
#include "gts/qmetric.hpp"
#include "gts/realset.hpp"

namespace gts {

inline constexpr std::string_view kEngineVersion = "0.1.0";
inline constexpr int kQuerySchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

// ---- query documents ----

using Value = std::variant<RealSet, FamilySpec, QuasiMetric, Bornology, BaseSchema, LineId, Rational, TopologyKind>;

enum class ValueKind { Set, Family, Metric, Bornology, Schema, Line, Number, Topology };
std::string_view to_string(ValueKind k);
ValueKind kind_of(const Value& v);

/// A query argument: either a reference to a declaration or an inline value.
struct Operand {
  std::string name;
  Value value;

  friend bool operator==(const Operand&, const Operand&) = default;
};

struct Declaration {
  ValueKind kind = ValueKind::Set;
  std::string name;
  Value value;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

enum class QueryKind {
  Boundedness,
  Contains,
  Closure,
  Interior,
  Open,
  Distance,
  Ball,
  Nbhd,
  Bounded,
  EssFinite,
  Cov,
  Op,
  Sm,
  Cb,
  Acb,
  Born,
  Pt,
  Chain,
  ChainSearch,
  ChainUniform,
  Proper,
  BaseOpen,
  Verdict,
  Uniform,
  Axioms,
  Oracle,
};

std::string_view to_string(QueryKind k);
std::optional<QueryKind> parse_query_kind(std::string_view s);
const std::vector<QueryKind>& all_query_kinds();
/// Kinds of the operands a query takes, in order.
std::vector<ValueKind> query_operands(QueryKind k);

struct Query {
  QueryKind kind = QueryKind::Boundedness;
  std::vector<Operand> args;
  std::size_t line = 0;

  /// Line numbers are positional only.
  friend bool operator==(const Query& a, const Query& b) { return a.kind == b.kind && a.args == b.args; }
};

struct QueryDoc {
  int version = kQuerySchemaVersion;
  std::vector<Declaration> declarations;
  std::vector<Query> queries;

  friend bool operator==(const QueryDoc&, const QueryDoc&) = default;
};

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<QueryDoc> doc;
  std::optional<Diagnostic> error;
};

ParseResult parse_query_doc(std::string_view text);
/// Canonical text; parse_query_doc(print_query_doc(d)) reproduces d.
std::string print_query_doc(const QueryDoc& doc);
std::string print_value(const Value& v);
std::string_view grammar_text();

// ---- reports ----

struct Caps {
  long chain = kDefaultChainCap;
  long depth = kDefaultDepthCap;
  long oracle_subfamily = 8;

  friend bool operator==(const Caps&, const Caps&) = default;
};

struct ReportEntry {
  std::string section;
  std::string name;
  bool ok = false;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Report {
  Caps caps;
  std::vector<ReportEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const;
};

/// Each query becomes one entry. Errors become failed entries; the run never aborts.
Report run(const QueryDoc& doc, const Caps& caps = {});

/// Line-delimited key=value records under a schema version header.
std::string render_machine(const Report& r);
/// Plain-text tables grouped by section, then the summary.
std::string render_human(const Report& r);

// ---- corpus verification ----

/// The bornology tables under test; tests swap in corrupted copies.
struct LineCatalog {
  std::function<bool(LineId, const RealSet&)> sm;
  std::function<bool(LineId, const RealSet&)> cb;
  std::function<bool(LineId, const RealSet&)> acb;
  std::function<LineId(LineId)> pt;

  static LineCatalog standard();
  bool member(LineId id, LineBornKind k, const RealSet& a) const;
};

/// A stated bornology identity: the line's bornology equals, or is contained in, the reference.
struct BornologyIdentity {
  enum class Relation { Equal, Subset };
  LineId line;
  LineBornKind kind = LineBornKind::Sm;
  Relation relation = Relation::Equal;
  Bornology reference;
  std::string anchor;
};

const std::vector<BornologyIdentity>& bornology_identities();

/// One entry per identity: agreement on every probe set.
std::vector<ReportEntry> identity_entries(const LineCatalog& cat, const std::vector<RealSet>& probes);

Report corpus_verify(const Caps& caps = {}, const LineCatalog& cat = LineCatalog::standard());

}  // namespace gts

#endif  // GTS_CLI_HPP
