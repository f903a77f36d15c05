#include <algorithm>
#include <cctype>
#include <sstream>

#include "gts/cli.hpp"
#include "gts/oracle.hpp"

namespace gts {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string boundedness_text(const Boundedness& b) {
  return "bounded=" + yes_no(b.bounded) + " above=" + yes_no(b.bounded_above) + " below=" + yes_no(b.bounded_below) +
         " finite=" + yes_no(b.finite);
}

template <class T>
const T& arg(const Query& q, std::size_t i) {
  return std::get<T>(q.args.at(i).value);
}

long integer_arg(const Query& q, std::size_t i) {
  const Rational& r = arg<Rational>(q, i);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::invalid_argument("window bounds must be integers");
  return r.get_num().get_si();
}

void chain_fields(ReportEntry& e, const ChainReport& r) {
  e.verdict = verdict_string(r);
  e.fields.emplace_back("delta", to_string(r.delta_used));
  e.fields.emplace_back("checked_upto", std::to_string(r.checked_upto));
  e.fields.emplace_back("index_uniform", yes_no(r.index_uniform));
  if (r.verdict == ChainReport::Verdict::FailAt) e.fields.emplace_back("missing", to_string(r.missing));
  if (!r.note.empty()) e.fields.emplace_back("note", r.note);
}

void verdict_fields(ReportEntry& e, const MetrizabilityReport& r) {
  e.verdict = r.consistent ? "CONSISTENT" : "INCONSISTENT";
  if (auto f = r.first_failure()) e.fields.emplace_back("failing_part", std::string(to_string(*f)));
  for (const auto& p : r.parts)
    e.fields.emplace_back(std::string(to_string(p.part)), p.ok ? "ok" : "fail: " + p.detail);
}

void evaluate(const Query& q, const Caps& caps, ReportEntry& e) {
  switch (q.kind) {
    case QueryKind::Boundedness: e.verdict = boundedness_text(boundedness(arg<RealSet>(q, 0))); return;
    case QueryKind::Contains: e.verdict = yes_no(contains_point(arg<RealSet>(q, 0), arg<Rational>(q, 1))); return;
    case QueryKind::Closure: e.verdict = to_string(closure(arg<RealSet>(q, 0), arg<TopologyKind>(q, 1))); return;
    case QueryKind::Interior: e.verdict = to_string(interior(arg<RealSet>(q, 0), arg<TopologyKind>(q, 1))); return;
    case QueryKind::Open: e.verdict = yes_no(is_open(arg<RealSet>(q, 0), arg<TopologyKind>(q, 1))); return;
    case QueryKind::Distance:
      e.verdict = to_string(eval(arg<QuasiMetric>(q, 0), arg<Rational>(q, 1), arg<Rational>(q, 2)));
      return;
    case QueryKind::Ball:
      e.verdict = to_string(ball(arg<QuasiMetric>(q, 0), arg<Rational>(q, 1), arg<Rational>(q, 2)));
      return;
    case QueryKind::Nbhd:
      e.verdict = to_string(nbhd(arg<QuasiMetric>(q, 0), arg<RealSet>(q, 1), arg<Rational>(q, 2)));
      return;
    case QueryKind::Bounded: e.verdict = yes_no(is_bounded_set(arg<QuasiMetric>(q, 0), arg<RealSet>(q, 1))); return;
    case QueryKind::EssFinite: {
      EssFinVerdict v = ess_finite_on(arg<FamilySpec>(q, 0), arg<RealSet>(q, 1));
      e.verdict = yes_no(v.essentially_finite);
      if (v.essentially_finite) {
        std::string w;
        for (std::size_t i = 0; i < v.witness.size(); ++i) w += (i ? "; " : "") + to_string(v.witness[i]);
        e.fields.emplace_back("witness", w.empty() ? "{}" : w);
      } else {
        e.fields.emplace_back("obstruction", v.obstruction);
      }
      return;
    }
    case QueryKind::Cov: {
      CovVerdict v = cov_verdict(arg<LineId>(q, 0), arg<FamilySpec>(q, 1));
      e.verdict = yes_no(v.member);
      if (!v.reason.empty()) e.fields.emplace_back("reason", v.reason);
      return;
    }
    case QueryKind::Op: e.verdict = yes_no(op_member(arg<LineId>(q, 0), arg<RealSet>(q, 1))); return;
    case QueryKind::Sm: {
      e.verdict = yes_no(sm_member(arg<LineId>(q, 0), arg<RealSet>(q, 1)));
      if (auto w = sm_refute(arg<LineId>(q, 0), arg<RealSet>(q, 1))) e.fields.emplace_back("refuter", to_string(*w));
      return;
    }
    case QueryKind::Cb: e.verdict = yes_no(cb_member(arg<LineId>(q, 0), arg<RealSet>(q, 1))); return;
    case QueryKind::Acb: e.verdict = yes_no(acb_member(arg<LineId>(q, 0), arg<RealSet>(q, 1))); return;
    case QueryKind::Born: e.verdict = yes_no(bornology_member(arg<Bornology>(q, 0), arg<RealSet>(q, 1))); return;
    case QueryKind::Pt: {
      LineId id = arg<LineId>(q, 0);
      e.verdict = to_string(pt_of(id));
      if (pt_flagged(id)) e.fields.emplace_back("flag", "generated topology differs from the line topology");
      return;
    }
    case QueryKind::Chain:
      chain_fields(e, chain_check(arg<QuasiMetric>(q, 0), arg<BaseSchema>(q, 1), arg<Rational>(q, 2), caps.chain));
      return;
    case QueryKind::ChainSearch:
      chain_fields(e, chain_search(arg<QuasiMetric>(q, 0), arg<BaseSchema>(q, 1), caps.chain));
      return;
    case QueryKind::ChainUniform:
      chain_fields(e, uniform_chain_check(arg<QuasiMetric>(q, 0), arg<BaseSchema>(q, 1), caps.chain));
      return;
    case QueryKind::Proper: {
      ProperReport r = proper_check(arg<Bornology>(q, 0), arg<TopologyKind>(q, 1), arg<TopologyKind>(q, 2));
      e.verdict = r.proper ? "PROPER" : "IMPROPER";
      e.fields.emplace_back("checked_upto", std::to_string(r.checked_upto));
      if (r.failing_index) e.fields.emplace_back("failing_index", std::to_string(*r.failing_index));
      if (!r.proper) e.fields.emplace_back("witness", to_string(r.witness));
      if (!r.detail.empty()) e.fields.emplace_back("detail", r.detail);
      return;
    }
    case QueryKind::BaseOpen:
      e.verdict = yes_no(base_check(arg<Bornology>(q, 0), arg<TopologyKind>(q, 1), caps.chain));
      return;
    case QueryKind::Verdict:
      verdict_fields(e, metrizable_verdict(arg<LineId>(q, 0), arg<Bornology>(q, 1), arg<QuasiMetric>(q, 2),
                                           probe_corpus(), caps.chain));
      return;
    case QueryKind::Uniform:
      verdict_fields(e, uniform_verdict(arg<LineId>(q, 0), arg<Bornology>(q, 1), arg<QuasiMetric>(q, 2), caps.chain));
      return;
    case QueryKind::Axioms: {
      LineId id = arg<LineId>(q, 0);
      AxiomReport r = axiom_probe(id, default_axiom_samples(id), std::min<long>(caps.depth, 3));
      e.verdict = r.all_pass() ? "pass" : "violation";
      for (std::size_t i = 0; i < r.axioms.size(); ++i) {
        const auto& a = r.axioms[i];
        e.fields.emplace_back("axiom_" + std::to_string(i + 1),
                              a.violation ? "violation: " + *a.violation
                                          : "checked=" + std::to_string(a.checked) + " skipped=" + std::to_string(a.skipped));
      }
      return;
    }
    case QueryKind::Oracle: {
      OracleAnswer a =
          oracle_ess_finite(arg<FamilySpec>(q, 0), integer_arg(q, 2), integer_arg(q, 3), arg<RealSet>(q, 1),
                            caps.oracle_subfamily);
      if (!a.answer) throw UnsupportedOperation("oracle refused: " + a.refusal);
      e.verdict = yes_no(*a.answer);
      return;
    }
  }
}

// Bare values need no quoting; everything else is quoted with \ escapes.
std::string quoted(const std::string& v) {
  bool bare = !v.empty() && std::all_of(v.begin(), v.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '/' || c == '.' || c == '(' ||
           c == ')';
  });
  if (bare) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string field_key(const std::string& k) {
  std::string out;
  for (char c : k) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

}  // namespace

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok; }));
}

std::size_t Report::failed() const { return entries.size() - passed(); }

Report run(const QueryDoc& doc, const Caps& caps) {
  Report r;
  r.caps = caps;
  for (std::size_t i = 0; i < doc.queries.size(); ++i) {
    const Query& q = doc.queries[i];
    ReportEntry e;
    e.section = "query";
    e.name = std::to_string(i + 1) + ":" + std::string(to_string(q.kind));
    if (q.line) e.fields.emplace_back("line", std::to_string(q.line));
    try {
      evaluate(q, caps, e);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.ok = false;
      e.verdict = "error";
      e.fields.emplace_back("error", ex.what());
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string render_machine(const Report& r) {
  std::ostringstream out;
  out << "gtsq-report schema=" << kReportSchemaVersion << " engine=" << kEngineVersion << "\n";
  out << "caps chain=" << r.caps.chain << " depth=" << r.caps.depth << " oracle_subfamily=" << r.caps.oracle_subfamily
      << "\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    out << "entry index=" << i << " section=" << quoted(e.section) << " name=" << quoted(e.name)
        << " status=" << (e.ok ? "pass" : "fail") << " verdict=" << quoted(e.verdict);
    for (const auto& [k, v] : e.fields) out << " " << field_key(k) << "=" << quoted(v);
    out << "\n";
  }
  out << "summary total=" << r.entries.size() << " passed=" << r.passed() << " failed=" << r.failed() << "\n";
  return out.str();
}

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << "gtsq " << kEngineVersion << "  caps: chain " << r.caps.chain << ", depth " << r.caps.depth
      << ", oracle subfamily " << r.caps.oracle_subfamily << "\n";
  std::vector<std::string> sections;
  for (const auto& e : r.entries)
    if (std::find(sections.begin(), sections.end(), e.section) == sections.end()) sections.push_back(e.section);
  for (const auto& s : sections) {
    std::size_t name_w = 4, verdict_w = 7;
    for (const auto& e : r.entries) {
      if (e.section != s) continue;
      name_w = std::max(name_w, e.name.size());
      verdict_w = std::max(verdict_w, std::min<std::size_t>(e.verdict.size(), 60));
    }
    auto pad = [](const std::string& v, std::size_t w) { return v.size() >= w ? v : v + std::string(w - v.size(), ' '); };
    out << "\n[" << s << "]\n";
    out << pad("name", name_w) << "  status  " << "verdict\n";
    out << std::string(name_w, '-') << "  ------  " << std::string(verdict_w, '-') << "\n";
    for (const auto& e : r.entries) {
      if (e.section != s) continue;
      out << pad(e.name, name_w) << "  " << (e.ok ? "pass  " : "FAIL  ") << "  " << e.verdict << "\n";
      if (!e.ok)
        for (const auto& [k, v] : e.fields) out << pad("", name_w) << "          " << k << ": " << v << "\n";
    }
  }
  out << "\n" << r.entries.size() << " entries, " << r.passed() << " passed, " << r.failed() << " failed\n";
  return out.str();
}

}  // namespace gts
