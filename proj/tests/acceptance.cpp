// Acceptance battery: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "covers_laws.hpp"
#include "gts/checkers.hpp"
#include "gts/cli.hpp"
#include "gts/oracle.hpp"
#include "qmetric_laws.hpp"
#include "realset_laws.hpp"

using namespace gts;
using namespace gts::testing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

// Folds law results into one outcome; every law needs `min_instances` and no failures.
Outcome laws(const std::vector<LawResult>& rs, long min_instances) {
  long total = 0, fewest = -1;
  for (const auto& r : rs) {
    total += r.instances;
    if (fewest < 0 || r.instances < fewest) fewest = r.instances;
    if (r.failures) return {false, r.name + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure};
    if (r.instances < min_instances)
      return {false, r.name + ": only " + std::to_string(r.instances) + " instances"};
  }
  return {true, std::to_string(rs.size()) + " laws, " + std::to_string(total) + " instances (min " +
                    std::to_string(fewest) + " per law), 0 failures"};
}

Outcome identity_table() {
  const auto& probes = probe_corpus();
  if (probes.size() < 24) return {false, "probe corpus has only " + std::to_string(probes.size()) + " sets"};
  auto entries = identity_entries(LineCatalog::standard(), probes);
  for (const auto& e : entries)
    if (!e.ok) return {false, e.name + ": " + e.verdict};
  std::vector<LineId> lines;
  for (const auto& i : bornology_identities())
    if (std::find(lines.begin(), lines.end(), i.line) == lines.end()) lines.push_back(i.line);
  return {true, std::to_string(entries.size()) + " identities over " + std::to_string(lines.size()) + " lines x " +
                    std::to_string(probes.size()) + " probes, 100% agreement"};
}

Outcome metrizability_sweep() {
  long consistent = 0, inconsistent = 0;
  for (const auto& c : metrizability_claims()) {
    ClaimOutcome o = check_claim(c, probe_corpus());
    if (!o.agrees) return {false, "mismatch: " + c.anchor + " on " + to_string(c.line)};
    (c.holds ? consistent : inconsistent)++;
  }
  return {true, std::to_string(consistent) + " declared metrizable -> CONSISTENT, " + std::to_string(inconsistent) +
                    " declared failures -> INCONSISTENT with the anchored part, 0 mismatches"};
}

Outcome chain_criteria() {
  BaseSchema grow = BaseSchema::intervals({{AffineEnd{q(-1), q(-1)}, true, AffineEnd{q(1), q(1)}, true}});
  BaseSchema below = BaseSchema::intervals({{AffineEnd{ninf()}, false, AffineEnd{q(0), q(1)}, false}});
  ChainReport dn = chain_check(metric(MetricName::d_n), grow, q(1, 2), 64);
  if (dn.verdict != ChainReport::Verdict::Pass || !dn.index_uniform || !reverify(metric(MetricName::d_n), dn))
    return {false, "d_n chain: " + verdict_string(dn)};
  std::string fails;
  for (long k = 2; k <= 12; ++k) {
    ChainReport r = chain_check(metric(MetricName::d_n_plus), grow, q(1, 1L << k), 64);
    if (r.verdict != ChainReport::Verdict::FailAt || r.index > (1L << k))
      return {false, "d+_n chain, delta 2^-" + std::to_string(k) + ": " + verdict_string(r)};
    fails += (fails.empty() ? "" : ",") + std::to_string(r.index);
  }
  ChainReport u = uniform_chain_check(metric(MetricName::d_n_plus), below, 64);
  if (u.verdict != ChainReport::Verdict::Pass || u.delta_used != q(1, 2))
    return {false, "d+_n uniform chain on (-inf, n): " + verdict_string(u)};
  return {true, "d_n passes index-uniformly; d+_n fails at n = " + fails +
                    " for delta = 2^-2..2^-12; uniform d+_n on (-inf, n) passes with delta 1/2"};
}

Outcome nesting_and_pt() {
  long checks = 0;
  for (LineId id : all_lines())
    for (const auto& a : probe_corpus()) {
      ++checks;
      if ((sm_member(id, a) || cb_member(id, a)) && !acb_member(id, a))
        return {false, "Sm or CB outside ACB: " + to_string(id) + " " + to_string(a)};
      if (pt_flagged(id)) continue;
      LineId p = pt_of(id);
      if (sm_member(id, a) != sm_member(p, a) || cb_member(id, a) != cb_member(p, a))
        return {false, "pt changes Sm or CB: " + to_string(id) + " " + to_string(a)};
    }
  return {true, std::to_string(checks) + " (line, probe) pairs, 0 violations"};
}

Outcome oracle_equivalence() {
  long tried = 0;
  auto rs = law_oracle_agreement(200, 0xacce55, &tried);
  if (Outcome o = laws(rs, 0); !o.ok) return o;
  if (rs[0].instances < 200)
    return {false, "oracle answered only " + std::to_string(rs[0].instances) + " of " + std::to_string(tried)};
  return {true, std::to_string(rs[0].instances) + " oracle-answered instances of " + std::to_string(tried) +
                    " drawn, 0 disagreements"};
}

Outcome realset_laws() {
  std::vector<LawResult> all;
  all.push_back(law_normalization(10000, 601));
  for (const auto& r : law_boolean(10000, 602)) all.push_back(r);
  for (const auto& r : law_topology(10000, 603)) all.push_back(r);
  return laws(all, 10000);
}

Outcome metric_laws() {
  std::vector<LawResult> all;
  std::uint64_t seed = 700;
  for (const auto& d : exact_metrics_with_conjugates()) {
    all.push_back(law_metric_axioms(d, 10000, ++seed));
    all.push_back(law_ball_eval(d, 10000, ++seed));
  }
  return laws(all, 10000);
}

Outcome ring_battery() {
  LawResult r = law_ring_generation(50, 0x12);
  if (r.failures) return {false, std::to_string(r.failures) + " disagreements, first " + r.first_failure};
  return {true, "50 random instances, " + std::to_string(r.instances) + " candidates, 0 disagreements"};
}

Outcome determinism() {
  std::string a = render_machine(corpus_verify());
  std::string b = render_machine(corpus_verify());
  if (a != b) return {false, "machine sections differ"};
  return {true, "two corpus runs, " + std::to_string(a.size()) + " bytes each, byte-identical"};
}

struct Criterion {
  int number;
  std::string title;
  double budget_s;  // <= 0: no time budget
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "bornology identity table", 10, identity_table},
      {2, "metrizability verdict sweep", 0, metrizability_sweep},
      {3, "chain criteria", 5, chain_criteria},
      {4, "Sm/CB within ACB and pt invariance sweeps", 0, nesting_and_pt},
      {5, "essential-finiteness oracle equivalence", 0, oracle_equivalence},
      {6, "RealSet algebra laws", 0, realset_laws},
      {7, "quasi-pseudometric axioms and ball-eval agreement", 0, metric_laws},
      {8, "ring generation instance battery", 0, ring_battery},
      {9, "determinism of the corpus report", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget_s > 0 && secs >= c.budget_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %d: %s  %s: %s [%.2f s]\n", c.number, o.ok ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
