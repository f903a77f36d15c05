#include "gts/oracle.hpp"

#include <functional>

namespace gts {

namespace {

Rational point_of(const Interval& i) {
  if (i.lo.is_finite() && i.lo_closed) return i.lo.value();
  if (i.hi.is_finite() && i.hi_closed) return i.hi.value();
  if (i.lo.is_finite() && i.hi.is_finite()) return Rational((i.lo.value() + i.hi.value()) / 2);
  if (i.lo.is_finite()) return Rational(i.lo.value() + 1);
  if (i.hi.is_finite()) return Rational(i.hi.value() - 1);
  return Rational(0);
}

}  // namespace

Rational any_point(const RealSet& s) {
  auto core = s.core();
  if (!core.empty()) return point_of(core.front());
  if (auto t = s.right_tail(); t && !t->pattern.empty()) {
    Rational p = point_of(t->pattern.front());
    Rational k = rat_floor(Rational((t->cut - p) / t->period)) + 1;
    return p + k * t->period;
  }
  if (auto t = s.left_tail(); t && !t->pattern.empty()) {
    Rational p = point_of(t->pattern.front());
    Rational k = rat_ceil(Rational((t->cut - p) / t->period)) - 1;
    return p + k * t->period;
  }
  throw std::invalid_argument("any_point of the empty set");
}

OracleAnswer oracle_ess_finite(const FamilySpec& f, long kmin, long kmax, const RealSet& k, long max_subfamily) {
  OracleAnswer out;
  RealSet trace = intersect(k, union_of(f));
  std::vector<RealSet> members;
  RealSet reach;
  for (auto& m : members_in_index_window(f, kmin, kmax)) {
    if (intersect(m, trace).is_empty()) continue;
    reach = unite(reach, m);
    members.push_back(std::move(m));
  }
  if (!is_subset(trace, reach)) {
    out.refusal = "window does not cover K ∩ ⋃F";
    return out;
  }
  // Any cover contains a member through a chosen uncovered point.
  long nodes = 0;
  std::vector<RealSet> chosen;
  bool capped = false;
  std::function<bool(const RealSet&)> search = [&](const RealSet& covered) {
    if (++nodes > kOracleNodeCap) {
      capped = true;
      return false;
    }
    RealSet rest = difference(trace, covered);
    if (rest.is_empty()) return true;
    if (static_cast<long>(chosen.size()) >= max_subfamily) return false;
    Rational x = any_point(rest);
    for (const auto& m : members) {
      if (!contains_point(m, x)) continue;
      chosen.push_back(m);
      if (search(unite(covered, m))) return true;
      chosen.pop_back();
      if (capped) return false;
    }
    return false;
  };
  if (search(RealSet())) {
    out.answer = true;
    out.cover = chosen;
  } else if (capped) {
    out.refusal = "combinatorial cap exceeded";
  } else {
    out.refusal = "no cover with at most " + std::to_string(max_subfamily) + " members";
  }
  return out;
}

}  // namespace gts
