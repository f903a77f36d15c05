#include "gts/covers.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace gts {

bool IndexRange::contains(long k) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::From: return k >= first;
    case Kind::Upto: return k <= last;
    case Kind::Finite: return first <= k && k <= last;
  }
  return false;
}

FamilySpec FamilySpec::finite(std::vector<RealSet> members) { return FamilySpec{FiniteFamily{std::move(members)}}; }

FamilySpec FamilySpec::periodic(RealSet seed, Rational period, IndexRange range) {
  if (period <= 0) throw ConstructionError("periodic family needs a positive period");
  if (!boundedness(seed).bounded) throw ConstructionError("periodic family seed must be bounded: " + to_string(seed));
  if (range.kind == IndexRange::Kind::Finite && range.last < range.first)
    throw ConstructionError("empty finite index range");
  return FamilySpec{PeriodicFamily{std::move(seed), std::move(period), range}};
}

FamilySpec FamilySpec::split(Rational cut, FamilySpec left, FamilySpec right) {
  return FamilySpec{SplitFamily{std::move(cut), std::make_shared<const FamilySpec>(std::move(left)),
                                std::make_shared<const FamilySpec>(std::move(right))}};
}

FamilySpec FamilySpec::restricted(FamilySpec base, RealSet window) {
  return FamilySpec{RestrictedFamily{std::make_shared<const FamilySpec>(std::move(base)), std::move(window)}};
}

FamilySpec FamilySpec::ladder_below(ExtRat limit, Rational scale, bool closed_end) {
  if (scale <= 0) throw ConstructionError("ladder scale must be positive");
  if (limit.is_neg_inf()) throw ConstructionError("a ladder below cannot approach -inf");
  return FamilySpec{LadderFamily{LadderFamily::Direction::Below, std::move(limit), std::move(scale), closed_end}};
}

FamilySpec FamilySpec::ladder_above(ExtRat limit, Rational scale, bool closed_end) {
  if (scale <= 0) throw ConstructionError("ladder scale must be positive");
  if (limit.is_pos_inf()) throw ConstructionError("a ladder above cannot approach +inf");
  return FamilySpec{LadderFamily{LadderFamily::Direction::Above, std::move(limit), std::move(scale), closed_end}};
}

FamilySpec FamilySpec::union_of_families(std::vector<FamilySpec> parts) {
  return FamilySpec{UnionFamily{std::move(parts)}};
}

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overload{
          [&](const FiniteFamily& x) { return x.members == std::get<FiniteFamily>(b.node).members; },
          [&](const PeriodicFamily& x) {
            const auto& y = std::get<PeriodicFamily>(b.node);
            return x.seed == y.seed && x.period == y.period && x.range == y.range;
          },
          [&](const SplitFamily& x) {
            const auto& y = std::get<SplitFamily>(b.node);
            return x.cut == y.cut && *x.left == *y.left && *x.right == *y.right;
          },
          [&](const RestrictedFamily& x) {
            const auto& y = std::get<RestrictedFamily>(b.node);
            return x.window == y.window && *x.base == *y.base;
          },
          [&](const LadderFamily& x) {
            const auto& y = std::get<LadderFamily>(b.node);
            return x.direction == y.direction && x.limit == y.limit && x.scale == y.scale &&
                   x.closed_end == y.closed_end;
          },
          [&](const UnionFamily& x) { return x.parts == std::get<UnionFamily>(b.node).parts; },
      },
      a.node);
}

namespace {

std::string range_string(const IndexRange& r) {
  switch (r.kind) {
    case IndexRange::Kind::All: return "all";
    case IndexRange::Kind::From: return "from " + std::to_string(r.first);
    case IndexRange::Kind::Upto: return "upto " + std::to_string(r.last);
    case IndexRange::Kind::Finite: return std::to_string(r.first) + ".." + std::to_string(r.last);
  }
  return "?";
}

}  // namespace

std::string to_string(const FamilySpec& f) {
  return std::visit(
      Overload{
          [](const FiniteFamily& x) {
            std::string s = "finite{";
            for (std::size_t i = 0; i < x.members.size(); ++i) s += (i ? "; " : "") + to_string(x.members[i]);
            return s + "}";
          },
          [](const PeriodicFamily& x) {
            return "periodic(" + to_string(x.seed) + ", period " + to_string(x.period) + ", " +
                   range_string(x.range) + ")";
          },
          [](const SplitFamily& x) {
            return "split(" + to_string(x.cut) + ", " + to_string(*x.left) + ", " + to_string(*x.right) + ")";
          },
          [](const RestrictedFamily& x) {
            return "restricted(" + to_string(*x.base) + ", " + to_string(x.window) + ")";
          },
          [](const LadderFamily& x) {
            return std::string("ladder(") + (x.direction == LadderFamily::Direction::Below ? "below " : "above ") +
                   to_string(x.limit) + ", scale " + to_string(x.scale) + (x.closed_end ? ", closed)" : ")");
          },
          [](const UnionFamily& x) {
            std::string s = "union(";
            for (std::size_t i = 0; i < x.parts.size(); ++i) s += (i ? ", " : "") + to_string(x.parts[i]);
            return s + ")";
          },
      },
      f.node);
}

namespace {

const ExtRat kNegInf = ExtRat::neg_inf();
const ExtRat kPosInf = ExtRat::pos_inf();

RealSet left_of(const Rational& c) { return RealSet::of(Interval::open(kNegInf, c)); }
RealSet right_from(const Rational& c) { return RealSet::of(Interval::closed_open(c, kPosInf)); }

RealSet periodic_member(const PeriodicFamily& p, long k) { return shift(p.seed, Rational(p.period * k)); }

RealSet ladder_member(const LadderFamily& l, long k) {
  Rational kk(k);
  if (l.direction == LadderFamily::Direction::Below) {
    Rational end = l.limit.is_finite() ? Rational(l.limit.value() - l.scale / kk) : Rational(l.scale * kk);
    return RealSet::of(Interval::make(kNegInf, false, end, l.closed_end));
  }
  Rational end = l.limit.is_finite() ? Rational(l.limit.value() + l.scale / kk) : Rational(-l.scale * kk);
  return RealSet::of(Interval::make(end, l.closed_end, kPosInf, false));
}

RealSet ladder_union(const LadderFamily& l) {
  if (!l.limit.is_finite()) return RealSet::reals();
  if (l.direction == LadderFamily::Direction::Below) return left_of(l.limit.value());
  return RealSet::of(Interval::open(l.limit, kPosInf));
}

// Index bounds of the members of a periodic family that can meet [lo, hi].
std::pair<long, long> index_bounds(const PeriodicFamily& p, const Rational& lo, const Rational& hi) {
  Rational a = infimum(p.seed)->value(), b = supremum(p.seed)->value();
  Rational kmin = rat_ceil(Rational((lo - b) / p.period)), kmax = rat_floor(Rational((hi - a) / p.period));
  long k0 = kmin.get_num().get_si(), k1 = kmax.get_num().get_si();
  if (p.range.kind == IndexRange::Kind::From || p.range.kind == IndexRange::Kind::Finite)
    k0 = std::max(k0, p.range.first);
  if (p.range.kind == IndexRange::Kind::Upto || p.range.kind == IndexRange::Kind::Finite)
    k1 = std::min(k1, p.range.last);
  return {k0, k1};
}

RealSet periodic_union(const PeriodicFamily& p) {
  if (p.seed.is_empty()) return RealSet();
  Rational a = infimum(p.seed)->value(), b = supremum(p.seed)->value();
  const Rational& per = p.period;
  auto members_between = [&](long k0, long k1) {
    RealSet acc;
    for (long k = k0; k <= k1; ++k) acc = unite(acc, periodic_member(p, k));
    return acc;
  };
  if (p.range.kind == IndexRange::Kind::Finite) return members_between(p.range.first, p.range.last);
  // One period of the full periodic union.
  long kk0 = rat_floor(Rational(-b / per)).get_num().get_si() - 1;
  long kk1 = rat_ceil(Rational((per - a) / per)).get_num().get_si() + 1;
  detail::Pattern pat{per, {}};
  {
    RealSet one = members_between(kk0, kk1);
    auto cells = detail::window_set(one.layout(), detail::half_open_window(0, per));
    pat.cells = cells;
  }
  switch (p.range.kind) {
    case IndexRange::Kind::All:
      return RealSet::from_layout(detail::Layout{pat, Rational(0), detail::expand(pat, detail::closed_window(0, 0)),
                                                 Rational(0), pat});
    case IndexRange::Kind::From: {
      // Beyond b + (first - 1) * period only members with k >= first reach.
      long k0 = p.range.first;
      Rational lo = a + per * k0;
      Rational hi = std::max(lo, Rational(b + per * (k0 - 1)));
      long k1 = rat_ceil(Rational((hi - a) / per)).get_num().get_si() + 1;
      RealSet core = members_between(k0, std::max(k0, k1));
      auto cells = detail::window_set(core.layout(), detail::closed_window(lo, hi));
      return RealSet::from_layout(detail::Layout{detail::empty_pattern(), lo, cells, hi, pat});
    }
    case IndexRange::Kind::Upto: {
      long k1 = p.range.last;
      Rational hi = b + per * k1;
      Rational lo = std::min(hi, Rational(a + per * (k1 + 1)));
      long k0 = rat_floor(Rational((lo - b) / per)).get_num().get_si() - 1;
      RealSet core = members_between(std::min(k0, k1), k1);
      auto cells = detail::window_set(core.layout(), detail::closed_window(lo, hi));
      return RealSet::from_layout(detail::Layout{pat, lo, cells, hi, detail::empty_pattern()});
    }
    default: break;
  }
  return RealSet();
}

}  // namespace

RealSet union_of(const FamilySpec& f) {
  return std::visit(Overload{
                        [](const FiniteFamily& x) {
                          RealSet acc;
                          for (const auto& m : x.members) acc = unite(acc, m);
                          return acc;
                        },
                        [](const PeriodicFamily& x) { return periodic_union(x); },
                        [](const SplitFamily& x) {
                          return unite(intersect(union_of(*x.left), left_of(x.cut)),
                                       intersect(union_of(*x.right), right_from(x.cut)));
                        },
                        [](const RestrictedFamily& x) { return intersect(union_of(*x.base), x.window); },
                        [](const LadderFamily& x) { return ladder_union(x); },
                        [](const UnionFamily& x) {
                          RealSet acc;
                          for (const auto& p : x.parts) acc = unite(acc, union_of(p));
                          return acc;
                        },
                    },
                    f.node);
}

namespace {

void sort_unique(std::vector<RealSet>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Members intersected with a window; nullopt when infinitely many are distinct.
std::optional<std::vector<RealSet>> explicit_in(const FamilySpec& f, const RealSet& w) {
  using Out = std::optional<std::vector<RealSet>>;
  return std::visit(
      Overload{
          [&](const FiniteFamily& x) -> Out {
            std::vector<RealSet> out;
            for (const auto& m : x.members) out.push_back(intersect(m, w));
            return out;
          },
          [&](const PeriodicFamily& x) -> Out {
            std::vector<RealSet> out;
            if (x.range.kind == IndexRange::Kind::Finite) {
              for (long k = x.range.first; k <= x.range.last; ++k) out.push_back(intersect(periodic_member(x, k), w));
              return out;
            }
            RealSet trace = intersect(periodic_union(x), w);
            if (!boundedness(trace).bounded) return std::nullopt;
            out.push_back(RealSet());  // infinitely many members miss the window
            if (trace.is_empty()) return out;
            auto [k0, k1] = index_bounds(x, infimum(trace)->value(), supremum(trace)->value());
            for (long k = k0; k <= k1; ++k) out.push_back(intersect(periodic_member(x, k), w));
            return out;
          },
          [&](const SplitFamily& x) -> Out {
            auto l = explicit_in(*x.left, intersect(w, left_of(x.cut)));
            auto r = explicit_in(*x.right, intersect(w, right_from(x.cut)));
            if (!l || !r) return std::nullopt;
            l->insert(l->end(), r->begin(), r->end());
            return l;
          },
          [&](const RestrictedFamily& x) -> Out { return explicit_in(*x.base, intersect(w, x.window)); },
          [&](const LadderFamily& x) -> Out {
            RealSet trace = intersect(ladder_union(x), w);
            bool below = x.direction == LadderFamily::Direction::Below;
            auto far_end = below ? supremum(trace) : infimum(trace);
            if (far_end && (!far_end->is_finite() || *far_end == x.limit)) return std::nullopt;
            auto done = [&](const RealSet& m) { return is_subset(trace, m); };
            std::vector<RealSet> out;
            for (long k = 1;; ++k) {
              RealSet m = intersect(ladder_member(x, k), w);
              out.push_back(m);
              if (done(m)) return out;
            }
          },
          [&](const UnionFamily& x) -> Out {
            std::vector<RealSet> out;
            for (const auto& p : x.parts) {
              auto e = explicit_in(p, w);
              if (!e) return std::nullopt;
              out.insert(out.end(), e->begin(), e->end());
            }
            return out;
          },
      },
      f.node);
}

}  // namespace

std::optional<std::vector<RealSet>> explicit_members(const FamilySpec& f) {
  auto out = explicit_in(f, RealSet::reals());
  if (out) sort_unique(*out);
  return out;
}

namespace {

void window_members(const FamilySpec& f, const RealSet& w, long kmin, long kmax, std::vector<RealSet>& out) {
  std::visit(Overload{
                 [&](const FiniteFamily& x) {
                   for (const auto& m : x.members) out.push_back(intersect(m, w));
                 },
                 [&](const PeriodicFamily& x) {
                   for (long k = kmin; k <= kmax; ++k)
                     if (x.range.contains(k)) out.push_back(intersect(periodic_member(x, k), w));
                 },
                 [&](const SplitFamily& x) {
                   window_members(*x.left, intersect(w, left_of(x.cut)), kmin, kmax, out);
                   window_members(*x.right, intersect(w, right_from(x.cut)), kmin, kmax, out);
                 },
                 [&](const RestrictedFamily& x) { window_members(*x.base, intersect(w, x.window), kmin, kmax, out); },
                 [&](const LadderFamily& x) {
                   for (long k = std::max(1L, kmin); k <= kmax; ++k) out.push_back(intersect(ladder_member(x, k), w));
                 },
                 [&](const UnionFamily& x) {
                   for (const auto& p : x.parts) window_members(p, w, kmin, kmax, out);
                 },
             },
             f.node);
}

}  // namespace

std::vector<RealSet> members_in_index_window(const FamilySpec& f, long kmin, long kmax) {
  std::vector<RealSet> out;
  window_members(f, RealSet::reals(), kmin, kmax, out);
  std::erase_if(out, [](const RealSet& s) { return s.is_empty(); });
  sort_unique(out);
  return out;
}

std::vector<RealSet> representative_members(const FamilySpec& f, long ladder_levels) {
  if (auto e = explicit_members(f)) return *e;
  // Members of a bare periodic family are translates of the seed.
  if (const auto* p = std::get_if<PeriodicFamily>(&f.node)) return {p->seed};
  std::vector<RealSet> out;
  window_members(f, RealSet::reals(), -ladder_levels, ladder_levels, out);
  sort_unique(out);
  return out;
}

Rational magnitude(const RealSet& s) {
  Rational m(0);
  auto see = [&](const ExtRat& e) {
    if (e.is_finite()) m = std::max(m, Rational(abs(e.value())));
  };
  for (const auto& i : s.core()) {
    see(i.lo);
    see(i.hi);
  }
  for (const auto& t : {s.left_tail(), s.right_tail()})
    if (t) {
      see(t->cut);
      see(t->period);
    }
  return m;
}

Rational feature_bound(const FamilySpec& f) {
  return std::visit(
      Overload{
          [](const FiniteFamily& x) {
            Rational m(0);
            for (const auto& s : x.members) m = std::max(m, magnitude(s));
            return m;
          },
          [](const PeriodicFamily& x) {
            Rational m = magnitude(x.seed) + x.period;
            if (x.range.kind != IndexRange::Kind::All) {
              long k = std::max(std::labs(x.range.first), std::labs(x.range.last));
              m += x.period * (k + 1);
            }
            return m;
          },
          [](const SplitFamily& x) {
            return std::max({Rational(abs(x.cut)), feature_bound(*x.left), feature_bound(*x.right)});
          },
          [](const RestrictedFamily& x) { return std::max(magnitude(x.window), feature_bound(*x.base)); },
          [](const LadderFamily& x) {
            Rational m = x.scale;
            if (x.limit.is_finite()) m += abs(x.limit.value());
            return m;
          },
          [](const UnionFamily& x) {
            Rational m(0);
            for (const auto& p : x.parts) m = std::max(m, feature_bound(p));
            return m;
          },
      },
      f.node);
}

// ---- essential finiteness ----

namespace {

struct PeriodicAtom {
  PeriodicFamily fam;
  RealSet window;
  RealSet trace;  // union of the members inside the window
};

struct LadderAtom {
  LadderFamily fam;
  RealSet window;
  RealSet trace;
};

struct Atoms {
  std::vector<RealSet> finite;
  std::vector<PeriodicAtom> periodic;
  std::vector<LadderAtom> ladders;
};

void flatten(const FamilySpec& f, const RealSet& w, Atoms& out) {
  std::visit(Overload{
                 [&](const FiniteFamily& x) {
                   for (const auto& m : x.members) out.finite.push_back(intersect(m, w));
                 },
                 [&](const PeriodicFamily& x) {
                   RealSet trace = intersect(periodic_union(x), w);
                   if (x.range.kind == IndexRange::Kind::Finite || boundedness(trace).bounded) {
                     auto e = explicit_in(FamilySpec{x}, w);
                     out.finite.insert(out.finite.end(), e->begin(), e->end());
                   } else {
                     out.periodic.push_back({x, w, trace});
                   }
                 },
                 [&](const SplitFamily& x) {
                   flatten(*x.left, intersect(w, left_of(x.cut)), out);
                   flatten(*x.right, intersect(w, right_from(x.cut)), out);
                 },
                 [&](const RestrictedFamily& x) { flatten(*x.base, intersect(w, x.window), out); },
                 [&](const LadderFamily& x) { out.ladders.push_back({x, w, intersect(ladder_union(x), w)}); },
                 [&](const UnionFamily& x) {
                   for (const auto& p : x.parts) flatten(p, w, out);
                 },
             },
             f.node);
  std::erase_if(out.finite, [](const RealSet& s) { return s.is_empty(); });
}

bool same_key(const LadderFamily& a, const LadderFamily& b) {
  return a.direction == b.direction && a.limit == b.limit;
}

RealSet union_all(const std::vector<RealSet>& v) {
  RealSet acc;
  for (const auto& s : v) acc = unite(acc, s);
  return acc;
}

// Points of t near the limit of ladder j that only ladders of the same kind
// can cover; they must stay away from the limit.
std::optional<std::string> ladder_obstruction(const Atoms& atoms, std::size_t j, const RealSet& t,
                                              const RealSet& finite_union, const RealSet& periodic_union_all) {
  const LadderFamily& l = atoms.ladders[j].fam;
  RealSet others = finite_union;
  if (l.limit.is_finite()) others = unite(others, periodic_union_all);
  for (std::size_t i = 0; i < atoms.ladders.size(); ++i)
    if (!same_key(atoms.ladders[i].fam, l)) others = unite(others, atoms.ladders[i].trace);
  RealSet q = difference(t, others);
  bool below = l.direction == LadderFamily::Direction::Below;
  if (!l.limit.is_finite()) {
    auto ext = below ? supremum(q) : infimum(q);
    if (ext && !ext->is_finite())
      return std::string("chain members never reach ") + (below ? "+inf" : "-inf") + " while K ∩ ⋃F is unbounded";
    return std::nullopt;
  }
  const Rational& p = l.limit.value();
  RealSet side = below ? intersect(q, left_of(p)) : intersect(q, RealSet::of(Interval::open(p, kPosInf)));
  auto ext = below ? supremum(side) : infimum(side);
  if (ext && *ext == l.limit) return "K ∩ ⋃F accumulates at the chain limit " + to_string(p);
  return std::nullopt;
}

}  // namespace

EssFinVerdict ess_finite_on(const FamilySpec& f, const RealSet& k) {
  Atoms atoms;
  flatten(f, RealSet::reals(), atoms);
  RealSet t = intersect(k, union_of(f));
  RealSet fin = union_all(atoms.finite);
  RealSet per;
  for (const auto& p : atoms.periodic) per = unite(per, p.trace);
  RealSet rest = difference(t, fin);
  RealSet lad;
  for (const auto& l : atoms.ladders) lad = unite(lad, l.trace);

  EssFinVerdict v;
  if (!boundedness(difference(rest, lad)).bounded) {
    v.obstruction = "K ∩ ⋃F unbounded, members bounded";
    return v;
  }
  for (std::size_t j = 0; j < atoms.ladders.size(); ++j) {
    if (auto why = ladder_obstruction(atoms, j, rest, fin, per)) {
      v.obstruction = *why;
      return v;
    }
  }

  // Witness: finite members, the ladders at a common level, and the periodic
  // members meeting what is left.
  for (int m = 0; m <= 62; ++m) {
    long level = 1L << m;
    std::vector<RealSet> chosen;
    RealSet covered = fin;
    for (const auto& l : atoms.ladders) {
      RealSet mem = intersect(ladder_member(l.fam, level), l.window);
      chosen.push_back(mem);
      covered = unite(covered, mem);
    }
    RealSet left = difference(t, covered);
    if (!boundedness(left).bounded || !is_subset(left, per)) continue;
    if (!left.is_empty()) {
      Rational lo = infimum(left)->value(), hi = supremum(left)->value();
      for (const auto& p : atoms.periodic) {
        if (p.fam.seed.is_empty()) continue;
        auto [k0, k1] = index_bounds(p.fam, lo, hi);
        for (long i = k0; i <= k1; ++i) {
          RealSet mem = intersect(periodic_member(p.fam, i), p.window);
          if (!intersect(mem, left).is_empty()) chosen.push_back(mem);
        }
      }
    }
    for (const auto& s : atoms.finite)
      if (!intersect(s, t).is_empty()) chosen.push_back(s);
    std::erase_if(chosen, [&](const RealSet& s) { return intersect(s, t).is_empty(); });
    sort_unique(chosen);
    if (!is_subset(t, union_all(chosen))) throw std::logic_error("essential finiteness witness does not cover K");
    v.essentially_finite = true;
    v.witness = std::move(chosen);
    return v;
  }
  throw std::logic_error("no essential finiteness witness found below level 2^62");
}

EssFinVerdict ess_finite(const FamilySpec& f) { return ess_finite_on(f, union_of(f)); }

bool locally_ess_finite(const FamilySpec& f) {
  Atoms atoms;
  flatten(f, RealSet::reals(), atoms);
  RealSet all = union_of(f);
  RealSet fin = union_all(atoms.finite);
  RealSet per;
  for (const auto& p : atoms.periodic) per = unite(per, p.trace);
  for (std::size_t j = 0; j < atoms.ladders.size(); ++j) {
    if (!atoms.ladders[j].fam.limit.is_finite()) continue;
    if (ladder_obstruction(atoms, j, difference(all, fin), fin, per)) return false;
  }
  return true;
}

FamilySpec restrict_family(const FamilySpec& f, const RealSet& y) {
  if (y == RealSet::reals()) return f;
  if (const auto* fin = std::get_if<FiniteFamily>(&f.node)) {
    std::vector<RealSet> out;
    for (const auto& m : fin->members) {
      RealSet r = intersect(m, y);
      if (!r.is_empty()) out.push_back(r);
    }
    sort_unique(out);
    return FamilySpec::finite(std::move(out));
  }
  return FamilySpec::restricted(f, y);
}

// ---- rings and generated topologies ----

namespace {

std::vector<RealSet> close_pairwise(std::vector<RealSet> sets, bool unions, bool intersections) {
  sort_unique(sets);
  std::set<std::string> seen;
  for (const auto& s : sets) seen.insert(to_string(s));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RealSet> fresh;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (unions) {
          RealSet u = unite(sets[i], sets[j]);
          if (seen.insert(to_string(u)).second) fresh.push_back(u);
        }
        if (intersections) {
          RealSet m = intersect(sets[i], sets[j]);
          if (seen.insert(to_string(m)).second) fresh.push_back(m);
        }
      }
    if (!fresh.empty()) {
      grew = true;
      sets.insert(sets.end(), fresh.begin(), fresh.end());
      if (sets.size() > kOpenCap) throw std::length_error("lattice closure exceeds the size cap");
    }
  }
  sort_unique(sets);
  return sets;
}

}  // namespace

std::vector<RealSet> full_ring_closure(const std::vector<RealSet>& generators, const RealSet& y) {
  std::vector<RealSet> sets = generators;
  sets.push_back(RealSet());
  sets.push_back(y);
  return close_pairwise(std::move(sets), true, true);
}

std::vector<RealSet> gen_topology(const std::vector<RealSet>& generators) {
  std::vector<RealSet> meets = generators;
  meets.push_back(RealSet::reals());
  meets = close_pairwise(std::move(meets), false, true);
  meets.push_back(RealSet());
  return close_pairwise(std::move(meets), true, false);
}

bool gen_topology_member(const std::vector<RealSet>& generators, const RealSet& u) {
  auto top = gen_topology(generators);
  return std::find(top.begin(), top.end(), u) != top.end();
}

EfVerdict ef_member(const FamilySpec& f, const std::function<bool(const RealSet&)>& in_l, const BaseFn& base,
                    long n_max) {
  EfVerdict v;
  for (const auto& m : representative_members(f)) {
    if (!in_l(m)) {
      v.precondition_ok = false;
      v.note = "member " + to_string(m) + " is outside L";
      return v;
    }
  }
  std::optional<RealSet> prev;
  for (long n = 0; n <= n_max; ++n) {
    RealSet b = base(n);
    v.checked_upto = n;
    if (prev && *prev == b) {
      v.note = "base constant from n = " + std::to_string(n - 1);
      v.member = true;
      return v;
    }
    auto e = ess_finite_on(restrict_family(f, b), b);
    if (!e.essentially_finite) {
      v.note = "not essentially finite on B_" + std::to_string(n) + " = " + to_string(b) + ": " + e.obstruction;
      return v;
    }
    prev = b;
  }
  v.member = true;
  v.note = "checked for n <= " + std::to_string(n_max);
  return v;
}

// ---- bounded generation ----

std::string_view to_string(PlusRule r) {
  switch (r) {
    case PlusRule::Finiteness: return "finiteness";
    case PlusRule::Stability: return "stability";
    case PlusRule::Transitivity: return "transitivity";
    case PlusRule::Saturation: return "saturation";
    case PlusRule::Regularity: return "regularity";
  }
  return "?";
}

namespace {

ExplicitFamily normalized_family(ExplicitFamily f) {
  sort_unique(f);
  return f;
}

bool has_open(const CovCollection& c, const RealSet& s) {
  return std::binary_search(c.opens.begin(), c.opens.end(), s, canonical_less);
}

bool family_less(const ExplicitFamily& a, const ExplicitFamily& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

bool has_family(const CovCollection& c, const ExplicitFamily& f) {
  return std::binary_search(c.families.begin(), c.families.end(), f, family_less);
}

void tidy(CovCollection& c) {
  sort_unique(c.opens);
  for (auto& f : c.families) f = normalized_family(std::move(f));
  std::sort(c.families.begin(), c.families.end(), family_less);
  c.families.erase(std::unique(c.families.begin(), c.families.end()), c.families.end());
  if (c.opens.size() > kOpenCap) {
    c.opens.resize(kOpenCap);
    c.truncated = true;
  }
  if (c.families.size() > kFamilyCap) {
    c.families.resize(kFamilyCap);
    c.truncated = true;
  }
}

void add_family(CovCollection& c, ExplicitFamily f) {
  for (const auto& m : f) c.opens.push_back(m);
  c.families.push_back(std::move(f));
}

}  // namespace

CovCollection CovCollection::from(const std::vector<FamilySpec>& psi, const RealSet& carrier,
                                  const std::vector<RealSet>& extra_opens) {
  CovCollection c;
  c.carrier = carrier;
  for (const auto& f : psi) {
    auto e = explicit_members(f);
    if (!e) throw ConstructionError("generation needs finitely presented families, got " + to_string(f));
    add_family(c, *e);
  }
  for (const auto& o : extra_opens) c.opens.push_back(o);
  tidy(c);
  return c;
}

CovCollection plus_step(const CovCollection& psi, PlusRule rule) {
  CovCollection c = psi;
  switch (rule) {
    case PlusRule::Finiteness: {
      // Unions and intersections of every finite subfamily of the opens.
      std::vector<RealSet> base = psi.opens;
      try {
        auto unions = close_pairwise(base, true, false);
        auto meets = close_pairwise(base, false, true);
        c.opens.insert(c.opens.end(), unions.begin(), unions.end());
        c.opens.insert(c.opens.end(), meets.begin(), meets.end());
      } catch (const std::length_error&) {
        c.truncated = true;
      }
      c.opens.push_back(RealSet());
      c.opens.push_back(psi.carrier);
      break;
    }
    case PlusRule::Stability:
      for (const auto& fam : psi.families)
        for (const auto& v : psi.opens) {
          ExplicitFamily g;
          for (const auto& u : fam) g.push_back(intersect(u, v));
          add_family(c, normalized_family(std::move(g)));
          if (c.families.size() > 4 * kFamilyCap) break;
        }
      break;
    case PlusRule::Transitivity:
      for (const auto& fam : psi.families) {
        ExplicitFamily composed;
        bool ok = true;
        for (const auto& u : fam) {
          auto it = std::find_if(psi.families.begin(), psi.families.end(),
                                 [&](const ExplicitFamily& g) { return union_all(g) == u; });
          if (it == psi.families.end()) {
            ok = false;
            break;
          }
          composed.insert(composed.end(), it->begin(), it->end());
        }
        if (ok) add_family(c, normalized_family(std::move(composed)));
      }
      break;
    case PlusRule::Saturation:
      for (const auto& cand : psi.candidate_families) {
        if (!std::all_of(cand.begin(), cand.end(), [&](const RealSet& u) { return has_open(psi, u); })) continue;
        RealSet target = union_all(cand);
        for (const auto& v : psi.families) {
          if (union_all(v) != target) continue;
          bool refines = std::all_of(v.begin(), v.end(), [&](const RealSet& s) {
            return std::any_of(cand.begin(), cand.end(), [&](const RealSet& u) { return is_subset(s, u); });
          });
          if (refines) {
            add_family(c, normalized_family(cand));
            break;
          }
        }
      }
      break;
    case PlusRule::Regularity:
      for (const auto& v : psi.candidate_sets)
        for (const auto& fam : psi.families) {
          if (!is_subset(v, union_all(fam))) continue;
          bool local = std::all_of(fam.begin(), fam.end(), [&](const RealSet& u) { return has_open(psi, intersect(v, u)); });
          if (local) {
            c.opens.push_back(v);
            break;
          }
        }
      break;
  }
  tidy(c);
  return c;
}

CovCollection generate_upto(const CovCollection& psi, long k, long depth_cap) {
  if (k > depth_cap)
    throw std::out_of_range("generation depth " + std::to_string(k) + " exceeds the cap " +
                            std::to_string(depth_cap));
  CovCollection c = psi;
  for (long i = 0; i < k; ++i) {
    CovCollection next = c;
    for (auto r : {PlusRule::Finiteness, PlusRule::Stability, PlusRule::Transitivity, PlusRule::Saturation,
                   PlusRule::Regularity}) {
      CovCollection step = plus_step(c, r);
      next.opens.insert(next.opens.end(), step.opens.begin(), step.opens.end());
      next.families.insert(next.families.end(), step.families.begin(), step.families.end());
      next.truncated = next.truncated || step.truncated;
    }
    tidy(next);
    if (next == c) break;
    c = std::move(next);
  }
  return c;
}

GenVerdict member_generated(const FamilySpec& f, const CovCollection& psi, long k, long depth_cap) {
  GenVerdict v;
  if (k > depth_cap) {
    v.truncated = true;
    v.depth = depth_cap;
    v.note = "requested depth " + std::to_string(k) + " exceeds the cap " + std::to_string(depth_cap);
    return v;
  }
  auto members = explicit_members(f);
  if (!members) {
    v.depth = k;
    v.note = "not found within depth " + std::to_string(k) + ": family is not finitely presented";
    return v;
  }
  ExplicitFamily target = normalized_family(*members);
  CovCollection prev = psi;
  for (long i = 0; i <= k; ++i) {
    CovCollection cur = i == 0 ? psi : generate_upto(prev, 1, depth_cap);
    v.truncated = v.truncated || cur.truncated;
    bool explicit_hit = has_family(cur, target);
    bool by_finiteness =
        i >= 1 && std::all_of(target.begin(), target.end(), [&](const RealSet& u) { return has_open(prev, u); });
    if (explicit_hit || by_finiteness) {
      v.found = true;
      v.depth = i;
      v.note = explicit_hit ? "explicit at depth " + std::to_string(i)
                            : "finite family of opens present at depth " + std::to_string(i - 1);
      return v;
    }
    prev = std::move(cur);
  }
  v.depth = k;
  v.note = "not found within depth " + std::to_string(k);
  return v;
}

}  // namespace gts
