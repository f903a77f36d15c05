#include "gts/realset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace gts {

namespace {

const ExtRat kNegInf = ExtRat::neg_inf();
const ExtRat kPosInf = ExtRat::pos_inf();

}  // namespace

Interval Interval::make(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed) {
  if (lo.is_pos_inf() || hi.is_neg_inf())
    throw ConstructionError("interval end at the wrong infinity");
  if (!lo.is_finite() && lo_closed) throw ConstructionError("closed infinite lower end");
  if (!hi.is_finite() && hi_closed) throw ConstructionError("closed infinite upper end");
  if (hi < lo) throw ConstructionError("interval with lo > hi: " + to_string(lo) + " > " + to_string(hi));
  if (lo == hi && !(lo_closed && hi_closed))
    throw ConstructionError("empty degenerate interval at " + to_string(lo));
  return Interval{lo, hi, lo_closed, hi_closed};
}

std::string to_string(const Interval& i) {
  if (i.is_point()) return "{" + to_string(i.lo) + "}";
  return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) +
         (i.hi_closed ? "]" : ")");
}

std::string_view to_string(TopologyKind t) {
  switch (t) {
    case TopologyKind::Nat: return "Nat";
    case TopologyKind::Upper: return "Upper";
    case TopologyKind::Lower: return "Lower";
    case TopologyKind::SorgR: return "SorgR";
    case TopologyKind::SorgL: return "SorgL";
    case TopologyKind::Discrete: return "Discrete";
  }
  return "?";
}

std::optional<TopologyKind> parse_topology(std::string_view name) {
  for (auto t : {TopologyKind::Nat, TopologyKind::Upper, TopologyKind::Lower, TopologyKind::SorgR,
                 TopologyKind::SorgL, TopologyKind::Discrete})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

namespace detail {

Cell to_cell(const Interval& i) {
  return Cell{Bound{i.lo, i.lo_closed ? 0 : 1}, Bound{i.hi, i.hi_closed ? 0 : -1}};
}

Interval to_interval(const Cell& c) {
  assert(!c.empty());
  return Interval{c.lo.v, c.hi.v, c.lo.v.is_finite() && c.lo.eps == 0,
                  c.hi.v.is_finite() && c.hi.eps == 0};
}

Cell closed_window(const Rational& a, const Rational& b) { return Cell{{a, 0}, {b, 0}}; }
Cell half_open_window(const Rational& a, const Rational& b) { return Cell{{a, 0}, {b, -1}}; }

namespace {

// Infinite ends are always open; this keeps the eps of an infinite bound fixed
// so that structural equality is not disturbed by arithmetic on bounds.
Bound fix_lower(Bound b) {
  if (!b.v.is_finite()) b.eps = 1;
  return b;
}
Bound fix_upper(Bound b) {
  if (!b.v.is_finite()) b.eps = -1;
  return b;
}

bool mergeable(const Cell& cur, const Cell& next) {
  if (next.lo.v < cur.hi.v) return true;
  if (next.lo.v == cur.hi.v) return next.lo.eps <= cur.hi.eps + 1;
  return false;
}

}  // namespace

CellList normalize_cells(CellList cells) {
  std::erase_if(cells, [](const Cell& c) { return c.empty(); });
  for (auto& c : cells) {
    c.lo = fix_lower(c.lo);
    c.hi = fix_upper(c.hi);
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
  CellList out;
  for (const auto& c : cells) {
    if (!out.empty() && mergeable(out.back(), c)) {
      if (out.back().hi < c.hi) out.back().hi = c.hi;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

CellList cells_union(const CellList& a, const CellList& b) {
  CellList all = a;
  all.insert(all.end(), b.begin(), b.end());
  return normalize_cells(std::move(all));
}

CellList cells_intersect(const CellList& a, const CellList& b) {
  CellList out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Cell c{std::max(a[i].lo, b[j].lo), std::min(a[i].hi, b[j].hi)};
    if (!c.empty()) out.push_back(c);
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

CellList cells_complement(const CellList& a) {
  CellList out;
  Bound start{kNegInf, 1};
  bool open_start = true;
  for (const auto& c : a) {
    if (!(open_start && c.lo.v.is_neg_inf())) {
      Cell gap{start, Bound{c.lo.v, c.lo.eps - 1}};
      if (!gap.empty()) out.push_back(gap);
    }
    open_start = false;
    start = Bound{c.hi.v, c.hi.eps + 1};
  }
  if (a.empty()) return CellList{Cell{{kNegInf, 1}, {kPosInf, -1}}};
  if (!a.back().hi.v.is_pos_inf()) out.push_back(Cell{start, Bound{kPosInf, -1}});
  return out;
}

CellList cells_difference(const CellList& a, const CellList& b) {
  return cells_intersect(a, cells_complement(b));
}

CellList cells_symdiff(const CellList& a, const CellList& b) {
  return cells_union(cells_difference(a, b), cells_difference(b, a));
}

CellList cells_clip(const CellList& a, const Cell& window) {
  return cells_intersect(a, CellList{window});
}

CellList cells_affine(const CellList& a, const Rational& scale, const Rational& offset) {
  if (scale == 0) throw std::invalid_argument("affine map with zero scale");
  auto map = [&](const ExtRat& v) -> ExtRat {
    if (!v.is_finite()) return scale > 0 ? v : -v;
    return ExtRat(Rational(scale * v.value() + offset));
  };
  CellList out;
  out.reserve(a.size());
  for (const auto& c : a) {
    if (scale > 0)
      out.push_back(Cell{{map(c.lo.v), c.lo.eps}, {map(c.hi.v), c.hi.eps}});
    else
      out.push_back(Cell{{map(c.hi.v), -c.hi.eps}, {map(c.lo.v), -c.lo.eps}});
  }
  return normalize_cells(std::move(out));
}

bool cells_contain(const CellList& a, const Rational& x) {
  Bound b{ExtRat(x), 0};
  auto it = std::upper_bound(a.begin(), a.end(), b,
                             [](const Bound& v, const Cell& c) { return v < c.lo; });
  if (it == a.begin()) return false;
  --it;
  return it->lo <= b && b <= it->hi;
}

bool Pattern::is_full() const {
  return cells.size() == 1 && cells[0] == half_open_window(0, period);
}

Pattern empty_pattern() { return Pattern{Rational(1), {}}; }
Pattern full_pattern() { return Pattern{Rational(1), {half_open_window(0, 1)}}; }

CellList expand(const Pattern& p, const Cell& window) {
  if (window.empty() || p.cells.empty()) return {};
  if (!window.lo.v.is_finite() || !window.hi.v.is_finite())
    throw std::logic_error("expand() needs a bounded window");
  if (p.is_full()) return {window};
  Rational kmin = rat_floor(Rational(window.lo.v.value() / p.period)) - 1;
  Rational kmax = rat_floor(Rational(window.hi.v.value() / p.period)) + 1;
  CellList out;
  for (Rational k = kmin; k <= kmax; k += 1) {
    Rational off = k * p.period;
    for (const auto& c : p.cells)
      out.push_back(Cell{{c.lo.v + off, c.lo.eps}, {c.hi.v + off, c.hi.eps}});
  }
  return cells_clip(normalize_cells(std::move(out)), window);
}

Pattern minimize(const Pattern& p) {
  if (p.cells.empty()) return empty_pattern();
  if (p.is_full()) return full_pattern();
  long n = static_cast<long>(p.cells.size()) + 1;
  for (long m = n; m >= 2; --m) {
    Rational q = p.period / m;
    CellList shifted = cells_affine(expand(p, half_open_window(q, q + p.period)), Rational(1), -q);
    if (shifted == p.cells) return Pattern{q, expand(p, half_open_window(0, q))};
  }
  return p;
}

CellList window_set(const Layout& l, const Cell& window) {
  CellList out;
  Cell wl{std::max(window.lo, Bound{kNegInf, 1}), std::min(window.hi, Bound{l.cut_lo, -1})};
  if (!wl.empty()) {
    auto part = expand(l.left, wl);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto mid = cells_clip(l.core, window);
  out.insert(out.end(), mid.begin(), mid.end());
  Cell wr{std::max(window.lo, Bound{l.cut_hi, 1}), std::min(window.hi, Bound{kPosInf, -1})};
  if (!wr.empty()) {
    auto part = expand(l.right, wr);
    out.insert(out.end(), part.begin(), part.end());
  }
  return normalize_cells(std::move(out));
}

Layout canonical(Layout l) {
  l.left = minimize(l.left);
  l.right = minimize(l.right);
  if (l.cut_hi < l.cut_lo) throw std::logic_error("layout cuts out of order");
  const Cell mid = closed_window(l.cut_lo, l.cut_hi);
  l.core = cells_clip(normalize_cells(std::move(l.core)), mid);
  const bool same = l.left == l.right;

  // The right cut is the supremum of the region where the set disagrees with
  // its right pattern; the left cut is the infimum of the disagreement with
  // the left pattern.
  std::optional<Rational> cut_r, cut_l;
  if (auto d = cells_symdiff(l.core, expand(l.right, mid)); !d.empty()) {
    cut_r = d.back().hi.v.value();
  } else if (!same) {
    Rational q = rational_lcm(l.left.period, l.right.period);
    Cell w{{l.cut_lo - q, 0}, {l.cut_lo, -1}};
    auto dd = cells_symdiff(expand(l.left, w), expand(l.right, w));
    assert(!dd.empty());
    cut_r = dd.back().hi.v.value();
  }
  if (auto d = cells_symdiff(l.core, expand(l.left, mid)); !d.empty()) {
    cut_l = d.front().lo.v.value();
  } else if (!same) {
    Rational q = rational_lcm(l.left.period, l.right.period);
    Cell w{{l.cut_hi, 1}, {l.cut_hi + q, 0}};
    auto dd = cells_symdiff(expand(l.left, w), expand(l.right, w));
    assert(!dd.empty());
    cut_l = dd.front().lo.v.value();
  }
  if (!cut_r || !cut_l) {
    // Purely periodic (including the empty set and the whole line).
    Pattern p = l.right;
    CellList core = expand(p, closed_window(0, 0));
    return Layout{p, Rational(0), std::move(core), Rational(0), p};
  }
  Rational lo = *cut_l, hi = *cut_r;
  if (hi < lo) hi = lo;
  CellList core = window_set(l, closed_window(lo, hi));
  return Layout{l.left, lo, std::move(core), hi, l.right};
}

}  // namespace detail

using detail::Bound;
using detail::Cell;
using detail::CellList;
using detail::Layout;
using detail::Pattern;

RealSet::RealSet()
    : layout_{detail::empty_pattern(), Rational(0), {}, Rational(0), detail::empty_pattern()} {}

RealSet RealSet::reals() {
  static const RealSet line(Layout{detail::full_pattern(), Rational(0), {detail::closed_window(0, 0)}, Rational(0),
                                   detail::full_pattern()});
  return line;
}

RealSet RealSet::from_layout(Layout l) { return RealSet(detail::canonical(std::move(l))); }

namespace {

Layout interval_layout(const Interval& raw) {
  Interval i = Interval::make(raw.lo, raw.lo_closed, raw.hi, raw.hi_closed);
  Rational lo = i.lo.is_finite() ? i.lo.value() : (i.hi.is_finite() ? i.hi.value() : Rational(0));
  Rational hi = i.hi.is_finite() ? i.hi.value() : lo;
  Cell c = detail::to_cell(i);
  return Layout{i.lo.is_finite() ? detail::empty_pattern() : detail::full_pattern(), lo,
                detail::cells_clip(CellList{c}, detail::closed_window(lo, hi)), hi,
                i.hi.is_finite() ? detail::empty_pattern() : detail::full_pattern()};
}

Pattern tail_pattern(const PeriodicTail& t) {
  if (t.period <= 0) throw ConstructionError("tail period must be positive");
  CellList cells;
  for (const auto& raw : t.pattern) {
    Interval i = Interval::make(raw.lo, raw.lo_closed, raw.hi, raw.hi_closed);
    Cell c = detail::to_cell(i);
    if (!i.bounded() || c.lo < Bound{Rational(0), 0} || Bound{t.period, -1} < c.hi)
      throw ConstructionError("tail pattern interval " + to_string(i) + " outside [0, period)");
    cells.push_back(c);
  }
  return Pattern{t.period, detail::normalize_cells(std::move(cells))};
}

using CellOp = std::function<CellList(const CellList&, const CellList&)>;

RealSet combine(const RealSet& a, const RealSet& b, const CellOp& op) {
  const Layout& la = a.layout();
  const Layout& lb = b.layout();
  Rational lo = std::min(la.cut_lo, lb.cut_lo);
  Rational hi = std::max(la.cut_hi, lb.cut_hi);
  Cell mid = detail::closed_window(lo, hi);
  auto side = [&](const Pattern& pa, const Pattern& pb) {
    Rational q = rational_lcm(pa.period, pb.period);
    Cell w = detail::half_open_window(0, q);
    return Pattern{q, op(detail::expand(pa, w), detail::expand(pb, w))};
  };
  Layout r{side(la.left, lb.left), lo, op(detail::window_set(la, mid), detail::window_set(lb, mid)), hi,
           side(la.right, lb.right)};
  return RealSet::from_layout(std::move(r));
}

}  // namespace

RealSet RealSet::of(const Interval& i) { return from_layout(interval_layout(i)); }

RealSet RealSet::points(std::span<const Rational> qs) {
  std::vector<Interval> raw;
  for (const auto& q : qs) raw.push_back(Interval::point(q));
  return normalize(raw);
}

RealSet RealSet::normalize(std::span<const Interval> raw, const std::optional<PeriodicTail>& left_tail,
                           const std::optional<PeriodicTail>& right_tail) {
  RealSet acc;
  for (const auto& i : raw) acc = unite(acc, RealSet(detail::canonical(interval_layout(i))));
  if (left_tail) {
    Pattern p = tail_pattern(*left_tail);
    acc = unite(acc, from_layout(Layout{p, left_tail->cut, {}, left_tail->cut, detail::empty_pattern()}));
  }
  if (right_tail) {
    Pattern p = tail_pattern(*right_tail);
    acc = unite(acc, from_layout(Layout{detail::empty_pattern(), right_tail->cut, {}, right_tail->cut, p}));
  }
  return acc;
}

std::vector<Interval> RealSet::core() const {
  CellList cells = layout_.core;
  if (layout_.left.is_full()) cells.push_back(Cell{{kNegInf, 1}, {layout_.cut_lo, -1}});
  if (layout_.right.is_full()) cells.push_back(Cell{{layout_.cut_hi, 1}, {kPosInf, -1}});
  std::vector<Interval> out;
  for (const auto& c : detail::normalize_cells(std::move(cells))) out.push_back(detail::to_interval(c));
  return out;
}

namespace {

std::optional<PeriodicTail> view_tail(const Pattern& p, const Rational& cut) {
  if (p.is_empty() || p.is_full()) return std::nullopt;
  PeriodicTail t{{}, p.period, cut};
  for (const auto& c : p.cells) t.pattern.push_back(detail::to_interval(c));
  return t;
}

}  // namespace

std::optional<PeriodicTail> RealSet::left_tail() const { return view_tail(layout_.left, layout_.cut_lo); }
std::optional<PeriodicTail> RealSet::right_tail() const { return view_tail(layout_.right, layout_.cut_hi); }

bool RealSet::is_empty() const {
  return layout_.left.is_empty() && layout_.right.is_empty() && layout_.core.empty();
}

bool RealSet::has_tails() const { return left_tail().has_value() || right_tail().has_value(); }

RealSet unite(const RealSet& a, const RealSet& b) {
  if (a.is_empty() || b == RealSet::reals()) return b;
  if (b.is_empty() || a == RealSet::reals()) return a;
  return combine(a, b, detail::cells_union);
}
RealSet intersect(const RealSet& a, const RealSet& b) {
  if (a.is_empty() || b == RealSet::reals()) return a;
  if (b.is_empty() || a == RealSet::reals()) return b;
  return combine(a, b, detail::cells_intersect);
}
RealSet difference(const RealSet& a, const RealSet& b) {
  if (a.is_empty() || b.is_empty()) return a;
  if (b == RealSet::reals()) return RealSet{};
  return combine(a, b, detail::cells_difference);
}
RealSet symmetric_difference(const RealSet& a, const RealSet& b) {
  return combine(a, b, detail::cells_symdiff);
}

RealSet complement(const RealSet& a) {
  const Layout& l = a.layout();
  auto flip = [](const Pattern& p) {
    return Pattern{p.period, detail::cells_clip(detail::cells_complement(p.cells),
                                                detail::half_open_window(0, p.period))};
  };
  Layout r{flip(l.left), l.cut_lo,
           detail::cells_clip(detail::cells_complement(l.core), detail::closed_window(l.cut_lo, l.cut_hi)),
           l.cut_hi, flip(l.right)};
  return RealSet::from_layout(std::move(r));
}

bool is_subset(const RealSet& a, const RealSet& b) { return difference(a, b).is_empty(); }

std::optional<ExtRat> infimum(const RealSet& a) {
  const Layout& l = a.layout();
  if (!l.left.is_empty()) return kNegInf;
  if (!l.core.empty()) return l.core.front().lo.v;
  if (!l.right.is_empty()) {
    auto cells = detail::expand(l.right, Cell{{l.cut_hi, 1}, {l.cut_hi + l.right.period, 0}});
    return cells.front().lo.v;
  }
  return std::nullopt;
}

std::optional<ExtRat> supremum(const RealSet& a) {
  const Layout& l = a.layout();
  if (!l.right.is_empty()) return kPosInf;
  if (!l.core.empty()) return l.core.back().hi.v;
  if (!l.left.is_empty()) {
    auto cells = detail::expand(l.left, Cell{{l.cut_lo - l.left.period, 0}, {l.cut_lo, -1}});
    return cells.back().hi.v;
  }
  return std::nullopt;
}

Boundedness boundedness(const RealSet& a) {
  Boundedness b;
  auto lo = infimum(a);
  auto hi = supremum(a);
  b.bounded_below = !lo || lo->is_finite();
  b.bounded_above = !hi || hi->is_finite();
  b.bounded = b.bounded_below && b.bounded_above;
  const Layout& l = a.layout();
  b.finite = l.left.is_empty() && l.right.is_empty() &&
             std::all_of(l.core.begin(), l.core.end(), [](const Cell& c) { return c.lo.v == c.hi.v; });
  return b;
}

namespace {

// Closure/interior rule of a local topology applied to maximal components.
CellList local_rule(const CellList& cells, TopologyKind t, bool want_closure) {
  CellList out;
  for (Cell c : cells) {
    bool lo_fin = c.lo.v.is_finite(), hi_fin = c.hi.v.is_finite();
    switch (t) {
      case TopologyKind::Nat:
        if (want_closure) {
          if (lo_fin) c.lo.eps = 0;
          if (hi_fin) c.hi.eps = 0;
        } else {
          if (lo_fin) c.lo.eps = 1;
          if (hi_fin) c.hi.eps = -1;
        }
        break;
      case TopologyKind::SorgR:
        if (want_closure) {
          if (lo_fin) c.lo.eps = 0;
        } else if (hi_fin) {
          c.hi.eps = -1;
        }
        break;
      case TopologyKind::SorgL:
        if (want_closure) {
          if (hi_fin) c.hi.eps = 0;
        } else if (lo_fin) {
          c.lo.eps = 1;
        }
        break;
      default:
        break;
    }
    out.push_back(c);
  }
  return detail::normalize_cells(std::move(out));
}

RealSet apply_local(const RealSet& a, TopologyKind t, bool want_closure) {
  const Layout& l = a.layout();
  const Rational& pl = l.left.period;
  const Rational& pr = l.right.period;
  auto side = [&](const Pattern& p) {
    CellList w = detail::expand(p, detail::closed_window(-p.period, 2 * p.period));
    return Pattern{p.period,
                   detail::cells_clip(local_rule(w, t, want_closure), detail::half_open_window(0, p.period))};
  };
  Rational lo = l.cut_lo - pl, hi = l.cut_hi + pr;
  CellList w = detail::window_set(l, detail::closed_window(l.cut_lo - 2 * pl, l.cut_hi + 2 * pr));
  CellList core = detail::cells_clip(local_rule(w, t, want_closure), detail::closed_window(lo, hi));
  return RealSet::from_layout(Layout{side(l.left), lo, std::move(core), hi, side(l.right)});
}

RealSet left_ray(const ExtRat& s, bool closed) {
  return RealSet::of(Interval::make(ExtRat::neg_inf(), false, s, closed));
}
RealSet right_ray(const ExtRat& s, bool closed) {
  return RealSet::of(Interval::make(s, closed, ExtRat::pos_inf(), false));
}

}  // namespace

RealSet closure(const RealSet& a, TopologyKind t) {
  switch (t) {
    case TopologyKind::Discrete: return a;
    case TopologyKind::Upper: {
      // closed sets: empty, R and [b, +inf)
      auto i = infimum(a);
      if (!i) return RealSet();
      if (i->is_neg_inf()) return RealSet::reals();
      return right_ray(*i, true);
    }
    case TopologyKind::Lower: {
      auto s = supremum(a);
      if (!s) return RealSet();
      if (s->is_pos_inf()) return RealSet::reals();
      return left_ray(*s, true);
    }
    default: return apply_local(a, t, true);
  }
}

RealSet interior(const RealSet& a, TopologyKind t) {
  switch (t) {
    case TopologyKind::Discrete: return a;
    case TopologyKind::Upper: {
      // open sets: empty, R and (-inf, a)
      auto s = infimum(complement(a));
      if (!s) return RealSet::reals();
      if (s->is_neg_inf()) return RealSet();
      return left_ray(*s, false);
    }
    case TopologyKind::Lower: {
      auto s = supremum(complement(a));
      if (!s) return RealSet::reals();
      if (s->is_pos_inf()) return RealSet();
      return right_ray(*s, false);
    }
    default: return apply_local(a, t, false);
  }
}

bool is_open(const RealSet& a, TopologyKind t) { return interior(a, t) == a; }

bool contains_point(const RealSet& a, const Rational& x) {
  const Layout& l = a.layout();
  auto in_pattern = [&](const Pattern& p) {
    if (p.cells.empty()) return false;
    Rational r = x - rat_floor(Rational(x / p.period)) * p.period;
    return detail::cells_contain(p.cells, r);
  };
  if (x < l.cut_lo) return in_pattern(l.left);
  if (x > l.cut_hi) return in_pattern(l.right);
  return detail::cells_contain(l.core, x);
}

std::vector<Rational> sample_points(const RealSet& a, const Interval& window, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("sample step must be positive");
  if (!window.bounded()) throw std::invalid_argument("sample window must be bounded");
  std::vector<Rational> out;
  Cell w = detail::to_cell(window);
  for (Rational x = window.lo.value(); x <= window.hi.value(); x += step) {
    Bound b{ExtRat(x), 0};
    if (w.lo <= b && b <= w.hi && contains_point(a, x)) out.push_back(x);
  }
  return out;
}

RealSet affine_image(const RealSet& a, const Rational& scale, const Rational& offset) {
  if (scale == 0) throw std::invalid_argument("affine_image with zero scale");
  const Layout& l = a.layout();
  auto map_pattern = [&](const Pattern& p) {
    Rational q = abs(scale) * p.period;
    Rational x0 = -offset / scale;
    CellList src = detail::expand(p, detail::closed_window(x0 - 2 * p.period, x0 + 2 * p.period));
    return Pattern{q, detail::cells_clip(detail::cells_affine(src, scale, offset),
                                         detail::half_open_window(0, q))};
  };
  CellList core = detail::cells_affine(l.core, scale, offset);
  Rational c1 = scale * l.cut_lo + offset, c2 = scale * l.cut_hi + offset;
  if (scale > 0) return RealSet::from_layout(Layout{map_pattern(l.left), c1, core, c2, map_pattern(l.right)});
  return RealSet::from_layout(Layout{map_pattern(l.right), c2, core, c1, map_pattern(l.left)});
}

RealSet shift(const RealSet& a, const Rational& offset) { return affine_image(a, Rational(1), offset); }

std::vector<Interval> components_in(const RealSet& a, const Interval& window) {
  if (!window.bounded()) throw std::invalid_argument("components_in needs a bounded window");
  std::vector<Interval> out;
  for (const auto& c : detail::window_set(a.layout(), detail::to_cell(window)))
    out.push_back(detail::to_interval(c));
  return out;
}

bool finitely_many_components(const RealSet& a) { return !a.has_tails(); }

namespace {

std::string tail_string(const PeriodicTail& t, bool left) {
  std::string s = left ? "lefttail(x < " : "righttail(x > ";
  s += to_string(t.cut) + "; period " + to_string(t.period) + "; ";
  for (std::size_t i = 0; i < t.pattern.size(); ++i) {
    if (i) s += " U ";
    s += to_string(t.pattern[i]);
  }
  return s + ")";
}

}  // namespace

std::string to_string(const RealSet& a) {
  std::vector<std::string> parts;
  if (auto t = a.left_tail()) parts.push_back(tail_string(*t, true));
  for (const auto& i : a.core()) parts.push_back(to_string(i));
  if (auto t = a.right_tail()) parts.push_back(tail_string(*t, false));
  if (parts.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += " U ";
    s += parts[i];
  }
  return s;
}

namespace {

std::strong_ordering compare_cells(const CellList& a, const CellList& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i].lo <=> b[i].lo; c != 0) return c;
    if (auto c = a[i].hi <=> b[i].hi; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_rationals(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_patterns(const Pattern& a, const Pattern& b) {
  if (auto c = compare_cells(a.cells, b.cells); c != 0) return c;
  return compare_rationals(a.period, b.period);
}

}  // namespace

// Fewer core cells first, then tails, then endpoints.
bool canonical_less(const RealSet& a, const RealSet& b) {
  const Layout &x = a.layout(), &y = b.layout();
  if (auto c = compare_cells(x.core, y.core); c != 0) return c < 0;
  if (auto c = compare_patterns(x.left, y.left); c != 0) return c < 0;
  if (auto c = compare_patterns(x.right, y.right); c != 0) return c < 0;
  if (auto c = compare_rationals(x.cut_lo, y.cut_lo); c != 0) return c < 0;
  return compare_rationals(x.cut_hi, y.cut_hi) < 0;
}

}  // namespace gts
