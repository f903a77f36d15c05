#ifndef GTS_REALSET_HPP
#define GTS_REALSET_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gts/rational.hpp"

namespace gts {

/// Raised when a set, interval, tail, family or schema is malformed.
class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked for a combination it does not support
/// (for example a symbolic ball of an approximate metric).
class UnsupportedOperation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Interval {
  ExtRat lo;
  ExtRat hi;
  bool lo_closed = false;
  bool hi_closed = false;

  /// Validating constructor: lo <= hi, infinite ends open, a degenerate
  /// interval must be a closed point.
  static Interval make(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed);
  static Interval closed(const Rational& a, const Rational& b) { return make(a, true, b, true); }
  static Interval open(const ExtRat& a, const ExtRat& b) { return make(a, false, b, false); }
  static Interval closed_open(const ExtRat& a, const ExtRat& b) { return make(a, true, b, false); }
  static Interval open_closed(const ExtRat& a, const ExtRat& b) { return make(a, false, b, true); }
  static Interval point(const Rational& q) { return make(q, true, q, true); }

  bool is_point() const { return lo == hi; }
  bool bounded() const { return lo.is_finite() && hi.is_finite(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& i);

/// The union over k in Z of (pattern + k*period), kept only below the cut
/// (left tail) or above it (right tail).
struct PeriodicTail {
  std::vector<Interval> pattern;
  Rational period;
  Rational cut;

  friend bool operator==(const PeriodicTail&, const PeriodicTail&) = default;
};

enum class TopologyKind { Nat, Upper, Lower, SorgR, SorgL, Discrete };

std::string_view to_string(TopologyKind t);
std::optional<TopologyKind> parse_topology(std::string_view name);

struct Boundedness {
  bool bounded = true;
  bool bounded_above = true;
  bool bounded_below = true;
  bool finite = true;

  friend bool operator==(const Boundedness&, const Boundedness&) = default;
};

namespace detail {

// Interval end in "infinitesimal" form: a lower end is (v, 0) when closed and
// (v, +1) when open; an upper end is (v, 0) when closed and (v, -1) when open.
struct Bound {
  ExtRat v;
  int eps = 0;

  friend bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.eps <=> b.eps;
  }
};

struct Cell {
  Bound lo;
  Bound hi;

  bool empty() const { return hi < lo; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Sorted, pairwise disjoint, non-mergeable cells.
using CellList = std::vector<Cell>;

Cell to_cell(const Interval& i);
Interval to_interval(const Cell& c);
Cell closed_window(const Rational& a, const Rational& b);
Cell half_open_window(const Rational& a, const Rational& b);

CellList normalize_cells(CellList cells);
CellList cells_union(const CellList& a, const CellList& b);
CellList cells_intersect(const CellList& a, const CellList& b);
CellList cells_complement(const CellList& a);
CellList cells_difference(const CellList& a, const CellList& b);
CellList cells_symdiff(const CellList& a, const CellList& b);
CellList cells_clip(const CellList& a, const Cell& window);
CellList cells_affine(const CellList& a, const Rational& scale, const Rational& offset);
bool cells_contain(const CellList& a, const Rational& x);

// One period of a periodic set: cells inside [0, period).
struct Pattern {
  Rational period{1};
  CellList cells;

  bool is_empty() const { return cells.empty(); }
  bool is_full() const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

Pattern empty_pattern();
Pattern full_pattern();
CellList expand(const Pattern& p, const Cell& window);
Pattern minimize(const Pattern& p);

// Eventually periodic set: left pattern for x < cut_lo, explicit cells on
// [cut_lo, cut_hi], right pattern for x > cut_hi.
struct Layout {
  Pattern left;
  Rational cut_lo;
  CellList core;
  Rational cut_hi;
  Pattern right;

  friend bool operator==(const Layout&, const Layout&) = default;
};

CellList window_set(const Layout& l, const Cell& window);
Layout canonical(Layout l);

}  // namespace detail

/// Exact subset of the real line: finitely many intervals with rational or
/// infinite ends, plus optional periodic tails towards -inf and +inf.
/// Values are always kept in canonical form, so == decides set equality.
class RealSet {
public:
  RealSet();

  static RealSet empty() { return RealSet(); }
  static RealSet reals();
  static RealSet of(const Interval& i);
  static RealSet point(const Rational& q) { return of(Interval::point(q)); }
  static RealSet points(std::span<const Rational> qs);

  /// Canonical form of the union of the raw intervals and tails.
  static RealSet normalize(std::span<const Interval> raw,
                           const std::optional<PeriodicTail>& left_tail = std::nullopt,
                           const std::optional<PeriodicTail>& right_tail = std::nullopt);
  static RealSet from_layout(detail::Layout l);

  /// Core intervals, including half-lines and the whole line.
  std::vector<Interval> core() const;
  std::optional<PeriodicTail> left_tail() const;
  std::optional<PeriodicTail> right_tail() const;

  bool is_empty() const;
  bool has_tails() const;
  const detail::Layout& layout() const { return layout_; }

  friend bool operator==(const RealSet&, const RealSet&) = default;

private:
  explicit RealSet(detail::Layout l) : layout_(std::move(l)) {}
  detail::Layout layout_;
};

RealSet unite(const RealSet& a, const RealSet& b);
RealSet intersect(const RealSet& a, const RealSet& b);
RealSet complement(const RealSet& a);
RealSet difference(const RealSet& a, const RealSet& b);
RealSet symmetric_difference(const RealSet& a, const RealSet& b);
bool is_subset(const RealSet& a, const RealSet& b);

Boundedness boundedness(const RealSet& a);
/// Greatest lower / least upper bound; nullopt for the empty set.
std::optional<ExtRat> infimum(const RealSet& a);
std::optional<ExtRat> supremum(const RealSet& a);

RealSet closure(const RealSet& a, TopologyKind t);
RealSet interior(const RealSet& a, TopologyKind t);
bool is_open(const RealSet& a, TopologyKind t);

bool contains_point(const RealSet& a, const Rational& x);
std::vector<Rational> sample_points(const RealSet& a, const Interval& window, const Rational& step);

/// Image under x -> scale*x + offset (scale != 0).
RealSet affine_image(const RealSet& a, const Rational& scale, const Rational& offset);
RealSet shift(const RealSet& a, const Rational& offset);

/// Maximal connected pieces of the set restricted to a bounded window.
std::vector<Interval> components_in(const RealSet& a, const Interval& window);

/// True iff the set has finitely many connected components.
bool finitely_many_components(const RealSet& a);

std::string to_string(const RealSet& a);
/// Deterministic total order used to sort collections of sets.
bool canonical_less(const RealSet& a, const RealSet& b);

}  // namespace gts

#endif  // GTS_REALSET_HPP
