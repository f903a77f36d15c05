#ifndef GTS_LINES_HPP
#define GTS_LINES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gts/covers.hpp"
#include "gts/qmetric.hpp"
#include "gts/realset.hpp"

namespace gts {

enum class LineFamily { Standard, Sorgenfrey, Upper };

enum class LineVariant {
  ut,
  om,
  st,
  lom,
  lst,
  slom,
  l_plus_om,
  l_minus_om,
  l_plus_st,
  l_minus_st,
  sl_plus_om,
  sl_minus_om,
  rom,
  uu,
  ul,
  uf,
};

struct LineId {
  LineFamily family = LineFamily::Standard;
  LineVariant variant = LineVariant::ut;

  friend bool operator==(const LineId&, const LineId&) = default;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

/// The 29 corpus lines: 13 standard, 13 Sorgenfrey, then uu, ul, uf.
const std::vector<LineId>& all_lines();
LineId line(LineFamily family, LineVariant variant);
LineId upper_line(LineVariant variant);
std::string to_string(LineId id);
/// Accepts "standard/lom", "sorgenfrey/l_plus_st", "uu".
std::optional<LineId> parse_line(std::string_view text);

TopologyKind line_topology(LineId id);

enum class MemberShape { TauOpen, FiniteUnion, LocallyFinite, NoLeftTail, NoRightTail, UpperOpen };
enum class FamilyRule {
  Any,
  EssFinite,
  LocallyEssFinite,
  LocallyEssFiniteAndFiniteBelowZero,
  LocallyEssFiniteAndFiniteAboveZero,
  EfUpperBounded,
  EfLowerBounded,
};

MemberShape member_shape(LineId id);
FamilyRule family_rule(LineId id);
std::string_view to_string(MemberShape s);
std::string_view to_string(FamilyRule r);

/// A union of intervals of the line's basic kind: open intervals on standard
/// lines, [a, b) or (-inf, b) on Sorgenfrey lines.
bool basic_union(LineFamily family, const RealSet& u);
bool op_member(LineId id, const RealSet& u);

struct CovVerdict {
  bool member = false;
  std::string reason;
};

CovVerdict cov_verdict(LineId id, const FamilySpec& f);
bool cov_member(LineId id, const FamilySpec& f);

// ---- bornologies ----

enum class BornClass { Finite, All, Bounded, Above, Below, DiscreteAbove };
std::string_view to_string(BornClass c);
bool in_class(BornClass c, const RealSet& a);

BornClass sm_class(LineId id);
BornClass cb_class(LineId id);
BornClass acb_class(LineId id);
bool sm_member(LineId id, const RealSet& a);
bool cb_member(LineId id, const RealSet& a);
bool acb_member(LineId id, const RealSet& a);

/// pt image. Sorgenfrey rom maps to Sorgenfrey st but is flagged: its
/// generated topology is not the half-open topology.
LineId pt_of(LineId id);
bool pt_flagged(LineId id);

/// Endpoint alpha + beta * n; an infinite alpha is constant.
struct AffineEnd {
  ExtRat alpha;
  Rational beta{0};

  ExtRat at(long n) const;
  friend bool operator==(const AffineEnd&, const AffineEnd&) = default;
};

struct SchemaInterval {
  AffineEnd lo;
  bool lo_closed = false;
  AffineEnd hi;
  bool hi_closed = false;

  friend bool operator==(const SchemaInterval&, const SchemaInterval&) = default;
};

/// Indexed base B_start ⊆ B_{start+1} ⊆ ...: a union of affine intervals, or
/// the integer grid {-n, ..., n}.
struct BaseSchema {
  enum class Kind { Intervals, IntegerGrid };
  Kind kind = Kind::Intervals;
  std::vector<SchemaInterval> parts;
  long start = 0;

  /// Throws ConstructionError unless every lower end is non-increasing and
  /// every upper end non-decreasing in n.
  static BaseSchema intervals(std::vector<SchemaInterval> parts, long start = 0);
  static BaseSchema integer_grid();

  RealSet at(long n) const;
  /// Least index from which B_n ∩ A no longer changes (exact for interval schemas).
  long saturation_index(const RealSet& a) const;

  friend bool operator==(const BaseSchema&, const BaseSchema&) = default;
};

std::string to_string(const BaseSchema& s);

enum class LineBornKind { Sm, CB, ACB };
std::string_view to_string(LineBornKind k);

struct Bornology {
  enum class Kind { FB, ALL, NatBounded, UB, LB, MetricBounded, Custom, OfLine };
  Kind kind = Kind::ALL;
  std::optional<QuasiMetric> metric;
  std::optional<BaseSchema> schema;
  LineId line;
  LineBornKind which = LineBornKind::Sm;

  static Bornology fb() { return of_kind(Kind::FB); }
  static Bornology all() { return of_kind(Kind::ALL); }
  static Bornology nat_bounded() { return of_kind(Kind::NatBounded); }
  static Bornology ub() { return of_kind(Kind::UB); }
  static Bornology lb() { return of_kind(Kind::LB); }
  static Bornology metric_bounded(QuasiMetric d);
  static Bornology custom(BaseSchema s);
  static Bornology of_line(LineId id, LineBornKind k);
  static Bornology of_kind(Kind k) {
    Bornology b;
    b.kind = k;
    return b;
  }

  friend bool operator==(const Bornology&, const Bornology&) = default;
};

std::string to_string(const Bornology& b);
/// The bornology as a class of sets; nullopt for custom schemas.
std::optional<BornClass> class_of(const Bornology& b);
bool bornology_member(const Bornology& b, const RealSet& a);
/// Nullopt when the bornology has no countable base of representable sets.
std::optional<BaseSchema> bornology_base(const Bornology& b);
BaseSchema base_of(BornClass c);

/// Cov = EF(tau, B): members open in tau, and every restriction to a base
/// element essentially finite on it.
CovVerdict ef_cov_verdict(TopologyKind tau, const Bornology& b, const FamilySpec& f);

// ---- definition-level smallness probes ----

/// Candidate admissible families aimed at refuting smallness of `a`.
std::vector<FamilySpec> sm_refuter_battery(LineId id, const RealSet& a);
/// An admissible family that is not essentially finite on `a`, if the battery has one.
std::optional<FamilySpec> sm_refute(LineId id, const RealSet& a);

/// Fixed probe sets: finite sets, bounded and unbounded intervals, half-lines,
/// sets with periodic tails.
const std::vector<RealSet>& probe_corpus();

/// An open cover of the line by small open sets, when the line has one.
std::optional<FamilySpec> small_open_cover(LineId id);

}  // namespace gts

#endif  // GTS_LINES_HPP
