#ifndef GTS_COVERS_HPP
#define GTS_COVERS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gts/realset.hpp"

namespace gts {

struct IndexRange {
  enum class Kind { All, From, Upto, Finite };
  Kind kind = Kind::All;
  long first = 0;  // From, Finite
  long last = 0;   // Upto, Finite

  static IndexRange all() { return {}; }
  static IndexRange from(long k) { return {Kind::From, k, 0}; }
  static IndexRange upto(long k) { return {Kind::Upto, 0, k}; }
  static IndexRange between(long a, long b) { return {Kind::Finite, a, b}; }
  bool contains(long k) const;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct FamilySpec;
using FamilyPtr = std::shared_ptr<const FamilySpec>;

struct FiniteFamily {
  std::vector<RealSet> members;
};

/// Members seed + k*period for k in range; the seed is bounded.
struct PeriodicFamily {
  RealSet seed;
  Rational period;
  IndexRange range;
};

/// Members of `left` cut to (-inf, cut) together with members of `right`
/// cut to [cut, +inf).
struct SplitFamily {
  Rational cut;
  FamilyPtr left;
  FamilyPtr right;
};

struct RestrictedFamily {
  FamilyPtr base;
  RealSet window;
};

/// Increasing chain indexed by k >= 1. Below: (-inf, limit - scale/k) for a
/// finite limit, (-inf, scale*k) for limit +inf. Above: (limit + scale/k, +inf)
/// for a finite limit, (-scale*k, +inf) for limit -inf. closed_end closes the
/// finite end.
struct LadderFamily {
  enum class Direction { Below, Above };
  Direction direction = Direction::Below;
  ExtRat limit;
  Rational scale{1};
  bool closed_end = false;
};

/// Family whose members are the members of all parts.
struct UnionFamily {
  std::vector<FamilySpec> parts;
};

struct FamilySpec {
  std::variant<FiniteFamily, PeriodicFamily, SplitFamily, RestrictedFamily, LadderFamily, UnionFamily> node;

  static FamilySpec finite(std::vector<RealSet> members);
  /// Throws ConstructionError for an unbounded seed or a non-positive period.
  static FamilySpec periodic(RealSet seed, Rational period, IndexRange range = IndexRange::all());
  static FamilySpec split(Rational cut, FamilySpec left, FamilySpec right);
  static FamilySpec restricted(FamilySpec base, RealSet window);
  static FamilySpec ladder_below(ExtRat limit, Rational scale = Rational(1), bool closed_end = false);
  static FamilySpec ladder_above(ExtRat limit, Rational scale = Rational(1), bool closed_end = false);
  static FamilySpec union_of_families(std::vector<FamilySpec> parts);

  friend bool operator==(const FamilySpec& a, const FamilySpec& b);
};

std::string to_string(const FamilySpec& f);

/// Exact union of all members.
RealSet union_of(const FamilySpec& f);

/// The distinct members when the family is finitely presented, else nullopt.
std::optional<std::vector<RealSet>> explicit_members(const FamilySpec& f);

/// Members with index in [kmin, kmax] (every index of a Finite family counts
/// as inside the window); duplicates collapse.
std::vector<RealSet> members_in_index_window(const FamilySpec& f, long kmin, long kmax);

/// Finite list containing, up to translation, every member shape of the family.
/// Ladders contribute their first `ladder_levels` members.
std::vector<RealSet> representative_members(const FamilySpec& f, long ladder_levels = 64);

/// Bound on the absolute value of every finite endpoint, cut, limit and seed
/// position that shapes the family; beyond it the family looks periodic or empty.
Rational feature_bound(const FamilySpec& f);

/// Largest absolute value of a finite endpoint or tail cut of the set.
Rational magnitude(const RealSet& s);

struct EssFinVerdict {
  bool essentially_finite = false;
  std::vector<RealSet> witness;
  std::string obstruction;
};

EssFinVerdict ess_finite_on(const FamilySpec& f, const RealSet& k);
EssFinVerdict ess_finite(const FamilySpec& f);
bool locally_ess_finite(const FamilySpec& f);

FamilySpec restrict_family(const FamilySpec& f, const RealSet& y);

/// L_Y[generators]: least collection with the generators, empty set and Y that
/// is closed under finite unions and intersections. Sorted by canonical_less.
std::vector<RealSet> full_ring_closure(const std::vector<RealSet>& generators, const RealSet& y);
/// tau(generators) on the real line.
std::vector<RealSet> gen_topology(const std::vector<RealSet>& generators);
bool gen_topology_member(const std::vector<RealSet>& generators, const RealSet& u);

struct EfVerdict {
  bool member = false;
  bool precondition_ok = true;
  long checked_upto = 0;
  std::string note;
};

/// Indexed base of a bornology; nullopt past the end of a finite base.
using BaseFn = std::function<RealSet(long)>;

/// F is in EF(L, B): every member satisfies `in_l`, and F restricted to each base
/// element B_n is essentially finite on B_n, for n <= n_max (or until the base
/// stops growing).
EfVerdict ef_member(const FamilySpec& f, const std::function<bool(const RealSet&)>& in_l, const BaseFn& base,
                    long n_max = 64);

// ---- bounded generation of <Psi> ----

enum class PlusRule { Finiteness, Stability, Transitivity, Saturation, Regularity };
std::string_view to_string(PlusRule r);

using ExplicitFamily = std::vector<RealSet>;

/// Explicit finite state of the generation: opens and admissible families over
/// a carrier Y, plus candidate sets and families for the saturation and
/// regularity rules.
struct CovCollection {
  RealSet carrier = RealSet::reals();
  std::vector<RealSet> opens;
  std::vector<ExplicitFamily> families;
  std::vector<RealSet> candidate_sets;
  std::vector<ExplicitFamily> candidate_families;
  bool truncated = false;

  /// Families must be finitely presented; their members become opens.
  static CovCollection from(const std::vector<FamilySpec>& psi, const RealSet& carrier = RealSet::reals(),
                            const std::vector<RealSet>& extra_opens = {});

  friend bool operator==(const CovCollection&, const CovCollection&) = default;
};

inline constexpr long kDefaultDepthCap = 8;
inline constexpr std::size_t kFamilyCap = 4096;
inline constexpr std::size_t kOpenCap = 4096;

CovCollection plus_step(const CovCollection& psi, PlusRule rule);
/// All five rules applied k times. Throws std::out_of_range past the depth cap.
CovCollection generate_upto(const CovCollection& psi, long k, long depth_cap = kDefaultDepthCap);

struct GenVerdict {
  bool found = false;
  bool truncated = false;
  long depth = 0;
  std::string note;
};

/// Semi-decision: found means F is in <Psi>; not found means not within depth k.
GenVerdict member_generated(const FamilySpec& f, const CovCollection& psi, long k,
                            long depth_cap = kDefaultDepthCap);

}  // namespace gts

#endif  // GTS_COVERS_HPP
