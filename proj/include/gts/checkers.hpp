#ifndef GTS_CHECKERS_HPP
#define GTS_CHECKERS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gts/covers.hpp"
#include "gts/lines.hpp"
#include "gts/qmetric.hpp"
#include "gts/realset.hpp"

namespace gts {

// ---- piecewise affine maps ----

/// Piece i acts on [b_{i-1}, b_i), with b_{-1} = -inf and b_m = +inf.
struct AffinePiece {
  Rational slope{1};
  Rational intercept{0};

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

struct PiecewiseAffineMap {
  std::vector<Rational> breakpoints;
  std::vector<AffinePiece> pieces;

  /// Throws ConstructionError unless breakpoints ascend and there is one more piece.
  static PiecewiseAffineMap make(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces);
  static PiecewiseAffineMap affine(Rational slope, Rational intercept);
  static PiecewiseAffineMap identity() { return affine(Rational(1), Rational(0)); }

  Rational apply(const Rational& x) const;
  /// Domain of piece i as a RealSet.
  RealSet piece_domain(std::size_t i) const;

  friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;
};

std::string to_string(const PiecewiseAffineMap& f);
RealSet preimage(const PiecewiseAffineMap& f, const RealSet& u);
RealSet image(const PiecewiseAffineMap& f, const RealSet& a);
/// {f^-1(U) : U in F}. Exact for families with explicit members and for
/// single-piece maps of non-zero slope; nullopt otherwise.
std::optional<FamilySpec> preimage_family(const PiecewiseAffineMap& f, const FamilySpec& fam);

// ---- properness and bases ----

inline constexpr long kDefaultChainCap = 64;
/// How far past N the properness search looks for a covering base element.
inline constexpr long kProperMargin = 8;

struct ProperReport {
  bool proper = false;
  long checked_upto = -1;
  /// The first base index whose closure escapes every interior, when improper.
  std::optional<long> failing_index;
  RealSet witness;
  std::string detail;
};

/// For every base element B_n, n <= N: cl_t2(B_n) ⊆ int_t1(B_m) for some m <= N + margin.
ProperReport proper_check(const Bornology& b, TopologyKind t1, TopologyKind t2, long n_cap = 16);
/// Every base element lies in a t-open member of the bornology.
bool base_check(const Bornology& b, TopologyKind t, long n_cap = kDefaultChainCap);

// ---- chain conditions ----

struct ChainCertificate {
  long n = 0;
  Rational delta;
  RealSet base;
  RealSet neighborhood;
  RealSet next;
};

struct ChainReport {
  enum class Verdict { Pass, FailAt, Truncated };
  Verdict verdict = Verdict::Pass;
  long index = -1;  // FailAt: failing index; Truncated: the cap
  RealSet missing;
  Rational delta_used{0};
  long checked_upto = -1;
  /// The per-index inclusion does not depend on n, so the pass holds for every n.
  bool index_uniform = false;
  std::vector<ChainCertificate> certificates;
  std::string note;
};

std::string verdict_string(const ChainReport& r);

/// [B_n]^delta ⊆ B_{n+1} for n = start..start+N. A pass that is neither
/// index-uniform nor long enough to reach n = ceil(1/delta) is Truncated(N).
ChainReport chain_check(const QuasiMetric& d, const BaseSchema& s, const Rational& delta, long n_cap);
/// Per index, the largest delta = 2^-k (k = 0..20) that works.
ChainReport chain_search(const QuasiMetric& d, const BaseSchema& s, long n_cap);
/// One delta = 2^-k (k = 1..12) for every index, largest first.
ChainReport uniform_chain_check(const QuasiMetric& d, const BaseSchema& s, long n_cap);
/// Recomputes each neighborhood from its base element, then checks the
/// inclusion symbolically and on a 1/16 grid over [-8, 8].
bool reverify(const QuasiMetric& d, const ChainReport& r);

// ---- metrizability verdicts ----

enum class VerdictPart { Topology, Bornology, Chain, Properness, Base };
std::string_view to_string(VerdictPart p);

struct PartResult {
  VerdictPart part = VerdictPart::Topology;
  bool ok = false;
  std::string detail;
};

struct MetrizabilityReport {
  bool consistent = false;
  std::vector<PartResult> parts;
  std::optional<VerdictPart> first_failure() const;
  bool failed(VerdictPart p) const;
};

/// Parts: topology match, bornology match on probes and bases, per-index
/// chain, properness, and the open-base condition.
MetrizabilityReport metrizable_verdict(LineId id, const Bornology& b, const QuasiMetric& d,
                                       const std::vector<RealSet>& probes, long n_cap = kDefaultChainCap);
/// Topology match, one delta for the whole chain, properness and the open base.
/// The bornology need not be the d-bounded one.
MetrizabilityReport uniform_verdict(LineId id, const Bornology& b, const QuasiMetric& d,
                                    long n_cap = kDefaultChainCap);

struct MetrizabilityClaim {
  enum class Kind { Metrizable, UniformWrt };
  Kind kind = Kind::Metrizable;
  LineId line;
  Bornology bornology;
  QuasiMetric metric;
  bool holds = true;
  /// For claims that fail: the part the example blames.
  std::optional<VerdictPart> blamed;
  std::string anchor;
};

/// Every (line, bornology, metric) statement of the examples section.
const std::vector<MetrizabilityClaim>& metrizability_claims();

struct ClaimOutcome {
  MetrizabilityReport report;
  bool agrees = false;
};

ClaimOutcome check_claim(const MetrizabilityClaim& c, const std::vector<RealSet>& probes,
                         long n_cap = kDefaultChainCap);

// ---- strict continuity ----

struct StrictContReport {
  enum class Verdict { Refuted, Unrefuted };
  Verdict verdict = Verdict::Unrefuted;
  std::optional<FamilySpec> witness;
  std::optional<FamilySpec> witness_preimage;
  std::vector<std::string> skipped;
};

/// Semi-decision: a battery family admissible on dst whose preimage is not admissible on src.
StrictContReport strict_cont_refute(const PiecewiseAffineMap& f, LineId src, LineId dst,
                                    const std::vector<FamilySpec>& battery);

// ---- gts axioms ----

struct AxiomResult {
  long checked = 0;
  long skipped = 0;
  std::optional<std::string> violation;
};

struct AxiomReport {
  std::array<AxiomResult, 5> axioms;
  bool all_pass() const;
};

struct AxiomSamples {
  std::vector<FamilySpec> families;
  std::vector<RealSet> sets;
};

AxiomSamples default_axiom_samples(LineId id);
/// Instance checks of the five gts axioms; `depth` bounds subfamily sizes.
AxiomReport axiom_probe(LineId id, const AxiomSamples& samples, long depth = 3);

// ---- initial bornology ----

/// A belongs to the initial bornology iff every image f_i(A) lies in B_i.
bool initial_bornology_member(const std::vector<PiecewiseAffineMap>& maps, const std::vector<Bornology>& borns,
                              const RealSet& a);

}  // namespace gts

#endif  // GTS_CHECKERS_HPP
