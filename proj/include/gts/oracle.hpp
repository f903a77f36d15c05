#ifndef GTS_ORACLE_HPP
#define GTS_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gts/covers.hpp"

namespace gts {

/// Exhaustive essential-finiteness oracle over a truncated family. It answers
/// only when a cover of K ∩ ⋃F with at most max_subfamily truncated members
/// exists; every other outcome is a refusal with a reason.
struct OracleAnswer {
  std::optional<bool> answer;
  std::vector<RealSet> cover;
  std::string refusal;
};

inline constexpr long kOracleNodeCap = 200000;

OracleAnswer oracle_ess_finite(const FamilySpec& f, long kmin, long kmax, const RealSet& k, long max_subfamily = 8);

/// Some point of a non-empty set.
Rational any_point(const RealSet& s);

}  // namespace gts

#endif  // GTS_ORACLE_HPP
