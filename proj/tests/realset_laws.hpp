#ifndef GTS_TESTS_REALSET_LAWS_HPP
#define GTS_TESTS_REALSET_LAWS_HPP

#include <array>
#include <functional>
#include <string>

#include "support.hpp"

namespace gts::testing {

struct LawResult {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

/// Sample grid used by the sampling oracles: step 1/16 on [-8, 8].
inline const std::vector<Rational>& law_grid() {
  static const std::vector<Rational> g = grid(q(-8), q(8), q(1, 16));
  return g;
}

/// Same set written a different way: tails with doubled period, cuts moved
/// outward and the gap filled with explicit pieces, bounded pieces split.
inline RawSet rewrite(const RealSet& s, SetGen& gen) {
  RawSet r;
  std::optional<Rational> lo_cut, hi_cut;
  if (auto t = s.left_tail()) {
    Rational shift = t->period * gen.pick(0, 3);
    PeriodicTail d{t->pattern, 2 * t->period, t->cut - shift};
    for (const auto& i : t->pattern)
      d.pattern.push_back(Interval{i.lo + t->period, i.hi + t->period, i.lo_closed, i.hi_closed});
    r.left = d;
    if (shift > 0)
      for (const auto& c : components_in(s, Interval::closed(t->cut - shift, t->cut))) r.parts.push_back(c);
  }
  if (auto t = s.right_tail()) {
    Rational shift = t->period * gen.pick(0, 3);
    PeriodicTail d{t->pattern, 2 * t->period, t->cut + shift};
    for (const auto& i : t->pattern)
      d.pattern.push_back(Interval{i.lo + t->period, i.hi + t->period, i.lo_closed, i.hi_closed});
    r.right = d;
    if (shift > 0)
      for (const auto& c : components_in(s, Interval::closed(t->cut, t->cut + shift))) r.parts.push_back(c);
  }
  for (const auto& c : s.core()) {
    if (c.bounded() && !c.is_point() && gen.coin()) {
      Rational mid = (c.lo.value() + c.hi.value()) / 2;
      r.parts.push_back(Interval::make(c.lo, c.lo_closed, mid, true));
      r.parts.push_back(Interval::make(mid, true, c.hi, c.hi_closed));
    } else {
      r.parts.push_back(c);
    }
  }
  return r;
}

inline LawResult law_normalization(long n, std::uint64_t seed) {
  LawResult res{"normalization canonicity"};
  SetGen gen(seed);
  for (long i = 0; i < n; ++i) {
    RawSet raw = gen.raw();
    RealSet s = raw.build();
    RealSet again = RealSet::normalize(s.core(), s.left_tail(), s.right_tail());
    RawSet other = rewrite(s, gen);
    bool same_signature = true;
    for (const auto& x : law_grid())
      if (other.contains(x) != raw.contains(x)) same_signature = false;
    res.record(again == s && same_signature && other.build() == s, [&] { return to_string(s); });
  }
  return res;
}

inline std::array<LawResult, 5> law_boolean(long n, std::uint64_t seed) {
  std::array<LawResult, 5> res{LawResult{"de morgan"}, LawResult{"distributivity"}, LawResult{"difference"},
                               LawResult{"double complement"}, LawResult{"boolean sampling agreement"}};
  SetGen gen(seed);
  for (long i = 0; i < n; ++i) {
    RawSet ra = gen.raw(), rb = gen.raw(), rc = gen.raw();
    RealSet a = ra.build(), b = rb.build(), c = rc.build();
    auto show = [&] { return to_string(a) + " ; " + to_string(b) + " ; " + to_string(c); };
    res[0].record(complement(unite(a, b)) == intersect(complement(a), complement(b)) &&
                      complement(intersect(a, b)) == unite(complement(a), complement(b)),
                  show);
    res[1].record(intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)) &&
                      unite(a, intersect(b, c)) == intersect(unite(a, b), unite(a, c)),
                  show);
    res[2].record(difference(a, b) == intersect(a, complement(b)), show);
    res[3].record(complement(complement(a)) == a, show);
    RealSet u = unite(a, b), m = intersect(a, b), d = difference(a, b), x = symmetric_difference(a, b);
    bool ok = true;
    for (const auto& p : law_grid()) {
      bool ia = ra.contains(p), ib = rb.contains(p);
      ok = ok && contains_point(u, p) == (ia || ib) && contains_point(m, p) == (ia && ib) &&
           contains_point(d, p) == (ia && !ib) && contains_point(x, p) == (ia != ib);
    }
    res[4].record(ok, show);
  }
  return res;
}

/// Point-sampling oracle for closure membership of a grid point x. All
/// generated endpoints lie on the 1/8 grid, so the set is constant on
/// (x, x + 1/16) and (x - 1/16, x) and the probes x +- 1/32 decide the
/// one-sided limits. Global kinds scan the window [-16, 16]; generated sets
/// are periodic beyond [-8, 8] with period at most 2.
class ClosureOracle {
public:
  explicit ClosureOracle(const RawSet& raw) : raw_(raw) {
    const Rational step(1, 32);
    for (Rational y(-16); y <= 16; y += step) samples_.push_back({y, raw.contains(y)});
    prefix_in_.resize(samples_.size());
    prefix_out_.resize(samples_.size());
    bool in = false, out = false;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      in = in || samples_[i].second;
      out = out || !samples_[i].second;
      prefix_in_[i] = in;
      prefix_out_[i] = out;
    }
    suffix_in_.resize(samples_.size());
    suffix_out_.resize(samples_.size());
    in = out = false;
    for (std::size_t i = samples_.size(); i-- > 0;) {
      in = in || samples_[i].second;
      out = out || !samples_[i].second;
      suffix_in_[i] = in;
      suffix_out_[i] = out;
    }
  }

  bool in_closure(TopologyKind t, const Rational& x) const { return decide(t, x, true); }
  bool in_interior(TopologyKind t, const Rational& x) const { return decide(t, x, false); }

private:
  std::size_t index(const Rational& x) const {
    return static_cast<std::size_t>(mpz_class((x + 16) * 32).get_si());
  }

  bool decide(TopologyKind t, const Rational& x, bool cl) const {
    const Rational eta(1, 32);
    // For closure: "the set meets every neighbourhood"; for interior:
    // "the complement meets no neighbourhood".
    auto hit = [&](const Rational& y) { return cl ? raw_.contains(y) : !raw_.contains(y); };
    bool meets = false;
    switch (t) {
      case TopologyKind::Discrete: meets = hit(x); break;
      case TopologyKind::Nat: meets = hit(x) || hit(x - eta) || hit(x + eta); break;
      case TopologyKind::SorgR: meets = hit(x) || hit(x + eta); break;
      case TopologyKind::SorgL: meets = hit(x) || hit(x - eta); break;
      case TopologyKind::Upper: {
        std::size_t i = index(x + eta);
        meets = cl ? prefix_in_[i] : prefix_out_[i];
        break;
      }
      case TopologyKind::Lower: {
        std::size_t i = index(x - eta);
        meets = cl ? suffix_in_[i] : suffix_out_[i];
        break;
      }
    }
    return cl ? meets : !meets;
  }

  const RawSet& raw_;
  std::vector<std::pair<Rational, bool>> samples_;
  std::vector<bool> prefix_in_, prefix_out_, suffix_in_, suffix_out_;
};

inline const std::array<TopologyKind, 6>& all_topologies() {
  static const std::array<TopologyKind, 6> ts{TopologyKind::Nat,   TopologyKind::Upper, TopologyKind::Lower,
                                              TopologyKind::SorgR, TopologyKind::SorgL, TopologyKind::Discrete};
  return ts;
}

/// Per topology kind: sandwich, idempotence, duality, monotonicity, sampling.
inline std::vector<LawResult> law_topology(long n, std::uint64_t seed) {
  std::vector<LawResult> res;
  for (auto t : all_topologies()) {
    std::string k(to_string(t));
    res.push_back({"sandwich " + k});
    res.push_back({"idempotence " + k});
    res.push_back({"duality " + k});
    res.push_back({"monotonicity " + k});
    res.push_back({"operator sampling agreement " + k});
  }
  SetGen gen(seed);
  for (long i = 0; i < n; ++i) {
    RawSet ra = gen.raw(), rb = gen.raw();
    RealSet a = ra.build(), b = rb.build();
    RealSet ab = unite(a, b);
    ClosureOracle oracle(ra);
    for (std::size_t k = 0; k < all_topologies().size(); ++k) {
      TopologyKind t = all_topologies()[k];
      auto show = [&] { return std::string(to_string(t)) + ": " + to_string(a) + " ; " + to_string(b); };
      RealSet cl = closure(a, t), in = interior(a, t);
      res[5 * k].record(is_subset(in, a) && is_subset(a, cl), show);
      res[5 * k + 1].record(closure(cl, t) == cl && interior(in, t) == in, show);
      res[5 * k + 2].record(cl == complement(interior(complement(a), t)), show);
      res[5 * k + 3].record(is_subset(cl, closure(ab, t)) && is_subset(in, interior(ab, t)), show);
      bool ok = true;
      for (const auto& x : law_grid())
        ok = ok && contains_point(cl, x) == oracle.in_closure(t, x) &&
             contains_point(in, x) == oracle.in_interior(t, x);
      res[5 * k + 4].record(ok, show);
    }
  }
  return res;
}

}  // namespace gts::testing

#endif  // GTS_TESTS_REALSET_LAWS_HPP
