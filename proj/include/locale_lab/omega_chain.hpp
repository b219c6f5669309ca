#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "frame_io.hpp"
#include "poset.hpp"
#include "sublocale.hpp"

namespace locale_lab {

/// The symbolic chain 1 = a₀ > a₁ > a₂ > … > ⊥. Level n stands for aₙ.
struct ChainElement {
  bool is_bottom = false;
  std::size_t level = 0;

  static ChainElement bottom() { return {true, 0}; }
  static ChainElement at(std::size_t n) { return {false, n}; }
  bool is_top() const { return !is_bottom && level == 0; }

  friend bool operator==(const ChainElement& a, const ChainElement& b) {
    return a.is_bottom == b.is_bottom && (a.is_bottom || a.level == b.level);
  }
};

/// x ≤ y in the chain.
inline bool chain_leq(const ChainElement& x, const ChainElement& y) {
  if (x.is_bottom) return true;
  if (y.is_bottom) return false;
  return x.level >= y.level;
}

/// An eventually periodic set of naturals: explicit membership below
/// `offset`, then the pattern repeated from `offset` on. Always kept in the
/// canonical form (shortest period, then smallest offset), so equal sets
/// compare equal.
class LevelSet {
 public:
  LevelSet() = default;

  static LevelSet finite(const std::vector<std::size_t>& members) {
    LevelSet s;
    std::size_t top = 0;
    for (auto m : members) top = std::max(top, m + 1);
    s.prefix_.assign(top, false);
    for (auto m : members) s.prefix_[m] = true;
    s.normalize();
    return s;
  }

  /// Members of `extra` plus every n ≥ offset with pattern[(n-offset) % |pattern|].
  static LevelSet periodic(const std::vector<std::size_t>& extra, std::size_t offset, std::vector<bool> pattern) {
    if (pattern.empty()) return finite(extra);
    LevelSet s;
    std::size_t top = offset;
    for (auto m : extra) top = std::max(top, m + 1);
    // Unroll the pattern up to a period boundary past every explicit member.
    std::size_t span = top - offset;
    std::size_t periods = (span + pattern.size() - 1) / pattern.size();
    std::size_t new_offset = offset + periods * pattern.size();
    s.prefix_.assign(new_offset, false);
    for (std::size_t n = offset; n < new_offset; ++n) s.prefix_[n] = pattern[(n - offset) % pattern.size()];
    for (auto m : extra) s.prefix_[m] = true;
    s.pattern_ = std::move(pattern);
    s.normalize();
    return s;
  }

  bool contains(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    if (pattern_.empty()) return false;
    return pattern_[(n - prefix_.size()) % pattern_.size()];
  }
  bool infinite() const { return !pattern_.empty(); }
  bool empty() const { return !infinite() && std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }); }
  std::size_t offset() const { return prefix_.size(); }
  const std::vector<bool>& pattern() const { return pattern_; }

  /// Members below `bound`.
  std::vector<std::size_t> members_below(std::size_t bound) const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < bound; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }
  /// Members below the offset.
  std::vector<std::size_t> prefix_members() const { return members_below(offset()); }

  template <class Op>
  static LevelSet combine(const LevelSet& a, const LevelSet& b, Op&& op) {
    std::size_t period = std::lcm(std::max<std::size_t>(a.pattern_.size(), 1),
                                  std::max<std::size_t>(b.pattern_.size(), 1));
    std::size_t offset = std::max(a.offset(), b.offset());
    LevelSet s;
    s.prefix_.resize(offset);
    for (std::size_t n = 0; n < offset; ++n) s.prefix_[n] = op(a.contains(n), b.contains(n));
    s.pattern_.resize(period);
    for (std::size_t k = 0; k < period; ++k) s.pattern_[k] = op(a.contains(offset + k), b.contains(offset + k));
    s.normalize();
    return s;
  }

  friend LevelSet operator|(const LevelSet& a, const LevelSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
  }
  friend LevelSet operator&(const LevelSet& a, const LevelSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
  }
  friend LevelSet operator-(const LevelSet& a, const LevelSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
  }
  bool is_subset_of(const LevelSet& o) const { return (*this - o).empty(); }

  friend bool operator==(const LevelSet& a, const LevelSet& b) {
    return a.prefix_ == b.prefix_ && a.pattern_ == b.pattern_;
  }

 private:
  void normalize() {
    if (std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; })) pattern_.clear();
    // Shortest period.
    for (std::size_t p = 1; p < pattern_.size(); ++p) {
      if (pattern_.size() % p) continue;
      bool periodic = true;
      for (std::size_t k = p; k < pattern_.size() && periodic; ++k) periodic = pattern_[k] == pattern_[k - p];
      if (periodic) {
        pattern_.resize(p);
        break;
      }
    }
    // Pull the periodic part back over the prefix while it agrees.
    if (pattern_.empty()) {
      while (!prefix_.empty() && !prefix_.back()) prefix_.pop_back();
      return;
    }
    while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
      prefix_.pop_back();
      std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
    }
  }

  std::vector<bool> prefix_;
  std::vector<bool> pattern_;
};

/// A described subset of the chain containing top: the levels in `levels`
/// (level 0 is top and always present) plus ⊥ when `bottom` is set.
struct ChainSublocale {
  LevelSet levels;
  bool bottom = false;

  bool contains(const ChainElement& e) const { return e.is_bottom ? bottom : levels.contains(e.level); }
  friend bool operator==(const ChainSublocale& a, const ChainSublocale& b) {
    return a.levels == b.levels && a.bottom == b.bottom;
  }
};

inline ChainSublocale make_chain_subset(LevelSet levels, bool bottom) {
  return {levels | LevelSet::finite({0}), bottom};
}

/// The whole chain L.
inline ChainSublocale chain_whole() { return make_chain_subset(LevelSet::periodic({}, 0, {true}), true); }
/// The zero sublocale {top}.
inline ChainSublocale chain_zero() { return make_chain_subset(LevelSet::finite({0}), false); }

/// Contains top and is closed under meets; in a chain the only missing meet
/// can be ⊥, the infimum of an infinite level set. Heyting closure is
/// automatic since a -> s ∈ {1, s}.
inline bool chain_is_sublocale(const ChainSublocale& c) {
  return c.levels.contains(0) && (!c.levels.infinite() || c.bottom);
}

inline void require_chain_sublocale(const ChainSublocale& c) {
  if (!chain_is_sublocale(c)) throw NotASublocale("infinite level set without bottom is not meet-closed");
}

/// Parses `finite: 2 5 9 ; tail: offset=4 pattern=10 ; bottom: yes`. Each
/// segment is optional and may appear once; `tail: none` means no tail.
inline ChainSublocale parse_chain(std::string_view description) {
  std::vector<std::size_t> finite;
  std::optional<std::size_t> offset;
  std::vector<bool> pattern;
  bool bottom = false;
  bool seen_finite = false, seen_tail = false, seen_bottom = false;
  std::size_t start = 0;
  while (start <= description.size()) {
    auto end = description.find(';', start);
    if (end == std::string_view::npos) end = description.size();
    auto seg = text::trim(description.substr(start, end - start));
    start = end + 1;
    if (seg.empty()) continue;
    auto colon = seg.find(':');
    if (colon == std::string_view::npos) throw MalformedDescription("segment without ':': '" + std::string(seg) + "'");
    auto key = text::trim(seg.substr(0, colon));
    auto value = text::trim(seg.substr(colon + 1));
    if (key == "finite") {
      if (seen_finite) throw MalformedDescription("duplicate 'finite' segment");
      seen_finite = true;
      for (auto w : text::words(value)) {
        std::size_t n = 0;
        if (!text::parse_number(w, n)) throw MalformedDescription("not a level: '" + std::string(w) + "'");
        finite.push_back(n);
      }
    } else if (key == "tail") {
      if (seen_tail) throw MalformedDescription("duplicate 'tail' segment");
      seen_tail = true;
      if (value == "none") continue;
      bool have_pattern = false;
      for (auto w : text::words(value)) {
        if (w.substr(0, 7) == "offset=") {
          std::size_t n = 0;
          if (offset || !text::parse_number(w.substr(7), n)) throw MalformedDescription("bad tail offset");
          offset = n;
        } else if (w.substr(0, 8) == "pattern=") {
          if (have_pattern) throw MalformedDescription("duplicate tail pattern");
          have_pattern = true;
          for (char ch : w.substr(8)) {
            if (ch != '0' && ch != '1') throw MalformedDescription("pattern must be a binary word");
            pattern.push_back(ch == '1');
          }
        } else {
          throw MalformedDescription("unknown tail field '" + std::string(w) + "'");
        }
      }
      if (!offset || pattern.empty()) throw MalformedDescription("tail needs offset=N and a nonempty pattern");
    } else if (key == "bottom") {
      if (seen_bottom) throw MalformedDescription("duplicate 'bottom' segment");
      seen_bottom = true;
      if (value == "yes") bottom = true;
      else if (value == "no") bottom = false;
      else throw MalformedDescription("bottom must be yes or no");
    } else {
      throw MalformedDescription("unknown segment '" + std::string(key) + "'");
    }
  }
  LevelSet levels = offset ? LevelSet::periodic(finite, *offset, pattern) : LevelSet::finite(finite);
  return make_chain_subset(std::move(levels), bottom);
}

/// Canonical text form; level 0 is implicit and omitted, as is an empty finite part.
inline std::string format_chain(const ChainSublocale& c) {
  std::ostringstream out;
  std::string finite;
  for (auto n : c.levels.prefix_members())
    if (n != 0) finite += ' ' + std::to_string(n);
  if (!finite.empty()) out << "finite:" << finite << " ; ";
  out << "tail: ";
  if (c.levels.infinite()) {
    out << "offset=" << c.levels.offset() << " pattern=";
    for (bool b : c.levels.pattern()) out << (b ? '1' : '0');
  } else {
    out << "none";
  }
  out << " ; bottom: " << (c.bottom ? "yes" : "no");
  return out.str();
}

/// Human-readable member list, e.g. "{top, a2, a4, ..., ⊥}".
namespace detail {

/// Nonzero levels to print: everything before the tail, then its first three members.
inline std::vector<std::size_t> shown_levels(const LevelSet& levels) {
  std::vector<std::size_t> out;
  if (!levels.infinite()) {
    for (auto n : levels.members_below(levels.offset()))
      if (n != 0) out.push_back(n);
    return out;
  }
  std::size_t tail = 0;
  for (auto n : levels.members_below(levels.offset() + 4 * levels.pattern().size() + 1)) {
    if (n == 0) continue;
    if (n >= levels.offset() && tail++ == 3) break;
    out.push_back(n);
  }
  return out;
}

}  // namespace detail

inline std::string describe_chain(const ChainSublocale& c) {
  std::string out = "{top";
  for (auto n : detail::shown_levels(c.levels)) out += ", a" + std::to_string(n);
  if (c.levels.infinite()) out += ", ...";
  if (c.bottom) out += ", ⊥";
  return out + "}";
}

/// Covered primes of a described sublocale, as a subset of its members.
struct ChainPoints {
  LevelSet levels;  // never contains 0
  bool bottom = false;

  bool empty() const { return levels.empty() && !bottom; }
  friend bool operator==(const ChainPoints& a, const ChainPoints& b) {
    return a.levels == b.levels && a.bottom == b.bottom;
  }
};

/// Covered primes of c as a chain in its own right: every non-top level
/// member (the members above it are finitely many, so their meet is the next
/// member up), and ⊥ exactly when it is a member and the level set is finite.
inline ChainPoints chain_ptD(const ChainSublocale& c) {
  require_chain_sublocale(c);
  return {c.levels - LevelSet::finite({0}), c.bottom && !c.levels.infinite()};
}

inline std::string describe_points(const ChainPoints& p) {
  std::string out = "{";
  bool first = true;
  for (auto n : detail::shown_levels(p.levels)) {
    out += (first ? "a" : ", a") + std::to_string(n);
    first = false;
  }
  if (p.levels.infinite()) out += ", ...";
  if (p.bottom) out += first ? "⊥" : ", ⊥";
  return out + "}";
}

inline ChainSublocale chain_intersect(const ChainSublocale& c, const ChainSublocale& d) {
  require_chain_sublocale(c);
  require_chain_sublocale(d);
  return {c.levels & d.levels, c.bottom && d.bottom};
}

/// Meet closure of the union: the only possible new meet is ⊥, and an
/// infinite union already contains it because an infinite operand does.
inline ChainSublocale chain_join(const ChainSublocale& c, const ChainSublocale& d) {
  require_chain_sublocale(c);
  require_chain_sublocale(d);
  return {c.levels | d.levels, c.bottom || d.bottom};
}

/// pt_D(c) ⊆ pt_D(L); all levels are covered in L and ⊥ is not.
inline bool chain_is_D_sublocale(const ChainSublocale& c) { return !chain_ptD(c).bottom; }

/// S ∖ T, the least R with S ⊆ T ∨ R: the levels of S outside T, plus ⊥ when
/// S has ⊥ and T does not, or when those levels are infinite.
inline ChainSublocale chain_difference(const ChainSublocale& s, const ChainSublocale& t) {
  require_chain_sublocale(s);
  require_chain_sublocale(t);
  LevelSet rest = s.levels - t.levels;
  return make_chain_subset(rest, (s.bottom && !t.bottom) || rest.infinite());
}

/// Largest D-sublocale inside c: c itself, or c without ⊥.
inline ChainSublocale chain_d_interior(const ChainSublocale& c) {
  if (chain_is_D_sublocale(c)) return c;
  return {c.levels, false};
}

/// The lift of L -> S to S_D(L) -> S_D(S), T ↦ T ∧ S in S_D(L).
class ChainLift {
 public:
  /// Throws NotLiftable unless S is a D-sublocale.
  explicit ChainLift(ChainSublocale s) : s_(std::move(s)) {
    require_chain_sublocale(s_);
    if (!chain_is_D_sublocale(s_)) throw NotLiftable("not a D-sublocale: " + format_chain(s_));
  }
  const ChainSublocale& target() const { return s_; }
  ChainSublocale operator()(const ChainSublocale& t) const { return chain_d_interior(chain_intersect(t, s_)); }

 private:
  ChainSublocale s_;
};

/// Closed sublocale ↑aₙ = {a₀, …, aₙ}, or L for ⊥.
inline ChainSublocale chain_closed(const ChainElement& a) {
  if (a.is_bottom) return chain_whole();
  std::vector<std::size_t> levels(a.level + 1);
  std::iota(levels.begin(), levels.end(), 0);
  return make_chain_subset(LevelSet::finite(levels), false);
}

/// Truncation of the chain to levels 0..depth and ⊥, as a finite frame.
/// Element ids: 0 is ⊥, k is level depth+1-k, so depth+1 is top.
struct ChainTruncation {
  std::size_t depth;
  FramePtr frame;

  Element element(const ChainElement& e) const {
    return e.is_bottom ? 0 : static_cast<Element>(depth + 1 - e.level);
  }
  /// The finite shadow of a described subset: its levels up to depth, plus ⊥.
  Sublocale shadow(const ChainSublocale& c) const {
    ElementSet m(frame->size());
    for (auto n : c.levels.members_below(depth + 1)) m.insert(element(ChainElement::at(n)));
    if (c.bottom) m.insert(0);
    return Sublocale::trusted(frame, std::move(m));
  }
  /// Levels strictly above the truncation depth present in a finite subset.
  std::vector<std::size_t> visible_levels(const ElementSet& members) const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < depth; ++n)
      if (members.contains(element(ChainElement::at(n)))) out.push_back(n);
    return out;
  }
  std::vector<std::size_t> visible_levels(const LevelSet& levels) const { return levels.members_below(depth); }
};

inline ChainTruncation truncate_chain(std::size_t depth) {
  std::vector<std::string> labels{"⊥"};
  for (std::size_t k = 1; k <= depth + 1; ++k) {
    auto level = depth + 1 - k;
    labels.push_back(level == 0 ? "top" : "a" + std::to_string(level));
  }
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i + 1 < depth + 2; ++i) covers.emplace_back(i, i + 1);
  return {depth, share(make_frame(OrderRelation::from_covers(depth + 2, covers), std::move(labels)))};
}

/// Random described sublocale: offset ≤ 6, pattern length 1..4 (or no tail),
/// explicit members below the offset, ⊥ forced when infinite.
inline ChainSublocale random_chain_sublocale(std::mt19937_64& rng) {
  std::size_t offset = rng() % 7;
  std::vector<std::size_t> finite;
  for (std::size_t n = 1; n < offset; ++n)
    if (rng() & 1) finite.push_back(n);
  bool has_tail = rng() % 4 != 0;
  std::vector<bool> pattern;
  if (has_tail) {
    std::size_t len = 1 + rng() % 4;
    for (std::size_t k = 0; k < len; ++k) pattern.push_back(rng() & 1);
  }
  LevelSet levels = LevelSet::periodic(finite, offset, pattern);
  bool bottom = levels.infinite() || (rng() & 1);
  return make_chain_subset(std::move(levels), bottom);
}

inline std::vector<ChainSublocale> chain_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<ChainSublocale> out{chain_zero(), chain_whole()};
  while (out.size() < count) out.push_back(random_chain_sublocale(rng));
  return out;
}

/// Depth needed for truncation checks on a description.
inline std::size_t truncation_depth_for(const ChainSublocale& c) {
  return c.levels.offset() + 3 * std::max<std::size_t>(c.levels.pattern().size(), 1);
}

/// The evens {top, a2, a4, …, ⊥} and odds {top, a1, a3, …, ⊥}.
inline ChainSublocale chain_evens() { return parse_chain("tail: offset=2 pattern=10 ; bottom: yes"); }
inline ChainSublocale chain_odds() { return parse_chain("tail: offset=1 pattern=10 ; bottom: yes"); }

struct RemarkRun {
  ChainSublocale s, t, meet;
  ChainPoints pt_s, pt_t, pt_meet, pt_whole;
  bool s_is_d = false, t_is_d = false, meet_is_d = false;
  bool bottom_in_pt_whole = false;
  std::vector<std::pair<std::size_t, bool>> truncations;  // depth, agreement
  std::vector<std::string> transcript;

  bool truncations_agree() const {
    return std::all_of(truncations.begin(), truncations.end(), [](const auto& p) { return p.second; });
  }
};

/// Agreement of the symbolic S, T, S∩T and their covered primes with the
/// same computation in the chain truncated at `depth`, on levels < depth.
inline bool truncation_agrees(const ChainSublocale& s, const ChainSublocale& t, std::size_t depth) {
  auto tr = truncate_chain(depth);
  auto fs = tr.shadow(s);
  auto ft = tr.shadow(t);
  auto fm = sublocale_meet(fs, ft);
  auto covered_in = [&](const Sublocale& x) {
    ElementSet out(tr.frame->size());
    for (Element p : primes(*tr.frame) & x.members())
      if (tr.frame->meet_of(x.members() & tr.frame->strictly_above(p)) != p) out.insert(p);
    return out;
  };
  auto m = chain_intersect(s, t);
  bool ok = tr.visible_levels(fm.members()) == tr.visible_levels(m.levels);
  for (const auto& [sym, fin] : {std::pair{s, fs}, std::pair{t, ft}, std::pair{m, fm}})
    ok = ok && tr.visible_levels(covered_in(fin)) == tr.visible_levels(chain_ptD(sym).levels);
  return ok;
}

/// Two D-sublocales of the chain whose intersection is not a D-sublocale.
inline RemarkRun run_remark(const ChainSublocale& s, const ChainSublocale& t,
                            const std::vector<std::size_t>& depths = {}) {
  RemarkRun r;
  r.s = s;
  r.t = t;
  r.pt_s = chain_ptD(s);
  r.pt_t = chain_ptD(t);
  r.s_is_d = chain_is_D_sublocale(s);
  r.t_is_d = chain_is_D_sublocale(t);
  r.meet = chain_intersect(s, t);
  r.pt_meet = chain_ptD(r.meet);
  r.meet_is_d = chain_is_D_sublocale(r.meet);
  r.pt_whole = chain_ptD(chain_whole());
  r.bottom_in_pt_whole = r.pt_whole.bottom;

  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto& out = r.transcript;
  out.push_back("L = " + describe_chain(chain_whole()));
  out.push_back("pt_D(L) = " + describe_points(r.pt_whole) + "  (⊥ is the meet of all levels, not covered)");
  out.push_back("S = " + describe_chain(s) + "   [" + format_chain(s) + "]");
  out.push_back("pt_D(S) = " + describe_points(r.pt_s) + "   D-sublocale: " + yes(r.s_is_d));
  out.push_back("T = " + describe_chain(t) + "   [" + format_chain(t) + "]");
  out.push_back("pt_D(T) = " + describe_points(r.pt_t) + "   D-sublocale: " + yes(r.t_is_d));
  out.push_back("S∩T = " + describe_chain(r.meet));
  out.push_back("pt_D(S∩T) = " + describe_points(r.pt_meet) + "   ⊥ ∈ pt_D(L): " + yes(r.bottom_in_pt_whole));
  for (auto d : depths) {
    bool ok = truncation_agrees(s, t, d);
    r.truncations.emplace_back(d, ok);
    out.push_back("truncation N=" + std::to_string(d) + ": " + (ok ? "agrees" : "DISAGREES"));
  }
  out.push_back(std::string("verdict: S∩T ") + (r.meet_is_d ? "is a D-sublocale" : "is not a D-sublocale"));
  return r;
}

}  // namespace locale_lab
