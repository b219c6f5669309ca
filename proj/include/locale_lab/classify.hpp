#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "localic_map.hpp"
#include "space.hpp"

namespace locale_lab {

/// The distinguished families of S(L), computed once per assembly.
struct Families {
  Family all, sb, sc, sd, sp, smooth;

  explicit Families(const Assembly& a)
      : all(a.all()), sb(S_b(a)), sc(S_c(a)), sd(S_D(a)), sp(sp_S(a)), smooth(smooth_family(a)) {}
};

/// Frame properties computed from L alone, without the assembly, except for
/// D-scatteredness which is read off its characterization by pointless sublocales.
struct FrameProperties {
  bool spatial = false;
  bool subfit = false;
  bool scattered = false;
  bool totally_spatial = false;
  bool primes_covered = false;
  bool primes_maximal = false;
  bool td_spatial = false;
  bool strongly_td_spatial = false;
  std::optional<bool> d_scattered;
};

/// L ≅ Ω(pt_D(L)): the surjection a ↦ Σ′_a is injective.
inline bool is_td_spatial(const FiniteFrame& f) { return spectrum_map_injective(f, covered_primes(f)); }

inline bool all_primes_covered(const FiniteFrame& f) { return covered_primes(f) == primes(f); }

/// Every element is the meet of its essential primes.
inline bool meets_of_essential_primes(const FiniteFrame& f) {
  if (!is_spatial(f)) return false;
  for (Element a = 0; a < f.size(); ++a)
    if (f.meet_of(essential_primes(f, a)) != a) return false;
  return true;
}

/// Sublocales with no covered prime in themselves are smooth.
inline bool pointless_sublocales_smooth(const Assembly& a, const Families& fam) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (pt_D(a[i]).empty() && !fam.smooth.contains(static_cast<Element>(i))) return false;
  return true;
}

inline FrameProperties frame_properties(const FiniteFrame& f) {
  FrameProperties p;
  p.spatial = is_spatial(f);
  p.subfit = is_subfit(f);
  p.scattered = p.spatial && is_scattered(spectrum(f).space);
  p.totally_spatial = meets_of_essential_primes(f);
  p.primes_covered = all_primes_covered(f);
  p.primes_maximal = maximal_primes_only(f);
  p.td_spatial = is_td_spatial(f);
  p.strongly_td_spatial = p.spatial && p.primes_covered;
  return p;
}

struct TableRow {
  std::string key;       // stable machine name
  std::string relation;  // the inclusion between families
  std::string property;  // the frame property it characterizes
  bool relation_holds = false;
  bool property_holds = false;

  bool agree() const { return relation_holds == property_holds; }
};

struct Classification {
  std::size_t frame_size = 0;
  std::optional<std::size_t> assembly_size, sb_size, sc_size, sd_size, sp_size;
  FrameProperties properties;
  std::vector<TableRow> rows;
  std::optional<std::string> degraded;  // set when the assembly could not be enumerated

  bool all_agree() const {
    for (const auto& r : rows)
      if (!r.agree()) return false;
    return true;
  }
};

inline std::vector<TableRow> table_rows(const Families& fam, const FrameProperties& p) {
  const bool dsc = p.d_scattered.value_or(false);
  auto sub = [](const Family& x, const Family& y) { return x.is_subset_of(y); };
  return {
      {"sb_subset_sp", "S_b ⊆ sp[S(L)]", "spatial", sub(fam.sb, fam.sp), p.spatial},
      {"sb_eq_sp", "S_b = sp[S(L)]", "strongly T_D-spatial", fam.sb == fam.sp, p.strongly_td_spatial},
      {"sb_eq_all", "S_b = S(L)", "scattered", fam.sb == fam.all, p.scattered},
      {"all_eq_sd", "S(L) = S_D", "primes are covered", fam.all == fam.sd, p.primes_covered},
      {"all_eq_sp", "S(L) = sp[S(L)]", "totally spatial", fam.all == fam.sp, p.totally_spatial},
      {"sb_eq_sd", "S_b = S_D", "D-scattered", fam.sb == fam.sd, dsc},
      {"sd_subset_sb", "S_D ⊆ S_b", "D-scattered", sub(fam.sd, fam.sb), dsc},
      {"sd_subset_sp", "S_D ⊆ sp[S(L)]", "totally spatial", sub(fam.sd, fam.sp), p.totally_spatial},
      {"sp_subset_sd", "sp[S(L)] ⊆ S_D", "primes are covered", sub(fam.sp, fam.sd), p.primes_covered},
      {"sc_subset_sp", "S_c ⊆ sp[S(L)]", "spatial", sub(fam.sc, fam.sp), p.spatial},
      {"sp_subset_sc", "sp[S(L)] ⊆ S_c", "primes are maximal", sub(fam.sp, fam.sc), p.primes_maximal},
      {"sd_subset_sc", "S_D ⊆ S_c", "subfit and D-scattered", sub(fam.sd, fam.sc), p.subfit && dsc},
      {"sd_eq_sc", "S_D = S_c", "subfit and D-scattered", fam.sd == fam.sc, p.subfit && dsc},
      {"all_eq_sc", "S(L) = S_c", "subfit and scattered", fam.all == fam.sc, p.subfit && p.scattered},
      {"sc_eq_sb", "S_c = S_b", "subfit", fam.sc == fam.sb, p.subfit},
  };
}

/// Classifies a frame. When the assembly exceeds `cap`, the report keeps the
/// frame-only properties and drops the family sizes and table rows.
inline Classification classify(const FramePtr& frame, std::size_t cap = cap_from_environment()) {
  Classification c;
  c.frame_size = frame->size();
  c.properties = frame_properties(*frame);
  std::optional<Assembly> a;
  try {
    a.emplace(enumerate_assembly(frame, cap));
  } catch (const CapExceeded& e) {
    c.degraded = e.what();
    return c;
  }
  Families fam(*a);
  c.properties.d_scattered = pointless_sublocales_smooth(*a, fam);
  c.assembly_size = a->size();
  c.sb_size = fam.sb.size();
  c.sc_size = fam.sc.size();
  c.sd_size = fam.sd.size();
  c.sp_size = fam.sp.size();
  c.rows = table_rows(fam, c.properties);
  return c;
}

namespace detail {

inline std::vector<std::pair<std::string, std::optional<bool>>> property_list(const FrameProperties& p) {
  return {{"spatial", p.spatial},
          {"subfit", p.subfit},
          {"scattered", p.scattered},
          {"d_scattered", p.d_scattered},
          {"totally_spatial", p.totally_spatial},
          {"primes_covered", p.primes_covered},
          {"primes_maximal", p.primes_maximal},
          {"td_spatial", p.td_spatial},
          {"strongly_td_spatial", p.strongly_td_spatial}};
}

inline std::vector<std::pair<std::string, std::optional<std::size_t>>> size_list(const Classification& c) {
  return {{"L", c.frame_size}, {"S(L)", c.assembly_size}, {"S_b", c.sb_size},
          {"S_c", c.sc_size},  {"S_D", c.sd_size},        {"sp[S(L)]", c.sp_size}};
}

}  // namespace detail

inline std::string format_text(const Classification& c) {
  std::ostringstream out;
  for (const auto& [name, v] : detail::size_list(c))
    out << "|" << name << "| = " << (v ? std::to_string(*v) : std::string("?")) << "\n";
  for (const auto& [name, v] : detail::property_list(c.properties))
    out << name << ": " << (v ? (*v ? "yes" : "no") : "unknown") << "\n";
  if (c.degraded) out << "table skipped: " << *c.degraded << "\n";
  for (const auto& r : c.rows)
    out << (r.agree() ? "AGREE    " : "DISAGREE ") << r.relation << " [" << (r.relation_holds ? "holds" : "fails")
        << "]  <->  " << r.property << " [" << (r.property_holds ? "yes" : "no") << "]\n";
  return out.str();
}

inline std::string format_keyvalue(const Classification& c) {
  static const char* size_keys[] = {"size.frame", "size.assembly", "size.sb", "size.sc", "size.sd", "size.sp"};
  std::ostringstream out;
  auto sizes = detail::size_list(c);
  for (std::size_t k = 0; k < sizes.size(); ++k)
    out << size_keys[k] << "=" << (sizes[k].second ? std::to_string(*sizes[k].second) : std::string("unknown")) << "\n";
  for (const auto& [name, v] : detail::property_list(c.properties))
    out << "property." << name << "=" << (v ? (*v ? "true" : "false") : "unknown") << "\n";
  if (c.degraded) out << "degraded=true\n";
  for (const auto& r : c.rows) {
    out << "row." << r.key << ".relation=" << (r.relation_holds ? "true" : "false") << "\n";
    out << "row." << r.key << ".property=" << (r.property_holds ? "true" : "false") << "\n";
    out << "row." << r.key << ".verdict=" << (r.agree() ? "AGREE" : "DISAGREE") << "\n";
  }
  return out.str();
}

}  // namespace locale_lab
