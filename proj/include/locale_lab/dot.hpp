#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "space.hpp"

namespace locale_lab {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram of L, bottom to top.
inline std::string frame_dot(const FiniteFrame& f, const std::string& name = "L") {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (Element a = 0; a < f.size(); ++a) out << "  n" << a << " [label=" << detail::dot_quote(f.label(a)) << "];\n";
  for (const auto& [lo, hi] : f.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

/// Hasse diagram of S(L) under inclusion. Closed sublocales are boxes, open
/// ones ellipses, one-point sublocales 𝔟(p) shaded. Nodes are listed in
/// lexicographic order of their member sets.
inline std::string assembly_dot(const Assembly& a, const std::string& name = "S(L)") {
  const auto& f = *a.base();
  const auto n = a.size();
  std::vector<bool> closed(n), open(n), point(n);
  for (Element x = 0; x < f.size(); ++x) {
    closed[a.require_index(closed_sublocale(a.base(), x))] = true;
    open[a.require_index(open_sublocale(a.base(), x))] = true;
  }
  for (Element p : primes(f)) point[a.require_index(boolean_sublocale(a.base(), p))] = true;

  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  s" << i << " [label=" << detail::dot_quote(a[i].to_string());
    if (closed[i]) out << ", shape=box";
    else if (open[i]) out << ", shape=ellipse";
    else out << ", shape=plaintext";
    if (point[i]) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  // Covering pairs of the inclusion order.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !a.included(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && a.included(i, k) && a.included(k, j)) cover = false;
      if (cover) out << "  s" << i << " -> s" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

/// Specialization preorder of a space: an edge x -> y when x ∈ cl{y}, x ≠ y,
/// reduced to covering pairs.
inline std::string space_dot(const FiniteSpace& x, const std::string& name = "X") {
  const auto n = x.points();
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (Element p = 0; p < n; ++p) out << "  p" << p << " [label=\"" << p << "\"];\n";
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      if (p == q || !x.specializes(p, q) || x.specializes(q, p)) continue;
      bool cover = true;
      for (Element r = 0; r < n && cover; ++r)
        if (r != p && r != q && x.specializes(p, r) && x.specializes(r, q) && !x.specializes(r, p) &&
            !x.specializes(q, r))
          cover = false;
      if (cover) out << "  p" << p << " -> p" << q << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace locale_lab
