#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frame.hpp"

namespace locale_lab {

namespace text {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_number(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

/// A significant line split as "key: rest". Comments start at '#'.
struct KeyLine {
  std::size_t line;
  std::string key;
  std::string rest;
};

inline std::vector<KeyLine> key_lines(std::istream& in) {
  std::vector<KeyLine> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view v = raw;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    auto colon = v.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
    out.push_back({line_no, std::string(trim(v.substr(0, colon))), std::string(trim(v.substr(colon + 1)))});
  }
  return out;
}

inline std::size_t element_id(const KeyLine& l, std::string_view word, std::size_t n) {
  std::size_t id = 0;
  if (!parse_number(word, id)) throw ParseError(l.line, "not a decimal identifier: '" + std::string(word) + "'");
  if (id >= n) throw ParseError(l.line, "identifier " + std::to_string(id) + " out of range");
  return id;
}

}  // namespace text

/// Parses the frame text format:
///   elements: n        (first significant line)
///   cover: i j         (i is covered by j)
///   label: i name      (optional, name is one token, unique)
/// Order violations are reported as FrameError, syntax as ParseError.
inline FiniteFrame read_frame(std::istream& in) {
  auto lines = text::key_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'elements:' line");
  const auto& head = lines.front();
  if (head.key != "elements") throw ParseError(head.line, "first line must be 'elements: n'");
  std::size_t n = 0;
  if (!text::parse_number(text::trim(head.rest), n)) throw ParseError(head.line, "element count is not a number");
  if (n == 0) throw ParseError(head.line, "element count must be positive");

  std::vector<std::pair<Element, Element>> covers;
  std::vector<std::string> labels(n);
  for (Element i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<bool> labelled(n, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    auto w = text::words(l.rest);
    if (l.key == "cover") {
      if (w.size() != 2) throw ParseError(l.line, "cover needs two identifiers");
      covers.emplace_back(static_cast<Element>(text::element_id(l, w[0], n)),
                          static_cast<Element>(text::element_id(l, w[1], n)));
    } else if (l.key == "label") {
      if (w.size() != 2) throw ParseError(l.line, "label needs an identifier and one name token");
      auto id = text::element_id(l, w[0], n);
      if (labelled[id]) throw ParseError(l.line, "element " + std::to_string(id) + " labelled twice");
      labelled[id] = true;
      labels[id] = std::string(w[1]);
    } else if (l.key == "elements") {
      throw ParseError(l.line, "duplicate 'elements:' line");
    } else {
      throw ParseError(l.line, "unknown key '" + l.key + "'");
    }
  }
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw ParseError(head.line, "duplicate label '" + labels[i] + "'");
  return make_frame(OrderRelation::from_covers(n, covers), std::move(labels));
}

inline FiniteFrame parse_frame(const std::string& content) {
  std::istringstream in(content);
  return read_frame(in);
}

inline FiniteFrame load_frame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_frame(in);
}

/// Writes covers in Hasse order and labels that differ from the id.
inline void write_frame(std::ostream& out, const FiniteFrame& f) {
  out << "elements: " << f.size() << '\n';
  for (auto [lo, hi] : f.covers()) out << "cover: " << lo << ' ' << hi << '\n';
  for (Element a = 0; a < f.size(); ++a)
    if (f.label(a) != std::to_string(a)) out << "label: " << a << ' ' << f.label(a) << '\n';
}

inline std::string frame_text(const FiniteFrame& f) {
  std::ostringstream out;
  write_frame(out, f);
  return out.str();
}

}  // namespace locale_lab
