#include "urysohn/dms.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw StructuralError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Space parse_dms(std::string_view text) {
  std::optional<ExtMonoid> monoid;
  std::vector<std::string> points;
  bool have_points = false;
  std::vector<std::optional<ExtValue>> table;
  std::size_t pairs_seen = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (!monoid) {
      if (tok[0] != "monoid" || tok.size() != 2) fail(line_no, "expected 'monoid <designator>'");
      try {
        monoid = parse_monoid(tok[1]);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      continue;
    }
    if (!have_points) {
      if (tok[0] != "points" || tok.size() < 2) fail(line_no, "expected 'points p1 ... pn'");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        for (const auto& p : points) {
          if (p == tok[i]) fail(line_no, "duplicate point '" + std::string(tok[i]) + "'");
        }
        points.emplace_back(tok[i]);
      }
      have_points = true;
      table.assign(points.size() * points.size(), std::nullopt);
      continue;
    }
    if (tok[0] != "d" || tok.size() != 4) fail(line_no, "expected 'd <p> <q> <value>'");
    auto index = [&](std::string_view id) -> std::size_t {
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == id) return i;
      }
      fail(line_no, "unknown point '" + std::string(id) + "'");
    };
    const std::size_t i = index(tok[1]);
    const std::size_t j = index(tok[2]);
    if (i == j) fail(line_no, "distance from a point to itself is implicit");
    if (table[i * points.size() + j]) {
      fail(line_no, "pair " + std::string(tok[1]) + " " + std::string(tok[2]) + " given twice");
    }
    ExtValue v;
    try {
      v = ExtValue::parse(tok[3]);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    table[i * points.size() + j] = v;
    table[j * points.size() + i] = v;
    ++pairs_seen;
  }

  if (!monoid) throw StructuralError("missing 'monoid' line");
  if (!have_points) throw StructuralError("missing 'points' line");
  const std::size_t n = points.size();
  std::vector<ExtValue> full(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!table[i * n + j]) {
        throw StructuralError("missing distance for pair " + points[std::min(i, j)] + " " +
                              points[std::max(i, j)] + " (" + std::to_string(pairs_seen) + " of " +
                              std::to_string(n * (n - 1) / 2) + " pairs given)");
      }
      full[i * n + j] = *table[i * n + j];
    }
  }
  return Space(std::move(*monoid), std::move(points), std::move(full));
}

std::string serialize_dms(const Space& sp) {
  if (sp.monoid().designator().empty()) {
    throw UnsupportedError("cannot serialize a space over an unnamed table monoid");
  }
  std::ostringstream out;
  out << "monoid " << sp.monoid().designator() << "\npoints";
  for (const auto& p : sp.points()) out << ' ' << p;
  out << '\n';
  const auto pts = sp.points();
  for (std::size_t i = 0; i < sp.size(); ++i) {
    for (std::size_t j = i + 1; j < sp.size(); ++j) {
      out << "d " << pts[i] << ' ' << pts[j] << ' ' << sp.dist(i, j).to_string() << '\n';
    }
  }
  return out.str();
}

}  // namespace urysohn
