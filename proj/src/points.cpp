#include "mgp/points.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace mgp {

bool operator<(const ProjCoordinate& a, const ProjCoordinate& b) {
  const int cu = cmp(a.u, b.u);
  if (cu != 0) {
    return cu < 0;
  }
  return cmp(a.v, b.v) < 0;
}

ProjCoordinate canonicalize(const Rat& u, const Rat& v) {
  if (u == 0 && v == 0) {
    throw std::invalid_argument("zero coordinate: [0:0] is not a projective point");
  }
  if (u != 0) {
    return ProjCoordinate{Rat(1), v / u};
  }
  return ProjCoordinate{Rat(0), Rat(1)};
}

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

Point make_point(const std::vector<std::pair<Rat, Rat>>& raw) {
  Point p;
  p.coords.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    p.coords.push_back(canonicalize(u, v));
  }
  return p;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("point set must contain at least one point");
  }
  arity_ = points_[0].arity();
  if (arity_ < 2) {
    throw std::invalid_argument("points must have at least 2 factors, got " +
                                std::to_string(arity_));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].arity() != arity_) {
      throw std::invalid_argument("mixed arity: point " + std::to_string(i + 1) + " has " +
                                  std::to_string(points_[i].arity()) + " factors, expected " +
                                  std::to_string(arity_));
    }
  }
  std::map<Point, std::size_t> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto [it, inserted] = seen.emplace(points_[i], i);
    if (!inserted) {
      throw std::invalid_argument("duplicate point: entries " + std::to_string(it->second + 1) +
                                  " and " + std::to_string(i + 1) + " are both " +
                                  to_plain_text(points_[i]));
    }
  }
}

PointSet PointSet::empty(std::size_t arity) {
  if (arity < 2) {
    throw std::invalid_argument("points must have at least 2 factors, got " +
                                std::to_string(arity));
  }
  return PointSet({}, arity);
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits on sep, trimming surrounding whitespace from each piece and
// remembering where the piece started.
std::vector<Token> split_tokens(const std::string& line, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    std::string piece = line.substr(start, end == std::string::npos ? std::string::npos
                                                                    : end - start);
    std::size_t lead = piece.find_first_not_of(" \t");
    std::size_t col = start + (lead == std::string::npos ? 0 : lead) + 1;
    std::size_t tail = piece.find_last_not_of(" \t");
    if (lead == std::string::npos) {
      out.push_back(Token{"", col});
    } else {
      out.push_back(Token{piece.substr(lead, tail - lead + 1), col});
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

Rat parse_rat_at(const std::string& text, std::size_t line_no, std::size_t column) {
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, column);
  }
}

std::vector<Point> parse_plain(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::vector<std::pair<Rat, Rat>> raw;
    for (const Token& factor : split_tokens(line, '|')) {
      if (factor.text.empty()) {
        throw ParseError("empty factor", line_no, factor.column);
      }
      std::vector<Token> parts = split_tokens(factor.text, ':');
      if (parts.size() != 2) {
        throw ParseError("factor must be 'u:v', got '" + factor.text + "'", line_no,
                         factor.column);
      }
      Rat u = parse_rat_at(parts[0].text, line_no, factor.column + parts[0].column - 1);
      Rat v = parse_rat_at(parts[1].text, line_no, factor.column + parts[1].column - 1);
      raw.emplace_back(std::move(u), std::move(v));
    }
    try {
      points.push_back(make_point(raw));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  return points;
}

std::vector<Point> parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  if (!doc.is_array()) {
    throw ParseError("top-level JSON value must be an array of points", 1, 1);
  }
  std::vector<Point> points;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& pt = doc[i];
    if (!pt.is_array() || pt.empty()) {
      throw ParseError("point " + std::to_string(i + 1) + " must be a nonempty array of factors",
                       1, 1);
    }
    std::vector<std::pair<Rat, Rat>> raw;
    for (const auto& factor : pt) {
      if (!factor.is_array() || factor.size() != 2 || !factor[0].is_string() ||
          !factor[1].is_string()) {
        throw ParseError("point " + std::to_string(i + 1) +
                             ": each factor must be a two-element array of strings",
                         1, 1);
      }
      try {
        raw.emplace_back(parse_rat(factor[0].get<std::string>()),
                         parse_rat(factor[1].get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError("point " + std::to_string(i + 1) + ": " + e.what(), 1, 1);
      }
    }
    try {
      points.push_back(make_point(raw));
    } catch (const std::invalid_argument& e) {
      throw ParseError("point " + std::to_string(i + 1) + ": " + e.what(), 1, 1);
    }
  }
  return points;
}

}  // namespace

PointSet parse_point_set(std::istream& in, PointFormat format) {
  std::vector<Point> points =
      format == PointFormat::kPlain ? parse_plain(in) : parse_json(in);
  if (points.empty()) {
    throw ParseError("no points found in input", 1, 1);
  }
  return PointSet(std::move(points));
}

PointSet parse_point_set(const std::string& text, PointFormat format) {
  std::istringstream in(text);
  return parse_point_set(in, format);
}

std::string to_plain_text(const Point& p) {
  std::string out;
  for (std::size_t a = 0; a < p.coords.size(); ++a) {
    if (a > 0) {
      out += " | ";
    }
    out += rat_to_string(p.coords[a].u) + ":" + rat_to_string(p.coords[a].v);
  }
  return out;
}

std::string to_plain_text(const PointSet& x) {
  std::string out;
  for (const Point& p : x.points()) {
    out += to_plain_text(p);
    out += '\n';
  }
  return out;
}

std::size_t projection_count(const PointSet& x, std::size_t axis) {
  if (axis >= x.arity()) {
    throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for arity " +
                                std::to_string(x.arity()));
  }
  std::set<ProjCoordinate> distinct;
  for (const Point& p : x.points()) {
    distinct.insert(p.coords[axis]);
  }
  return distinct.size();
}

bool operator<(const LineKey& a, const LineKey& b) {
  if (a.free_axis != b.free_axis) {
    return a.free_axis < b.free_axis;
  }
  return std::lexicographical_compare(a.fixed_coords.begin(), a.fixed_coords.end(),
                                      b.fixed_coords.begin(), b.fixed_coords.end());
}

LineKey line_through(const Point& p, std::size_t free_axis) {
  if (free_axis >= p.arity()) {
    throw std::invalid_argument("free axis " + std::to_string(free_axis) +
                                " out of range for arity " + std::to_string(p.arity()));
  }
  LineKey key{free_axis, {}};
  key.fixed_coords.reserve(p.arity() - 1);
  for (std::size_t a = 0; a < p.arity(); ++a) {
    if (a != free_axis) {
      key.fixed_coords.push_back(p.coords[a]);
    }
  }
  return key;
}

std::map<LineKey, PointSet> group_by_line(const PointSet& x, std::size_t free_axis) {
  if (free_axis >= x.arity()) {
    throw std::invalid_argument("free axis " + std::to_string(free_axis) +
                                " out of range for arity " + std::to_string(x.arity()));
  }
  std::map<LineKey, std::vector<Point>> buckets;
  for (const Point& p : x.points()) {
    buckets[line_through(p, free_axis)].push_back(p);
  }
  std::map<LineKey, PointSet> out;
  for (auto& [key, pts] : buckets) {
    out.emplace(key, PointSet(std::move(pts)));
  }
  return out;
}

}  // namespace mgp
