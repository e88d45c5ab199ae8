#include "bsn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bsn {

using nlohmann::json;

namespace {

Point2 to_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("point must be a pair of numbers");
  const Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p)) throw std::runtime_error("non-finite coordinate");
  return p;
}

json from_point(Point2 p) { return json::array({p.x, p.y}); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::vector<Point2> parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw std::runtime_error("instance must be an object with a \"points\" array");
  std::vector<Point2> pts;
  for (const json& p : doc["points"]) pts.push_back(to_point(p));
  return pts;
}

std::string format_instance(const std::vector<Point2>& points) {
  json doc;
  doc["points"] = json::array();
  for (Point2 p : points) doc["points"].push_back(from_point(p));
  return doc.dump(2) + "\n";
}

std::string format_solution(const SolutionNetwork& s) {
  json doc;
  doc["k"] = s.k;
  doc["bottleneck"] = s.bottleneck;
  doc["threshold"] = s.threshold;
  doc["steiner"] = json::array();
  for (Point2 p : s.steiner) doc["steiner"].push_back(from_point(p));
  doc["edges"] = json::array();
  for (const Edge& e : s.edges) doc["edges"].push_back(json::array({e.u, e.v}));
  return doc.dump(2) + "\n";
}

SolutionNetwork parse_solution(const std::string& text, const std::vector<Point2>& terminals) {
  const json doc = parse_json(text);
  for (const char* key : {"k", "bottleneck", "threshold", "steiner", "edges"})
    if (!doc.is_object() || !doc.contains(key)) throw std::runtime_error(std::string("solution lacks \"") + key + "\"");
  SolutionNetwork s;
  s.terminals = terminals;
  s.k = doc["k"].get<int>();
  s.threshold = doc["threshold"].get<double>();
  for (const json& p : doc["steiner"]) s.steiner.push_back(to_point(p));
  const auto all = s.vertices();
  const int nv = static_cast<int>(all.size());
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::runtime_error("edge must be a pair of indices");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= nv || v >= nv || u == v) throw std::runtime_error("edge index out of range");
    if (u > v) std::swap(u, v);
    const double len = distance(all[u], all[v]);
    s.edges.push_back({u, v, len});
    s.bottleneck = std::max(s.bottleneck, len);
  }
  return s;
}

std::string render_svg(const SolutionNetwork& s, int size_px) {
  const auto all = s.vertices();
  Point2 lo = all.empty() ? Point2{0, 0} : all[0], hi = lo;
  for (Point2 p : all) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  const double margin = 0.06 * size_px;
  const double scale = (size_px - 2 * margin) / span;
  auto sx = [&](Point2 p) { return margin + (p.x - lo.x) * scale; };
  auto sy = [&](Point2 p) { return size_px - margin - (p.y - lo.y) * scale; };  // y up

  std::size_t longest = s.edges.size();
  double best = -1.0;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const double len = distance(all[s.edges[i].u], all[s.edges[i].v]);
    if (len > best) {
      best = len;
      longest = i;
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size_px << "\" height=\""
      << size_px << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const Point2 a = all[s.edges[i].u], b = all[s.edges[i].v];
    const bool hl = i == longest;
    out << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
        << "\" stroke=\"" << (hl ? "#d62728" : "#444444") << "\" stroke-width=\"" << (hl ? 3 : 1.5) << "\"/>\n";
  }
  const double r = std::max(3.0, 0.012 * size_px);
  for (Point2 p : s.terminals)
    out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << r << "\" fill=\"black\"/>\n";
  for (Point2 p : s.steiner)
    out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << r
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bsn
