// Copyright 2026 The arcgon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arcgon/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "arcgon/constructions.hpp"
#include "arcgon/document.hpp"
#include "arcgon/errors.hpp"
#include "arcgon/flip.hpp"

namespace arcgon {
namespace {

constexpr double kCentre = 200.0;
constexpr double kRadius = 160.0;

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

struct Xy {
  double x;
  double y;
};

Xy place(const CyclicOrder& c, const Point& p, std::int64_t window) {
  const Rational q = c.circle_position(p, window);
  const double angle = 2.0 * std::numbers::pi * boost::rational_cast<double>(q);
  return {kCentre + kRadius * std::sin(angle), kCentre - kRadius * std::cos(angle)};
}

std::string mark(bool v) { return v ? "yes" : "no"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_svg(const SymbolicArcSet& s, std::int64_t window) {
  if (window < 1) throw DomainError("window must be at least 1");
  const CyclicOrder& c = s.order();
  std::vector<Point> points;
  if (c.is_finite()) {
    for (std::int64_t i = 0; i < c.size(); ++i) points.push_back(c.finite_point(i));
  } else {
    for (std::int32_t t = 0; t < c.thread_count(); ++t) {
      for (std::int64_t e = -window; e <= window; ++e) points.push_back(Point{t, e});
    }
  }
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"440\" "
      "viewBox=\"0 0 400 440\">\n"
      "  <circle cx=\"200.000\" cy=\"200.000\" r=\"160.000\" fill=\"none\" stroke=\"#999999\"/>\n";
  for (const Arc& p : members_in_window(s, window)) {
    const Xy a = place(c, p.a, window);
    const Xy b = place(c, p.b, window);
    out += "  <line x1=\"" + fixed3(a.x) + "\" y1=\"" + fixed3(a.y) + "\" x2=\"" + fixed3(b.x) +
           "\" y2=\"" + fixed3(b.y) + "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
  }
  for (const Point& p : points) {
    const Xy a = place(c, p, window);
    out += "  <circle cx=\"" + fixed3(a.x) + "\" cy=\"" + fixed3(a.y) +
           "\" r=\"2.5\" fill=\"#000000\"><title>" + c.format(p) + "</title></circle>\n";
  }
  std::string legend;
  if (c.is_finite()) {
    legend = std::to_string(c.size()) + "-gon, all arcs shown";
  } else {
    legend = std::to_string(c.thread_count()) + " thread(s), offsets in [-" +
             std::to_string(window) + ", " + std::to_string(window) +
             "]; arcs leaving the window are not drawn";
  }
  out += "  <text x=\"200\" y=\"425\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" + legend + "</text>\n</svg>\n";
  return out;
}

std::string render_dot(const ExchangeGraph& g) {
  std::string out = "graph exchange {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    std::string label;
    for (const Arc& p : g.vertices[i]) {
      if (!label.empty()) label += " ";
      label += "{" + std::to_string(p.a.offset) + ", " + std::to_string(p.b.offset) + "}";
    }
    out += "  v" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [i, j] : g.edges) {
    out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
  }
  return out + "}\n";
}

std::string examples_table() {
  constexpr std::size_t kLabel = 24;
  constexpr std::size_t kCell = 5;
  std::string head = pad("", kLabel);
  std::vector<std::string> rows = {pad("Connected", kLabel), pad("Maximal", kLabel),
                                   pad("Triangulation", kLabel), pad("Locally finite", kLabel)};
  std::string exch_head = pad("", kLabel);
  std::string exch = pad("All arcs exchangeable", kLabel);
  for (int i = 1; i <= 11; ++i) {
    const auto s = builtin_example(i);
    const std::string name = "S" + std::to_string(i);
    head += pad(name, kCell);
    const bool maximal = is_maximal(s).holds;
    rows[0] += pad(mark(is_connected(s)), kCell);
    rows[1] += pad(mark(maximal), kCell);
    rows[2] += pad(mark(is_triangulation(s).holds), kCell);
    rows[3] += pad(mark(is_locally_finite(s)), kCell);
    if (maximal) {
      exch_head += pad(name, kCell);
      exch += pad(mark(all_arcs_exchangeable(s).holds), kCell);
    }
  }
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = trim(head);
  for (const auto& r : rows) out += trim(r);
  out += "\n" + trim(exch_head) + trim(exch);
  return out;
}

std::string examples_listing() {
  std::string out;
  for (int i = 1; i <= 11; ++i) {
    out += "# S" + std::to_string(i) + "\n" + print_document(builtin_example(i)) + "\n";
  }
  return out + examples_table();
}

}  // namespace arcgon
