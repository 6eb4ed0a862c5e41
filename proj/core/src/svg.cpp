#include "sedcore/svg.hpp"

#include <algorithm>
#include <cmath>

#include "sedcore/csv.hpp"
#include "sedcore/errors.hpp"

namespace sedcore {

namespace {

struct Panel {
  double px0, px1, py0, py1;  // pixel box (py0 = top)
  double x0, x1, y0, y1;      // data ranges

  double x(double v) const { return px0 + (v - x0) / (x1 - x0) * (px1 - px0); }
  double y(double v) const { return py1 - (v - y0) / (y1 - y0) * (py1 - py0); }
};

std::string num(double v) { return fixed(v, 2); }

void circle(std::string& out, double cx, double cy, double r, const std::string& fill) {
  out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
         fill + "\"/>\n";
}

void text(std::string& out, double x, double y, const std::string& content,
          const std::string& attrs = "") {
  out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" " + attrs +
         ">" + content + "</text>\n";
}

void line(std::string& out, double x1, double y1, double x2, double y2,
          const std::string& stroke, const std::string& extra = "") {
  out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
         num(y2) + "\" stroke=\"" + stroke + "\" " + extra + "/>\n";
}

}  // namespace

std::string render_objective_chart(const ObjectiveTable& table,
                                   std::span<const ObjectiveRow> front,
                                   std::span<const SelectionResult> sweep,
                                   const std::string& title) {
  require(!front.empty(), "chart needs a non-empty Pareto front");

  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" height=\"440\" "
      "viewBox=\"0 0 900 440\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"440\" fill=\"white\"/>\n";
  text(svg, 450, 22, title, "font-size=\"16\" text-anchor=\"middle\"");

  // Left panel: objective space with the front.
  Panel obj{60, 420, 40, 390, 0.5, 10.5, 0.5, 10.5};
  svg += "<rect x=\"60\" y=\"40\" width=\"360\" height=\"350\" fill=\"#f7f7f7\" "
         "stroke=\"#333\"/>\n";
  for (int g = 1; g <= 10; ++g) {
    line(svg, obj.x(g), obj.py0, obj.x(g), obj.py1, "#dddddd");
    line(svg, obj.px0, obj.y(g), obj.px1, obj.y(g), "#dddddd");
    text(svg, obj.x(g), obj.py1 + 14, std::to_string(g),
         "font-size=\"9\" text-anchor=\"middle\"");
    text(svg, obj.px0 - 6, obj.y(g) + 3, std::to_string(g),
         "font-size=\"9\" text-anchor=\"end\"");
  }
  text(svg, 240, 418, "f1 (normalized)", "font-size=\"11\" text-anchor=\"middle\"");
  text(svg, 24, 215, "f2 (normalized)",
       "font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 24 215)\"");

  std::vector<const ObjectiveRow*> scatter;
  for (const ObjectiveRow& row : table.rows)
    if (!row.excluded && row.f1_norm && row.f2_norm) scatter.push_back(&row);
  std::sort(scatter.begin(), scatter.end(), [](const ObjectiveRow* a, const ObjectiveRow* b) {
    if (*a->f1_norm != *b->f1_norm) return *a->f1_norm < *b->f1_norm;
    if (*a->f2_norm != *b->f2_norm) return *a->f2_norm < *b->f2_norm;
    return a->pattern < b->pattern;
  });
  for (const ObjectiveRow* row : scatter)
    circle(svg, obj.x(*row->f1_norm), obj.y(*row->f2_norm), 3.0, "#9999aa");

  svg += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < front.size(); ++i) {
    if (i > 0) svg += ' ';
    svg += num(obj.x(*front[i].f1_norm)) + ',' + num(obj.y(*front[i].f2_norm));
  }
  svg += "\"/>\n";
  for (const ObjectiveRow& row : front) {
    circle(svg, obj.x(*row.f1_norm), obj.y(*row.f2_norm), 4.0, "#d62728");
    text(svg, obj.x(*row.f1_norm) + 6, obj.y(*row.f2_norm) - 6, row.pattern.label(),
         "font-size=\"9\"");
  }

  // Right panel: weight sweep.
  if (!sweep.empty()) {
    double lo = sweep.front().objective_value, hi = lo;
    for (const SelectionResult& r : sweep) {
      lo = std::min(lo, r.objective_value);
      hi = std::max(hi, r.objective_value);
    }
    const double pad = std::max(0.05, 0.1 * (hi - lo));
    Panel wplot{520, 860, 40, 390, 0.0, 1.0, lo - pad, hi + pad};
    svg += "<rect x=\"520\" y=\"40\" width=\"340\" height=\"350\" fill=\"#f7f7f7\" "
           "stroke=\"#333\"/>\n";
    for (int i = 1; i <= 9; ++i) {
      const double w = i / 10.0;
      line(svg, wplot.x(w), wplot.py0, wplot.x(w), wplot.py1, "#dddddd");
      text(svg, wplot.x(w), wplot.py1 + 14, fixed(w, 1),
           "font-size=\"9\" text-anchor=\"middle\"");
    }
    for (int i = 0; i <= 4; ++i) {
      const double v = wplot.y0 + (wplot.y1 - wplot.y0) * i / 4.0;
      line(svg, wplot.px0, wplot.y(v), wplot.px1, wplot.y(v), "#dddddd");
      text(svg, wplot.px0 - 6, wplot.y(v) + 3, fixed(v, 2),
           "font-size=\"9\" text-anchor=\"end\"");
    }
    text(svg, 690, 418, "w1", "font-size=\"11\" text-anchor=\"middle\"");
    text(svg, 484, 215, "F = w1 f1 + w2 f2",
         "font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 484 215)\"");

    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += num(wplot.x(sweep[i].weights.w1)) + ',' + num(wplot.y(sweep[i].objective_value));
    }
    svg += "\"/>\n";
    for (const SelectionResult& r : sweep)
      circle(svg, wplot.x(r.weights.w1), wplot.y(r.objective_value), 3.5, "#1f77b4");
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace sedcore
