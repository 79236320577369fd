#include "tlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tlab {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Box {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  void add(double x, double y) {
    x0 = std::min(x0, x); x1 = std::max(x1, x);
    y0 = std::min(y0, y); y1 = std::max(y1, y);
  }
};

class Canvas {
 public:
  Canvas(const Box& b, double size, double ox) : box_(b), size_(size), ox_(ox) {
    double w = std::max(b.x1 - b.x0, 1e-9), h = std::max(b.y1 - b.y0, 1e-9);
    scale_ = (size - 2 * margin_) / std::max(w, h);
  }
  double px(double x) const { return ox_ + margin_ + (x - box_.x0) * scale_; }
  double py(double y) const { return margin_ + (box_.y1 - y) * scale_; }

 private:
  Box box_;
  double size_, ox_, scale_, margin_ = 24;
};

void draw_poly(std::ostringstream& os, const Canvas& c, const std::vector<std::pair<double, double>>& pts,
               const std::string& color, const std::string& label) {
  os << "<polygon points=\"";
  for (auto [x, y] : pts) os << c.px(x) << "," << c.py(y) << " ";
  os << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
     << "\" stroke-width=\"1\"/>\n";
  if (!pts.empty())
    os << "<text x=\"" << c.px(pts[0].first) << "\" y=\"" << c.py(pts[0].second)
       << "\" font-size=\"9\" fill=\"" << color << "\">" << label << "</text>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Realization2* overlay) {
  std::ostringstream os;
  const double size = 480;
  const bool flat = inst.dim == 2;
  const double width = flat ? size : 2 * size + 20;

  // collect drawable coordinates per view (xy always; xz for 3D)
  struct View {
    std::string label;
    std::vector<std::vector<std::pair<double, double>>> polys;
    std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>> segs;
    Box box;
  };
  std::vector<View> views(flat ? 1 : 2);
  views[0].label = flat ? "" : "xy";
  if (!flat) views[1].label = "xz";

  auto add_point = [&](View& v, double x, double y) { v.box.add(x, y); };

  if (flat) {
    for (const auto& K : inst.sets2) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : K.vertices()) {
        pts.push_back({p.x.to_double(), p.y.to_double()});
        add_point(views[0], pts.back().first, pts.back().second);
      }
      views[0].polys.push_back(pts);
    }
  } else {
    for (const auto& K : inst.sets3) {
      std::vector<Point2> xy, xz;
      for (const auto& p : K.vertices()) {
        xy.push_back({p.x, p.y});
        xz.push_back({p.x, p.z});
      }
      for (int view = 0; view < 2; ++view) {
        ConvexPoly2 hull = ConvexPoly2::hull_of(view == 0 ? xy : xz);
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : hull.vertices()) {
          pts.push_back({p.x.to_double(), p.y.to_double()});
          add_point(views[view], pts.back().first, pts.back().second);
        }
        views[view].polys.push_back(pts);
      }
    }
    for (const auto& l : inst.lines) {
      // draw a long chunk of the line in both projections
      Point3 a = l.at(Scalar(-10)), b = l.at(Scalar(10));
      views[0].segs.push_back({{a.x.to_double(), a.y.to_double()}, {b.x.to_double(), b.y.to_double()}});
      views[1].segs.push_back({{a.x.to_double(), a.z.to_double()}, {b.x.to_double(), b.z.to_double()}});
      add_point(views[0], a.x.to_double(), a.y.to_double());
      add_point(views[0], b.x.to_double(), b.y.to_double());
      add_point(views[1], a.x.to_double(), a.z.to_double());
      add_point(views[1], b.x.to_double(), b.z.to_double());
    }
  }
  if (overlay && flat) {
    for (size_t i = 0; i < overlay->segments.size(); ++i) {
      const Segment2& s = overlay->segments[i];
      views[0].segs.push_back({{s.a.x.to_double(), s.a.y.to_double()},
                               {s.b.x.to_double(), s.b.y.to_double()}});
    }
  }

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << width << " " << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t v = 0; v < views.size(); ++v) {
    Canvas c(views[v].box, size, v * (size + 20));
    if (!views[v].label.empty())
      os << "<text x=\"" << v * (size + 20) + 10 << "\" y=\"14\" font-size=\"12\">"
         << views[v].label << "</text>\n";
    for (size_t i = 0; i < views[v].polys.size(); ++i)
      draw_poly(os, c, views[v].polys[i], kPalette[i % 10],
                i < inst.ids.size() ? inst.ids[i] : "");
    for (size_t i = 0; i < views[v].segs.size(); ++i) {
      auto [a, b] = views[v].segs[i];
      os << "<line x1=\"" << c.px(a.first) << "\" y1=\"" << c.py(a.second) << "\" x2=\""
         << c.px(b.first) << "\" y2=\"" << c.py(b.second)
         << "\" stroke=\"#333\" stroke-width=\"1\" stroke-dasharray=\"4,2\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tlab
