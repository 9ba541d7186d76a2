#include "ryb/figure.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ryb/error.hpp"
#include "ryb/geometry.hpp"

namespace ryb {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 640.0;
constexpr double kMargin = 40.0;
constexpr int kBranchSamples = 400;

class Canvas {
 public:
  explicit Canvas(const FigureWindow& w) : w_(w) {}

  double x(double s) const { return kMargin + (s - w_.s_min) / (w_.s_max - w_.s_min) * (kWidth - 2 * kMargin); }
  double y(double u) const { return kHeight - kMargin - (u - w_.u_min) / (w_.u_max - w_.u_min) * (kHeight - 2 * kMargin); }
  bool inside(double s, double u) const {
    return s >= w_.s_min && s <= w_.s_max && u >= w_.u_min && u <= w_.u_max;
  }

  // Liang-Barsky clip of the segment p0 -> p1 against the window.
  bool clip(Point& p0, Point& p1) const {
    double t0 = 0.0;
    double t1 = 1.0;
    const double ds = p1.s - p0.s;
    const double du = p1.u - p0.u;
    const std::array<double, 4> p{-ds, ds, -du, du};
    const std::array<double, 4> q{p0.s - w_.s_min, w_.s_max - p0.s, p0.u - w_.u_min, w_.u_max - p0.u};
    for (std::size_t k = 0; k < 4; ++k) {
      if (p[k] == 0.0) {
        if (q[k] < 0.0) return false;
        continue;
      }
      const double t = q[k] / p[k];
      if (p[k] < 0.0) {
        t0 = std::max(t0, t);
      } else {
        t1 = std::min(t1, t);
      }
      if (t0 > t1) return false;
    }
    const Point a{p0.s + t0 * ds, p0.u + t0 * du};
    const Point b{p0.s + t1 * ds, p0.u + t1 * du};
    p0 = a;
    p1 = b;
    return true;
  }

  const FigureWindow& window() const { return w_; }

 private:
  FigureWindow w_;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void polyline(std::ostringstream& os, const Canvas& cv, const std::vector<Point>& pts, const char* cls,
              const char* branch) {
  if (pts.size() < 2) return;
  os << "<polyline class=\"" << cls << "\" data-branch=\"" << branch << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << fmt("%.2f,%.2f", cv.x(pts[i].s), cv.y(pts[i].u));
  }
  os << "\" fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"2\"/>\n";
}

void boundary_branch(std::ostringstream& os, const Canvas& cv, double ratio, double lo, double hi,
                     const char* branch) {
  if (!(lo < hi)) return;
  std::vector<Point> run;
  for (int k = 0; k <= kBranchSamples; ++k) {
    const double s = lo + (hi - lo) * k / kBranchSamples;
    if (std::abs(s + 1.0) <= kPoleTol) continue;
    const double u = -ratio * s / (s + 1.0);
    if (cv.inside(s, u)) {
      run.push_back({s, u});
    } else {
      polyline(os, cv, run, "boundary", branch);
      run.clear();
    }
  }
  polyline(os, cv, run, "boundary", branch);
}

}  // namespace

std::string render_figure_svg(const ShareTable& table, const std::optional<EwsRatioVector>& vector,
                              const FigureWindow& window) {
  const Canvas cv(window);
  const double ratio = table.labor_capital_ratio();
  const LineCoeffs lines = line_coefficients(table);
  const AnchorSet anchors = anchor_points(table);
  std::vector<std::string> omitted;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
            kWidth, kHeight, kWidth, kHeight);
  std::ostringstream body;
  body << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes.
  if (window.s_min <= 0.0 && 0.0 <= window.s_max) {
    body << fmt("<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#888\"/>\n",
                cv.x(0), cv.y(window.u_min), cv.x(0), cv.y(window.u_max));
  }
  if (window.u_min <= 0.0 && 0.0 <= window.u_max) {
    body << fmt("<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#888\"/>\n",
                cv.x(window.s_min), cv.y(0), cv.x(window.s_max), cv.y(0));
  }
  body << fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">S'</text>\n", kWidth - kMargin + 6, cv.y(0) + 4);
  body << fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\">U'</text>\n", cv.x(0) + 4, kMargin - 8);

  // Asymptotes S' = -1 and U' = -theta_L/theta_K.
  if (window.s_min < -1.0 && -1.0 < window.s_max) {
    body << fmt("<line class=\"asymptote\" data-kind=\"vertical\" data-s=\"-1\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
                "y2=\"%.2f\" stroke=\"#999\" stroke-dasharray=\"6,4\"/>\n",
                cv.x(-1), cv.y(window.u_min), cv.x(-1), cv.y(window.u_max));
  }
  if (window.u_min < -ratio && -ratio < window.u_max) {
    body << fmt("<line class=\"asymptote\" data-kind=\"horizontal\" data-u=\"%.9g\" x1=\"%.2f\" y1=\"%.2f\" "
                "x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\" stroke-dasharray=\"6,4\"/>\n",
                -ratio, cv.x(window.s_min), cv.y(-ratio), cv.x(window.s_max), cv.y(-ratio));
  }

  boundary_branch(body, cv, ratio, std::max(window.s_min, -1.0 + 1e-9), window.s_max, "right");
  boundary_branch(body, cv, ratio, window.s_min, std::min(window.s_max, -1.0 - 1e-9), "left");

  constexpr std::array<const char*, 6> colours{"#c0392b", "#27ae60", "#8e44ad",
                                               "#e67e22", "#16a085", "#2c3e50"};
  for (Line l : kLines) {
    Point p0{window.s_min, lines[l](window.s_min)};
    Point p1{window.s_max, lines[l](window.s_max)};
    const std::string name(to_string(l));
    if (!cv.clip(p0, p1)) {
      omitted.push_back("line " + name);
      continue;
    }
    body << fmt("<line class=\"line-ij\" data-line=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                name.c_str(), cv.x(p0.s), cv.y(p0.u), cv.x(p1.s), cv.y(p1.u), colours[idx(l)]);
    body << fmt("<text class=\"line-label\" x=\"%.2f\" y=\"%.2f\" font-size=\"11\" fill=\"%s\">%s</text>\n",
                cv.x(p1.s) - 18, cv.y(p1.u) - 4, colours[idx(l)], name.c_str());
  }

  auto marker = [&](const std::string& name, const Point& p, const char* cls, const char* fill, double radius) {
    if (!cv.inside(p.s, p.u)) {
      omitted.push_back(name + fmt(" (%.6g, %.6g)", p.s, p.u));
      return;
    }
    body << fmt("<circle class=\"%s\" data-name=\"%s\" data-s=\"%.9g\" data-u=\"%.9g\" cx=\"%.2f\" cy=\"%.2f\" "
                "r=\"%.1f\" fill=\"%s\"/>\n",
                cls, name.c_str(), p.s, p.u, cv.x(p.s), cv.y(p.u), radius, fill);
    body << fmt("<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\">%s</text>\n", cv.x(p.s) + 6, cv.y(p.u) - 6,
                name.c_str());
  };
  marker("Q", anchors.q, "anchor", "black", 4.0);
  for (Line l : kLines) marker("R_" + std::string(to_string(l)), anchors.r_of(l), "anchor", "black", 3.5);
  if (vector) {
    const std::string label = std::string("(S',U') T") + sign_char(vector->sign_t);
    marker(label, {vector->s_prime, vector->u_prime}, "vector", "#d35400", 5.0);
  }

  os << "<desc>EWS-ratio plane; window S' [" << fmt("%.6g, %.6g", window.s_min, window.s_max) << "], U' ["
     << fmt("%.6g, %.6g", window.u_min, window.u_max) << "]";
  if (!omitted.empty()) {
    os << "; outside window:";
    for (const std::string& o : omitted) os << ' ' << o << ';';
  }
  os << "</desc>\n";
  os << body.str();
  os << "</svg>\n";
  return os.str();
}

void render_figure(const Scenario& scenario, const std::filesystem::path& out, const FigureWindow& window) {
  validate_scenario(scenario);
  const ShareTable table = scenario.table();
  const EwsMatrix g = ews_from_epsilon(epsilon_from_aes(scenario.aes(table), table), table);
  std::optional<EwsRatioVector> v;
  if (std::abs(g(Factor::L, Factor::T)) > kDegenerateTTol) v = ews_ratio_vector(g);
  const std::string svg = render_figure_svg(table, v, window);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + out.string());
  f << svg;
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + out.string());
}

}  // namespace ryb
