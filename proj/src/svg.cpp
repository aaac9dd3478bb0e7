#include "hypwalk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypwalk/errors.hpp"

namespace hypwalk {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 56.0;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;

  explicit Axis(const std::vector<double>& values) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
    if (hi - lo < 1e-12) {  // degenerate range: pad around the value
      lo -= 1.0;
      hi += 1.0;
    } else {
      const double pad = 0.05 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
  }

  double frac(double v) const { return (v - lo) / (hi - lo); }
};

}  // namespace

std::string render_line_chart(const std::vector<double>& x,
                              const std::vector<double>& y,
                              const std::optional<std::vector<double>>& y_err,
                              const std::string& x_label,
                              const std::string& y_label) {
  if (x.empty() || y.empty()) throw UsageError("no data rows to plot");
  if (x.size() != y.size()) throw UsageError("x and y columns differ in length");
  if (y_err && y_err->size() != y.size())
    throw UsageError("error-bar column differs in length");

  std::vector<double> y_extent = y;
  if (y_err)
    for (std::size_t i = 0; i < y.size(); ++i) {
      y_extent.push_back(y[i] - (*y_err)[i]);
      y_extent.push_back(y[i] + (*y_err)[i]);
    }
  const Axis ax(x);
  const Axis ay(y_extent);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + ax.frac(v) * plot_w; };
  auto py = [&](double v) { return kTop + (1.0 - ay.frac(v)) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << " " << kHeight << "\">\n"
      << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Axes.
  out << "<g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n"
      << "<path d=\"M " << coord(kLeft) << " " << coord(kTop) << " L "
      << coord(kLeft) << " " << coord(kTop + plot_h) << " L "
      << coord(kLeft + plot_w) << " " << coord(kTop + plot_h) << "\"/>\n"
      << "</g>\n";

  // Ticks, grid and labels.
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
  const int kTicks = 5;
  for (int t = 0; t < kTicks; ++t) {
    const double fx = ax.lo + (ax.hi - ax.lo) * t / (kTicks - 1);
    const double sx = px(fx);
    out << "<line x1=\"" << coord(sx) << "\" y1=\"" << coord(kTop + plot_h)
        << "\" x2=\"" << coord(sx) << "\" y2=\"" << coord(kTop + plot_h + 5)
        << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << coord(sx) << "\" y=\"" << coord(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";

    const double fy = ay.lo + (ay.hi - ay.lo) * t / (kTicks - 1);
    const double sy = py(fy);
    out << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(sy)
        << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(sy)
        << "\" stroke=\"#333333\"/>\n";
    out << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(sy) << "\" x2=\""
        << coord(kLeft + plot_w) << "\" y2=\"" << coord(sy)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << coord(kLeft - 9) << "\" y=\"" << coord(sy + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  out << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\""
      << coord(kHeight - 12) << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << coord(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << coord(kTop + plot_h / 2) << ")\">" << y_label << "</text>\n";
  out << "</g>\n";

  // Error bars.
  if (y_err) {
    out << "<g stroke=\"#1f77b4\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double sx = px(x[i]);
      const double lo = py(y[i] - (*y_err)[i]);
      const double hi = py(y[i] + (*y_err)[i]);
      out << "<line x1=\"" << coord(sx) << "\" y1=\"" << coord(lo) << "\" x2=\""
          << coord(sx) << "\" y2=\"" << coord(hi) << "\"/>\n";
      out << "<line x1=\"" << coord(sx - 3) << "\" y1=\"" << coord(lo)
          << "\" x2=\"" << coord(sx + 3) << "\" y2=\"" << coord(lo) << "\"/>\n";
      out << "<line x1=\"" << coord(sx - 3) << "\" y1=\"" << coord(hi)
          << "\" x2=\"" << coord(sx + 3) << "\" y2=\"" << coord(hi) << "\"/>\n";
    }
    out << "</g>\n";
  }

  // Line and markers.
  if (x.size() > 1) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out << ' ';
      out << coord(px(x[i])) << ',' << coord(py(y[i]));
    }
    out << "\"/>\n";
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    out << "<circle cx=\"" << coord(px(x[i])) << "\" cy=\"" << coord(py(y[i]))
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace hypwalk
