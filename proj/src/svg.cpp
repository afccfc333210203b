#include "minsurf/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

#include "minsurf/errors.hpp"
#include "minsurf/serialize.hpp"

namespace minsurf {

namespace {

constexpr double kSize = 640.0;
constexpr double kInsetW = 220.0;
constexpr double kInsetH = 140.0;
constexpr std::array<const char*, 6> kPalette{"#1f4e79", "#c55a11", "#548235", "#7030a0", "#bf9000",
                                              "#2e75b6"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double span() const { return hi > lo ? hi - lo : 1.0; }
};

void inset(std::ostringstream& os, const CircleLengthProfile& prof) {
  if (prof.samples.size() < 2) return;
  const double x0 = kSize - kInsetW - 10.0;
  const double y0 = kSize - kInsetH - 10.0;
  Range t, v;
  for (const auto& s : prof.samples) {
    t.add(s.t);
    v.add(s.L);
    v.add(s.L2);
  }
  auto px = [&](double tt) { return x0 + 8.0 + (tt - t.lo) / t.span() * (kInsetW - 16.0); };
  auto py = [&](double vv) { return y0 + kInsetH - 18.0 - (vv - v.lo) / v.span() * (kInsetH - 30.0); };
  os << "<g id=\"profile\">\n";
  os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(kInsetW)
     << "\" height=\"" << fmt(kInsetH) << "\" fill=\"white\" stroke=\"#808080\"/>\n";
  for (int which = 0; which < 2; ++which) {
    os << "<polyline fill=\"none\" stroke=\"" << (which == 0 ? "#1f4e79" : "#c00000")
       << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& s : prof.samples) {
      os << fmt(px(s.t)) << ',' << fmt(py(which == 0 ? s.L : s.L2)) << ' ';
    }
    os << "\"/>\n";
  }
  os << "<text x=\"" << fmt(x0 + 8.0) << "\" y=\"" << fmt(y0 + kInsetH - 4.0)
     << "\" font-size=\"10\" font-family=\"sans-serif\">L (blue), L'' (red) vs t = ln r</text>\n";
  os << "</g>\n";
}

}  // namespace

std::string svg_document(const std::vector<LevelCurve>& curves,
                         const std::optional<CircleLengthProfile>& profile) {
  if (curves.empty()) throw DomainError("nothing to render: empty curve list");
  Range x, y;
  for (const auto& c : curves) {
    if (c.nodes.empty()) throw DomainError("nothing to render: curve without nodes");
    for (const auto& n : c.nodes) {
      x.add(n.x1);
      y.add(n.x2);
    }
  }
  const double span = std::max(x.span(), y.span());
  const double pad = 0.05 * span;
  const double scale = kSize / (span + 2.0 * pad);
  const double cx = 0.5 * (x.lo + x.hi);
  const double cy = 0.5 * (y.lo + y.hi);
  auto px = [&](double v) { return 0.5 * kSize + (v - cx) * scale; };
  auto py = [&](double v) { return 0.5 * kSize - (v - cy) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize) << "\" height=\""
     << fmt(kSize) << "\" viewBox=\"0 0 " << fmt(kSize) << ' ' << fmt(kSize) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    os << "<g id=\"level-" << i << "\" data-h=\"" << c.h << "\">\n";
    os << "<polygon fill=\"none\" stroke=\"" << kPalette[i % kPalette.size()]
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& n : c.nodes) os << fmt(px(n.x1)) << ',' << fmt(py(n.x2)) << ' ';
    os << "\"/>\n";
    for (const auto& p : c.crossings) {
      os << "<circle class=\"crossing\" cx=\"" << fmt(px(p[0])) << "\" cy=\"" << fmt(py(p[1]))
         << "\" r=\"4\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"1.5\"/>\n";
    }
    os << "</g>\n";
  }
  if (profile) inset(os, *profile);
  os << "</svg>\n";
  return os.str();
}

void render_svg(const std::vector<LevelCurve>& curves,
                const std::optional<CircleLengthProfile>& profile, const std::string& path) {
  write_file_atomic(path, svg_document(curves, profile));
}

}  // namespace minsurf
