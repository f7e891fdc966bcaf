#include "kitecc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kitecc/cc_core.hpp"
#include "kitecc/kite_domain.hpp"
#include "kitecc/spectral_index.hpp"

namespace kitecc {

namespace {

constexpr double kGridInset = 1e-6;

const char* what_name(ScanWhat what) {
  switch (what) {
    case ScanWhat::Masses: return "masses";
    case ScanWhat::Index: return "index";
    case ScanWhat::Stability: return "stability";
  }
  return "unknown";
}

void fill_row(ScanRow& row, Region region, ScanWhat what, double real_tol,
              double gap_tol) {
  const ReducedShape shape{row.xhat, row.yhat};
  Region got;
  try {
    got = classify_region(shape);
  } catch (const kite_error&) {
    return;
  }
  if (got != region) return;
  row.in_region = true;

  MassTriple masses;
  try {
    masses = mass_map(shape);
  } catch (const kite_error&) {
    row.in_region = false;  // mass map undefined: treat as unusable cell
    return;
  }
  row.m1 = masses.m1;
  row.m3 = masses.m3;
  row.m = masses.m;
  if (what == ScanWhat::Masses) return;

  row.F = F_value(shape);
  row.index = index_sign(shape, masses);
  if (what == ScanWhat::Index) return;

  const SpectrumReport report = spectrum_at(shape, masses, real_tol, gap_tol);
  row.klass = report.klass;
  row.max_real = report.max_real;
  row.stable = report.stable;
}

}  // namespace

ScanResult scan_region(Region region, int n, ScanWhat what, double real_tol,
                       double gap_tol) {
  if (n < 2) throw kite_error(errc::invalid_argument, "grid size must be >= 2");
  const RegionBox box = region_box(region);

  ScanResult result;
  result.meta = {region_name(region), what_name(what), n, real_tol, gap_tol};
  result.rows.resize(static_cast<std::size_t>(n) * n);

  const double x0 = box.x_lo + kGridInset, x1 = box.x_hi - kGridInset;
  const double y0 = box.y_lo + kGridInset, y1 = box.y_hi - kGridInset;
  numkit::parallel_for(result.rows.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / n;  // row: yhat index
    const int j = static_cast<int>(idx) % n;
    ScanRow& row = result.rows[idx];
    row.xhat = x0 + j * (x1 - x0) / (n - 1);
    row.yhat = y0 + i * (y1 - y0) / (n - 1);
    fill_row(row, region, what, real_tol, gap_tol);
  });
  return result;
}

ScanResult scan_mass_lines(Region region, int lines, int n) {
  if (lines < 1 || n < 2)
    throw kite_error(errc::invalid_argument, "need lines >= 1 and grid >= 2");
  if (region != Region::Concave1 && region != Region::Concave2)
    throw kite_error(errc::invalid_argument,
                     "mass-line scans cover the concave regions");
  const RegionBox box = region_box(region);

  ScanResult result;
  result.meta = {region_name(region), "masses", n, kDefaultRealTol, kDefaultGapTol};
  result.rows.resize(static_cast<std::size_t>(lines) * n);
  numkit::parallel_for(result.rows.size(), [&](std::size_t idx) {
    const int line = static_cast<int>(idx) / n;
    const int i = static_cast<int>(idx) % n;
    ScanRow& row = result.rows[idx];
    row.xhat = box.x_lo + (line + 1) * (box.x_hi - box.x_lo) / (lines + 1);
    row.yhat = box.y_lo + kGridInset +
               i * (box.y_hi - box.y_lo - 2.0 * kGridInset) / (n - 1);
    fill_row(row, region, ScanWhat::Masses, kDefaultRealTol, kDefaultGapTol);
  });
  return result;
}

namespace {

bool curve_point_admissible(const ReducedShape& s) {
  if (!(s.xhat + s.yhat > 0.0)) return false;
  Region r;
  try {
    r = classify_region(s);
  } catch (const kite_error&) {
    return false;
  }
  return r == Region::Concave1 || r == Region::Concave2 ||
         r == Region::OnePlusThreeGon || r == Region::BoundaryOnePlusThree ||
         r == Region::BoundaryRestricted;
}

std::array<double, 2> grad_F(const ReducedShape& s) {
  const double hx = 1e-7 * (1.0 + std::abs(s.xhat));
  const double hy = 1e-7 * (1.0 + std::abs(s.yhat));
  const double fx = (F_value({s.xhat + hx, s.yhat}) - F_value({s.xhat - hx, s.yhat})) /
                    (2.0 * hx);
  const double fy = (F_value({s.xhat, s.yhat + hy}) - F_value({s.xhat, s.yhat - hy})) /
                    (2.0 * hy);
  return {fx, fy};
}

// Newton correction along the gradient direction down to |F| < 1e-8.
bool correct_to_curve(ReducedShape& s) {
  for (int it = 0; it < 40; ++it) {
    const double f = F_value(s);
    if (std::abs(f) < 1e-8) return true;
    const auto g = grad_F(s);
    const double g2 = g[0] * g[0] + g[1] * g[1];
    if (!(g2 > 1e-300)) return false;
    s.xhat -= f * g[0] / g2;
    s.yhat -= f * g[1] / g2;
    if (!(s.xhat + s.yhat > 0.0)) return false;
  }
  return false;
}

std::vector<CurvePoint> trace_direction(ReducedShape start,
                                        std::array<double, 2> tangent,
                                        double step) {
  std::vector<CurvePoint> out;
  ReducedShape current = start;
  std::array<double, 2> dir = tangent;
  for (int n = 0; n < 100000; ++n) {
    ReducedShape predicted{current.xhat + step * dir[0],
                           current.yhat + step * dir[1]};
    if (!(predicted.xhat + predicted.yhat > 0.0)) break;
    if (!correct_to_curve(predicted)) break;
    if (!curve_point_admissible(predicted)) break;
    out.push_back({predicted.xhat, predicted.yhat, std::nullopt});
    // next tangent: perpendicular to the gradient, oriented with the march
    const auto g = grad_F(predicted);
    std::array<double, 2> t{-g[1], g[0]};
    const double norm = std::hypot(t[0], t[1]);
    if (!(norm > 1e-300)) break;
    t[0] /= norm;
    t[1] /= norm;
    if (t[0] * dir[0] + t[1] * dir[1] < 0.0) {
      t[0] = -t[0];
      t[1] = -t[1];
    }
    dir = t;
    current = predicted;
  }
  return out;
}

}  // namespace

std::vector<CurvePoint> trace_degeneracy_curve(double step) {
  if (!(step > 0.0) || step > 0.1)
    throw kite_error(errc::invalid_argument, "step must lie in (0, 0.1]");
  const ReducedShape gon{kSqrt3, -kInvSqrt3};

  // seed: sign changes of F on a small circle around the 1+3-gon
  const double radius = std::max(step / 10.0, 1e-5);
  const int samples = 128;
  std::vector<double> values(samples);
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * M_PI * i / samples;
    values[i] = F_value({gon.xhat + radius * std::cos(theta),
                         gon.yhat + radius * std::sin(theta)});
  }
  std::vector<double> crossings;
  for (int i = 0; i < samples; ++i) {
    const double f0 = values[i];
    const double f1 = values[(i + 1) % samples];
    if ((f0 < 0.0) != (f1 < 0.0)) {
      const double t0 = 2.0 * M_PI * i / samples;
      const double frac = f0 / (f0 - f1);
      crossings.push_back(t0 + frac * 2.0 * M_PI / samples);
    }
  }
  if (crossings.size() < 2)
    throw kite_error(errc::seed_failure,
                     "no sign change of F around the 1+3-gon seed");

  const auto direction_trace = [&](double theta) {
    const std::array<double, 2> dir = {std::cos(theta), std::sin(theta)};
    ReducedShape first{gon.xhat + radius * dir[0], gon.yhat + radius * dir[1]};
    correct_to_curve(first);
    std::vector<CurvePoint> branch;
    if (curve_point_admissible(first))
      branch.push_back({first.xhat, first.yhat, std::nullopt});
    auto rest = trace_direction(first, dir, step);
    branch.insert(branch.end(), rest.begin(), rest.end());
    return branch;
  };

  std::vector<CurvePoint> negative = direction_trace(crossings[0]);
  std::vector<CurvePoint> positive = direction_trace(crossings[1]);

  std::vector<CurvePoint> curve;
  curve.reserve(negative.size() + positive.size() + 1);
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) curve.push_back(*it);
  curve.push_back({gon.xhat, gon.yhat, std::nullopt});
  curve.insert(curve.end(), positive.begin(), positive.end());
  return curve;
}

PsiProfile psi_profile(int grid, double real_tol, double gap_tol) {
  if (grid < 2) throw kite_error(errc::invalid_argument, "grid size must be >= 2");
  std::vector<double> xs(grid);
  const double x0 = kInvSqrt3, x1 = kSqrt3;
  for (int i = 0; i < grid; ++i)
    xs[i] = x0 + (i + 1) * (x1 - x0) / (grid + 1);
  const auto boundary = trace_stability_boundary(xs, real_tol, gap_tol);

  PsiProfile profile;
  for (const auto& p : boundary)
    profile.points.push_back({p.xhat, p.yhat, p.psi});
  profile.psi_infimum = psi_infimum_estimate(real_tol, gap_tol);
  return profile;
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* kColumns =
    "xhat,yhat,in_region,m1,m3,m,F,index,n_complex,n_real,n_imag,max_real,stable";

void write_row_csv(const ScanRow& row, std::ostream& os) {
  os << format_float(row.xhat) << ',' << format_float(row.yhat) << ','
     << (row.in_region ? 1 : 0) << ',';
  const auto opt = [&os](const std::optional<double>& v, bool last = false) {
    if (v) os << format_float(*v);
    if (!last) os << ',';
  };
  opt(row.m1);
  opt(row.m3);
  opt(row.m);
  opt(row.F);
  if (row.index) os << *row.index;
  os << ',';
  if (row.klass)
    os << (*row.klass)[0] << ',' << (*row.klass)[1] << ',' << (*row.klass)[2] << ',';
  else
    os << ",,,";
  opt(row.max_real);
  if (row.stable) os << (*row.stable ? 1 : 0);
  os << '\n';
}

}  // namespace

void write_scan_csv(const ScanResult& scan, std::ostream& os) {
  os << kColumns << '\n';
  for (const ScanRow& row : scan.rows) write_row_csv(row, os);
}

namespace {

void write_json_value(std::ostream& os, const std::optional<double>& v) {
  if (v)
    os << format_float(*v);
  else
    os << "null";
}

}  // namespace

void write_scan_json(const ScanResult& scan, std::ostream& os) {
  os << "{\n  \"meta\": {\n"
     << "    \"version\": \"" << kVersion << "\",\n"
     << "    \"region\": \"" << scan.meta.region << "\",\n"
     << "    \"what\": \"" << scan.meta.what << "\",\n"
     << "    \"grid\": " << scan.meta.grid << ",\n"
     << "    \"real_tol\": " << format_float(scan.meta.real_tol) << ",\n"
     << "    \"gap_tol\": " << format_float(scan.meta.gap_tol) << ",\n"
     << "    \"columns\": [";
  {
    bool first = true;
    std::string col;
    for (const char* p = kColumns;; ++p) {
      if (*p == ',' || *p == '\0') {
        if (!first) os << ", ";
        os << '"' << col << '"';
        first = false;
        col.clear();
        if (*p == '\0') break;
      } else {
        col += *p;
      }
    }
  }
  os << "]\n  },\n  \"rows\": [\n";
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const ScanRow& row = scan.rows[i];
    os << "    [" << format_float(row.xhat) << ", " << format_float(row.yhat)
       << ", " << (row.in_region ? 1 : 0) << ", ";
    write_json_value(os, row.m1);
    os << ", ";
    write_json_value(os, row.m3);
    os << ", ";
    write_json_value(os, row.m);
    os << ", ";
    write_json_value(os, row.F);
    os << ", ";
    if (row.index)
      os << *row.index;
    else
      os << "null";
    os << ", ";
    if (row.klass)
      os << (*row.klass)[0] << ", " << (*row.klass)[1] << ", " << (*row.klass)[2];
    else
      os << "null, null, null";
    os << ", ";
    write_json_value(os, row.max_real);
    os << ", ";
    if (row.stable)
      os << (*row.stable ? 1 : 0);
    else
      os << "null";
    os << (i + 1 < scan.rows.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
}

namespace {

struct SvgFrame {
  double x_lo, x_hi, y_lo, y_hi;
  static constexpr double kSize = 720.0;
  static constexpr double kMargin = 60.0;

  double px(double x) const {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * kSize;
  }
  double py(double y) const {
    return kMargin + (y_hi - y) / (y_hi - y_lo) * kSize;
  }
};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

const char* class_color(const std::array<int, 3>& k) {
  if (k == std::array<int, 3>{8, 0, 0}) return "#ff00ff";
  if (k == std::array<int, 3>{4, 2, 2}) return "#1f77b4";
  if (k == std::array<int, 3>{4, 0, 4}) return "#ff7f0e";
  if (k == std::array<int, 3>{4, 4, 0}) return "#39ff14";
  if (k == std::array<int, 3>{0, 2, 6}) return "#17becf";
  if (k == std::array<int, 3>{0, 0, 8}) return "#d62728";
  if (k == std::array<int, 3>{0, 4, 4}) return "#bcbd22";
  if (k == std::array<int, 3>{0, 6, 2}) return "#9467bd";
  if (k == std::array<int, 3>{0, 8, 0}) return "#000000";
  return "#7f7f7f";
}

void svg_header(std::ostream& os) {
  const double total = SvgFrame::kSize + 2.0 * SvgFrame::kMargin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total
     << "\" height=\"" << total << "\" viewBox=\"0 0 " << total << ' ' << total
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_region_boundary(std::ostream& os, Region region, const SvgFrame& fr) {
  const int samples = 256;
  const RegionBox box = region_box(region);
  const auto polyline = [&](auto f, double lo, double hi) {
    os << "<polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"1\" points=\"";
    for (int i = 0; i <= samples; ++i) {
      const double x = lo + i * (hi - lo) / samples;
      os << svg_num(fr.px(x)) << ',' << svg_num(fr.py(f(x))) << ' ';
    }
    os << "\"/>\n";
  };
  const auto segment = [&](double xa, double ya, double xb, double yb) {
    os << "<line stroke=\"#444444\" stroke-width=\"1\" x1=\"" << svg_num(fr.px(xa))
       << "\" y1=\"" << svg_num(fr.py(ya)) << "\" x2=\"" << svg_num(fr.px(xb))
       << "\" y2=\"" << svg_num(fr.py(yb)) << "\"/>\n";
  };
  switch (region) {
    case Region::ConvexC:
      polyline(lower_boundary_convex, box.x_lo, box.x_hi);
      segment(box.x_lo, box.x_lo, box.x_hi, box.x_hi);  // diagonal
      segment(box.x_hi, lower_boundary_convex(box.x_hi), box.x_hi, box.x_hi);
      break;
    case Region::Concave1:
      polyline(concave_boundary, box.x_lo, box.x_hi);
      segment(box.x_lo, -kInvSqrt3, box.x_lo, -kSqrt3);
      segment(box.x_lo, -kSqrt3, box.x_hi, -kSqrt3);
      break;
    case Region::Concave2:
      polyline(concave_boundary, box.x_lo, box.x_hi);
      segment(box.x_lo, 0.0, box.x_hi, 0.0);
      segment(box.x_hi, 0.0, box.x_hi, -kInvSqrt3);
      break;
    default:
      break;
  }
}

}  // namespace

void write_scan_svg(const ScanResult& scan, std::ostream& os) {
  Region region = Region::ConvexC;
  if (scan.meta.region == "concave1") region = Region::Concave1;
  if (scan.meta.region == "concave2") region = Region::Concave2;
  const RegionBox box = region_box(region);
  const SvgFrame fr{box.x_lo, box.x_hi, box.y_lo, box.y_hi};

  svg_header(os);
  const double cell_w = SvgFrame::kSize / std::max(1, scan.meta.grid - 1);
  bool stability = scan.meta.what == "stability";
  for (const ScanRow& row : scan.rows) {
    if (!row.in_region) continue;
    const char* color = "#7f7f7f";
    if (stability && row.klass) {
      color = class_color(*row.klass);
    } else if (row.index) {
      color = *row.index > 0 ? "#1f77b4" : (*row.index < 0 ? "#d62728" : "#000000");
    }
    os << "<rect x=\"" << svg_num(fr.px(row.xhat) - cell_w / 2) << "\" y=\""
       << svg_num(fr.py(row.yhat) - cell_w / 2) << "\" width=\"" << svg_num(cell_w)
       << "\" height=\"" << svg_num(cell_w) << "\" fill=\"" << color << "\"/>\n";
  }
  svg_region_boundary(os, region, fr);

  // legend
  double ly = 18.0;
  const auto legend_entry = [&](const char* color, const std::string& label) {
    os << "<rect x=\"8\" y=\"" << svg_num(ly - 10) << "\" width=\"12\" height=\"12\" fill=\""
       << color << "\"/><text x=\"26\" y=\"" << svg_num(ly)
       << "\" font-size=\"12\" font-family=\"sans-serif\">" << label << "</text>\n";
    ly += 18.0;
  };
  if (stability) {
    const std::array<std::array<int, 3>, 9> classes = {{{8, 0, 0},
                                                        {4, 2, 2},
                                                        {4, 0, 4},
                                                        {4, 4, 0},
                                                        {0, 2, 6},
                                                        {0, 0, 8},
                                                        {0, 4, 4},
                                                        {0, 6, 2},
                                                        {0, 8, 0}}};
    for (const auto& k : classes)
      legend_entry(class_color(k), "(" + std::to_string(k[0]) + ", " +
                                       std::to_string(k[1]) + ", " +
                                       std::to_string(k[2]) + ")");
  } else {
    legend_entry("#1f77b4", "index +1");
    legend_entry("#d62728", "index -1");
    legend_entry("#000000", "degenerate");
  }
  os << "</svg>\n";
}

void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& os) {
  const bool with_psi = !curve.empty() && curve.front().psi.has_value();
  os << (with_psi ? "xhat,yhat,psi" : "xhat,yhat") << '\n';
  for (const CurvePoint& p : curve) {
    os << format_float(p.xhat) << ',' << format_float(p.yhat);
    if (with_psi) {
      os << ',';
      if (p.psi) os << format_float(*p.psi);
    }
    os << '\n';
  }
}

void write_curve_json(const std::vector<CurvePoint>& curve, const std::string& name,
                      std::ostream& os) {
  os << "{\n  \"meta\": {\"version\": \"" << kVersion << "\", \"curve\": \"" << name
     << "\"},\n  \"points\": [\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    os << "    [" << format_float(curve[i].xhat) << ", "
       << format_float(curve[i].yhat);
    if (curve[i].psi) os << ", " << format_float(*curve[i].psi);
    os << (i + 1 < curve.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
}

void write_curve_svg(const std::vector<CurvePoint>& curve, std::ostream& os) {
  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const CurvePoint& p : curve) {
    x_lo = std::min(x_lo, p.xhat);
    x_hi = std::max(x_hi, p.xhat);
    y_lo = std::min(y_lo, p.yhat);
    y_hi = std::max(y_hi, p.yhat);
  }
  if (curve.empty() || x_hi - x_lo <= 0.0) {
    x_lo = 0.0; x_hi = 1.0;
  }
  if (curve.empty() || y_hi - y_lo <= 0.0) {
    y_lo = 0.0; y_hi = 1.0;
  }
  const SvgFrame fr{x_lo, x_hi, y_lo, y_hi};
  svg_header(os);
  os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
  for (const CurvePoint& p : curve)
    os << svg_num(fr.px(p.xhat)) << ',' << svg_num(fr.py(p.yhat)) << ' ';
  os << "\"/>\n</svg>\n";
}

}  // namespace kitecc
