#include "nhssh/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "nhssh/errors.hpp"

namespace nhssh {

std::string fmt_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_g12(double x) {
  return std::strtod(fmt_g12(x).c_str(), nullptr);
}

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: no newline translation
  if (!f)
    throw invalid_parameter_error("cannot open output file: " + path);
  return f;
}

std::string fmt_svg(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

json complex_arrays(const Eigen::VectorXcd& v) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(round_g12(v(i).real()));
    im.push_back(round_g12(v(i).imag()));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}
}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  open_out(path) << content;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream f = open_out(path);
  for (std::size_t c = 0; c < header.size(); ++c)
    f << (c ? "," : "") << header[c];
  f << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      f << (c ? "," : "") << row[c];
    f << "\n";
  }
}

json to_json(const ModelParams& p) {
  return json{{"t", round_g12(p.t)},
              {"delta", round_g12(p.delta)},
              {"theta", round_g12(p.theta)},
              {"gamma1", round_g12(p.gamma1)},
              {"gamma2", round_g12(p.gamma2)}};
}

json to_json(const BandStructure& bs) {
  json k = json::array();
  for (double x : bs.k_grid) k.push_back(round_g12(x));
  json bands = json::array();
  for (const auto& band : bs.bands) {
    json re = json::array(), im = json::array();
    for (cplx e : band) {
      re.push_back(round_g12(e.real()));
      im.push_back(round_g12(e.imag()));
    }
    bands.push_back(json{{"re", std::move(re)}, {"im", std::move(im)}});
  }
  json flagged = json::array();
  for (bool b : bs.flags) flagged.push_back(b);
  return json{{"k", std::move(k)},
              {"bands", std::move(bands)},
              {"gap_re", round_g12(bs.gap_re)},
              {"gap_im", round_g12(bs.gap_im)},
              {"flagged", std::move(flagged)}};
}

json to_json(const SymmetryReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(json{{"name", to_string(e.name)},
                           {"relation", symmetry_relation(e.name)},
                           {"residual", round_g12(e.residual)},
                           {"holds", e.holds}});
  return json{{"entries", std::move(entries)},
              {"pseudoH_alt_residual", round_g12(rep.pseudoH_alt_residual)},
              {"label", rep.label}};
}

json to_json(const AntiPTResiduals& r) {
  return json{{"paper_form", round_g12(r.paper_form)},
              {"working_form", round_g12(r.working_form)}};
}

json to_json(const CriticalLines& lines) {
  return json{{"t1", round_g12(lines.t1)},
              {"t2", round_g12(lines.t2)},
              {"gamma_sum", round_g12(lines.gamma_sum)},
              {"gamma_absdiff", round_g12(lines.gamma_absdiff)},
              {"gamma_product", round_g12(lines.gamma_product)}};
}

json to_json(const PhasePoint& pt) {
  json j{{"params", to_json(pt.params)},
         {"region", to_string(pt.region)},
         {"gap_re", round_g12(pt.gap_re)},
         {"gap_im", round_g12(pt.gap_im)},
         {"boundary", pt.boundary},
         {"note", pt.note}};
  j["zak"] = pt.zak_valid ? json(round_g12(pt.zak)) : json(nullptr);
  j["winding"] = pt.winding ? json(*pt.winding) : json(nullptr);
  return j;
}

json to_json(const PhaseDiagram& pd) {
  auto axis = [](const AxisSpec& ax) {
    return json{{"name", to_string(ax.axis)},
                {"lo", round_g12(ax.lo)},
                {"hi", round_g12(ax.hi)},
                {"n", ax.n}};
  };
  json v1 = json::array(), v2 = json::array();
  for (double x : pd.values1) v1.push_back(round_g12(x));
  for (double x : pd.values2) v2.push_back(round_g12(x));
  json points = json::array();
  for (const auto& pt : pd.points) points.push_back(to_json(pt));
  return json{{"axis1", axis(pd.axis1)},
              {"axis2", axis(pd.axis2)},
              {"values1", std::move(v1)},
              {"values2", std::move(v2)},
              {"points", std::move(points)}};
}

json to_json(const ChainSpectrum& cs) {
  json edges = json::array();
  for (int i : cs.edge_indices) edges.push_back(i);
  return json{{"params", to_json(cs.params)},
              {"n_cells", cs.n_cells},
              {"boundary", cs.bc == Boundary::open ? "open" : "periodic"},
              {"eigenvalues", complex_arrays(cs.eigenvalues)},
              {"edge_indices", std::move(edges)},
              {"edge_note", cs.edge_note},
              {"residual", round_g12(cs.residual)}};
}

json to_json(const SpectrumSweep& sweep) {
  json values = json::array();
  for (double v : sweep.values) values.push_back(round_g12(v));
  json points = json::array();
  for (const auto& pt : sweep.points) {
    json edges = json::array(), iprs = json::array();
    for (int i : pt.edge_indices) edges.push_back(i);
    for (double x : pt.edge_ipr) iprs.push_back(round_g12(x));
    points.push_back(json{{"value", round_g12(pt.value)},
                          {"eigenvalues", complex_arrays(pt.eigenvalues)},
                          {"edge_indices", std::move(edges)},
                          {"edge_ipr", std::move(iprs)},
                          {"edge_detection_failed", pt.edge_detection_failed},
                          {"note", pt.note}});
  }
  return json{{"params", to_json(sweep.base)},
              {"axis", to_string(sweep.axis)},
              {"n_cells", sweep.n_cells},
              {"values", std::move(values)},
              {"points", std::move(points)}};
}

void write_json_file(const std::string& path, const json& j) {
  open_out(path) << j.dump(2) << "\n";
}

void write_band_csv(const std::string& path, const BandStructure& bs) {
  std::vector<std::string> header = {"k"};
  for (int b = 1; b <= 4; ++b) {
    header.push_back("E" + std::to_string(b) + "_re");
    header.push_back("E" + std::to_string(b) + "_im");
  }
  header.push_back("flagged");
  std::vector<std::vector<std::string>> rows;
  rows.reserve(bs.k_grid.size());
  for (std::size_t j = 0; j < bs.k_grid.size(); ++j) {
    std::vector<std::string> row = {fmt_g12(bs.k_grid[j])};
    for (int b = 0; b < 4; ++b) {
      row.push_back(fmt_g12(bs.bands[b][j].real()));
      row.push_back(fmt_g12(bs.bands[b][j].imag()));
    }
    row.push_back(bs.flags[j] ? "1" : "0");
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_phase_diagram_csv(const std::string& path, const PhaseDiagram& pd) {
  const std::vector<std::string> header = {"axis1",   "axis2", "zak",
                                           "winding", "region", "gap_re",
                                           "gap_im"};
  std::vector<std::vector<std::string>> rows;
  rows.reserve(pd.points.size());
  for (int i2 = 0; i2 < pd.axis2.n; ++i2) {
    for (int i1 = 0; i1 < pd.axis1.n; ++i1) {
      const PhasePoint& pt = pd.at(i1, i2);
      rows.push_back({fmt_g12(pd.values1[i1]), fmt_g12(pd.values2[i2]),
                      pt.zak_valid ? fmt_g12(pt.zak) : "nan",
                      pt.winding ? std::to_string(*pt.winding) : "",
                      to_string(pt.region), fmt_g12(pt.gap_re),
                      fmt_g12(pt.gap_im)});
    }
  }
  write_csv(path, header, rows);
}

void write_chain_csv(const std::string& path, const ChainSpectrum& cs) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(cs.eigenvalues.size());
  for (Eigen::Index i = 0; i < cs.eigenvalues.size(); ++i) {
    const bool edge = std::find(cs.edge_indices.begin(), cs.edge_indices.end(),
                                static_cast<int>(i)) != cs.edge_indices.end();
    rows.push_back({std::to_string(i), fmt_g12(cs.eigenvalues(i).real()),
                    fmt_g12(cs.eigenvalues(i).imag()), edge ? "1" : "0"});
  }
  write_csv(path, {"state_index", "re_E", "im_E", "is_edge"}, rows);
}

void write_sweep_csv(const std::string& path, const SpectrumSweep& sweep) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& pt : sweep.points) {
    for (Eigen::Index i = 0; i < pt.eigenvalues.size(); ++i) {
      const bool edge =
          std::find(pt.edge_indices.begin(), pt.edge_indices.end(),
                    static_cast<int>(i)) != pt.edge_indices.end();
      rows.push_back({fmt_g12(pt.value), std::to_string(i),
                      fmt_g12(pt.eigenvalues(i).real()),
                      fmt_g12(pt.eigenvalues(i).imag()), edge ? "1" : "0"});
    }
  }
  write_csv(path, {"sweep_value", "state_index", "re_E", "im_E", "is_edge"},
            rows);
}

void write_ldos_csv(const std::string& path, const LDOSProfile& profile) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(profile.weights.size());
  for (std::size_t i = 0; i < profile.weights.size(); ++i)
    rows.push_back({std::to_string(i), fmt_g12(profile.weights[i])});
  write_csv(path, {"site", "weight"}, rows);
}

std::string format_symmetry_report(const SymmetryReport& rep,
                                   const AntiPTResiduals& apt) {
  std::ostringstream os;
  os << std::left << std::setw(9) << "name" << std::setw(30) << "relation"
     << std::setw(22) << "residual" << "holds\n";
  os << std::string(66, '-') << "\n";
  for (const auto& e : rep.entries) {
    os << std::setw(9) << to_string(e.name) << std::setw(30)
       << symmetry_relation(e.name) << std::setw(22) << fmt_g12(e.residual)
       << (e.holds ? "yes" : "no") << "\n";
  }
  os << std::string(66, '-') << "\n";
  os << "pseudoH via half-angle Pauli form: residual "
     << fmt_g12(rep.pseudoH_alt_residual) << "\n";
  os << "antiPT literal operator (fixed k): residual "
     << fmt_g12(apt.paper_form) << "\n";
  os << "antiPT via conjugation + k flip:   residual "
     << fmt_g12(apt.working_form) << "\n";
  os << "class label: " << rep.label << "\n";
  return os.str();
}

namespace {
// Shared chart geometry.
constexpr double kW = 700, kH = 480;
constexpr double kL = 70, kR = 24, kT = 42, kB = 58;

struct LinMap {
  double lo = 0, hi = 1, a = 0, b = 1;  // data range -> pixel range
  double operator()(double v) const {
    return a + (b - a) * (v - lo) / (hi - lo);
  }
};

void pad_range(double& lo, double& hi) {
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
    return;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  double step = std::pow(10.0, std::floor(std::log10(span / target)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (span / (step * m) <= target) {
      step *= m;
      break;
    }
  }
  std::vector<double> ticks;
  double v = std::ceil(lo / step) * step;
  for (; v <= hi + 1e-12 * span; v += step)
    ticks.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
  return ticks;
}

void svg_open(std::ostringstream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
     << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
     << "\">\n"
     << "<rect width=\"" << kW << "\" height=\"" << kH
     << "\" fill=\"white\"/>\n";
}

void svg_frame(std::ostringstream& os, const std::string& title,
               const std::string& xlabel, const std::string& ylabel,
               const LinMap& X, const LinMap& Y) {
  os << "<g font-family=\"Helvetica,Arial,sans-serif\" font-size=\"13\">\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-size=\"15\">" << title << "</text>\n";
  for (double t : nice_ticks(X.lo, X.hi)) {
    const double px = X(t);
    os << "<line x1=\"" << fmt_svg(px) << "\" y1=\"" << kH - kB << "\" x2=\""
       << fmt_svg(px) << "\" y2=\"" << kT << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << fmt_svg(px) << "\" y=\"" << kH - kB + 18
       << "\" text-anchor=\"middle\">" << fmt_svg(t) << "</text>\n";
  }
  for (double t : nice_ticks(Y.lo, Y.hi)) {
    const double py = Y(t);
    os << "<line x1=\"" << kL << "\" y1=\"" << fmt_svg(py) << "\" x2=\""
       << kW - kR << "\" y2=\"" << fmt_svg(py) << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << kL - 8 << "\" y=\"" << fmt_svg(py + 4)
       << "\" text-anchor=\"end\">" << fmt_svg(t) << "</text>\n";
  }
  os << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR
     << "\" height=\"" << kH - kT - kB
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 14
     << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  os << "<text x=\"18\" y=\"" << kH / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kH / 2
     << ")\">" << ylabel << "</text>\n";
  os << "</g>\n";
}
}  // namespace

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgSeries>& series) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series) {
    for (double v : s.x) { xlo = std::min(xlo, v); xhi = std::max(xhi, v); }
    for (double v : s.y) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
  }
  if (!std::isfinite(xlo)) { xlo = 0; xhi = 1; ylo = 0; yhi = 1; }
  pad_range(xlo, xhi);
  pad_range(ylo, yhi);
  const LinMap X{xlo, xhi, kL, kW - kR};
  const LinMap Y{ylo, yhi, kH - kB, kT};  // flipped: SVG y grows downward

  std::ostringstream os;
  svg_open(os);
  svg_frame(os, title, xlabel, ylabel, X, Y);
  for (const auto& s : series) {
    if (s.points_only) {
      for (std::size_t i = 0; i < s.x.size(); ++i)
        os << "<circle cx=\"" << fmt_svg(X(s.x[i])) << "\" cy=\""
           << fmt_svg(Y(s.y[i])) << "\" r=\"2\" fill=\"" << s.color
           << "\"/>\n";
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << s.color
         << "\" stroke-width=\"" << s.width << "\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i)
        os << (i ? " " : "") << fmt_svg(X(s.x[i])) << "," << fmt_svg(Y(s.y[i]));
      os << "\"/>\n";
    }
  }
  // legend, top-right inside the frame
  double ly = kT + 16;
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    const double lx = kW - kR - 150;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 24
       << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
       << "\" stroke-width=\"2.5\"/>\n";
    os << "<text font-family=\"Helvetica,Arial,sans-serif\" font-size=\"12\" "
          "x=\"" << lx + 30 << "\" y=\"" << ly << "\">" << s.label
       << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  write_text_file(path, os.str());
}

void write_svg_raster(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<double>& xs,
                      const std::vector<double>& ys,
                      const std::vector<std::string>& cells,
                      const std::vector<std::pair<std::string, std::string>>&
                          legend) {
  const std::size_t n1 = xs.size(), n2 = ys.size();
  if (n1 == 0 || n2 == 0 || cells.size() != n1 * n2)
    throw invalid_parameter_error("write_svg_raster: grid/cell size mismatch");
  const double dx = n1 > 1 ? (xs.back() - xs.front()) / (n1 - 1) : 1.0;
  const double dy = n2 > 1 ? (ys.back() - ys.front()) / (n2 - 1) : 1.0;
  double xlo = xs.front() - 0.5 * dx, xhi = xs.back() + 0.5 * dx;
  double ylo = ys.front() - 0.5 * dy, yhi = ys.back() + 0.5 * dy;
  const LinMap X{xlo, xhi, kL, kW - kR};
  const LinMap Y{ylo, yhi, kH - kB, kT};

  std::ostringstream os;
  svg_open(os);
  for (std::size_t i2 = 0; i2 < n2; ++i2) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      const double x0 = X(xs[i1] - 0.5 * dx), x1 = X(xs[i1] + 0.5 * dx);
      const double y0 = Y(ys[i2] + 0.5 * dy), y1 = Y(ys[i2] - 0.5 * dy);
      os << "<rect x=\"" << fmt_svg(x0) << "\" y=\"" << fmt_svg(y0)
         << "\" width=\"" << fmt_svg(x1 - x0) << "\" height=\""
         << fmt_svg(y1 - y0) << "\" fill=\"" << cells[i2 * n1 + i1]
         << "\"/>\n";
    }
  }
  svg_frame(os, title, xlabel, ylabel, X, Y);
  double ly = kT + 16;
  for (const auto& [color, text] : legend) {
    const double lx = kW - kR - 170;
    os << "<rect x=\"" << lx << "\" y=\"" << ly - 11
       << "\" width=\"14\" height=\"14\" fill=\"" << color
       << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    os << "<text font-family=\"Helvetica,Arial,sans-serif\" font-size=\"12\" "
          "x=\"" << lx + 20 << "\" y=\"" << ly << "\">" << text << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  write_text_file(path, os.str());
}

std::string region_color(Region r) {
  switch (r) {
    case Region::trivial:                     return "#f2d34e";  // yellow
    case Region::nontrivial_real_line_gapped: return "#d62728";  // red
    case Region::nontrivial_complex:          return "#1f3b70";  // dark blue
    case Region::nontrivial_partial_reZero:   return "#8ecae6";  // light blue
    case Region::nontrivial_all_imaginary:    return "#f4a6c6";  // pink
  }
  throw invalid_parameter_error("region_color: unknown region");
}

std::string gap_color(double value, double max_value) {
  double t = max_value > 0.0 ? value / max_value : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  // two-stop ramp, dark navy -> warm yellow
  const int r = static_cast<int>(std::lround(11 + t * (255 - 11)));
  const int g = static_cast<int>(std::lround(29 + t * (214 - 29)));
  const int b = static_cast<int>(std::lround(81 + t * (10 - 81)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace nhssh
