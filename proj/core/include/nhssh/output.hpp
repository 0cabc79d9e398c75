#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "nhssh/bands.hpp"
#include "nhssh/realspace.hpp"
#include "nhssh/symmetry.hpp"
#include "nhssh/topology.hpp"

namespace nhssh {

using nlohmann::json;

// All data files are reproducible byte for byte: floating-point values are
// formatted to 12 significant digits with a fixed column/key order and no
// timestamps.  fmt_g12 is the single formatting routine every writer uses;
// round_g12 pushes a double through the same round-trip so JSON numbers carry
// the identical precision.
std::string fmt_g12(double x);
double round_g12(double x);

void write_text_file(const std::string& path, const std::string& content);

// Header + rows, comma separated, one trailing newline.  Cells are written
// verbatim (callers format numbers through fmt_g12).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// JSON views (keys are emitted sorted, which nlohmann does by default).
json to_json(const ModelParams& p);
json to_json(const BandStructure& bs);
json to_json(const SymmetryReport& rep);
json to_json(const AntiPTResiduals& r);
json to_json(const CriticalLines& lines);
json to_json(const PhasePoint& pt);
json to_json(const PhaseDiagram& pd);
json to_json(const ChainSpectrum& cs);
json to_json(const SpectrumSweep& sweep);
void write_json_file(const std::string& path, const json& j);

// CSV schemas.  Complex columns are split into *_re / *_im pairs.
//   bands:         k, E1_re, E1_im, ..., E4_re, E4_im, flagged
//   phase diagram: axis1, axis2, zak, winding, region, gap_re, gap_im
//   chain:         state_index, re_E, im_E, is_edge
//   sweep:         sweep_value, state_index, re_E, im_E, is_edge
//   ldos:          site, weight
void write_band_csv(const std::string& path, const BandStructure& bs);
void write_phase_diagram_csv(const std::string& path, const PhaseDiagram& pd);
void write_chain_csv(const std::string& path, const ChainSpectrum& cs);
void write_sweep_csv(const std::string& path, const SpectrumSweep& sweep);
void write_ldos_csv(const std::string& path, const LDOSProfile& profile);

// Fixed-width text table of residuals for terminal output.
std::string format_symmetry_report(const SymmetryReport& rep,
                                   const AntiPTResiduals& apt);

// Minimal static SVG plotting: polyline charts and cell rasters.  These are
// conveniences; CSV/JSON carry the data contract.
struct SvgSeries {
  std::vector<double> x, y;
  std::string color = "#1f77b4";
  double width = 1.5;
  std::string label;       // legend entry; empty = no entry
  bool points_only = false;  // scatter markers instead of a polyline
};

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgSeries>& series);

// Raster over a product grid; cells[i2 * n1 + i1] is an SVG color string.
// legend maps color -> text.
void write_svg_raster(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<double>& xs,
                      const std::vector<double>& ys,
                      const std::vector<std::string>& cells,
                      const std::vector<std::pair<std::string, std::string>>&
                          legend = {});

// Shared color conventions.
std::string region_color(Region r);
std::string gap_color(double value, double max_value);  // dark -> bright ramp

}  // namespace nhssh
