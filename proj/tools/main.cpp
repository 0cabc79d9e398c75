// nhssh command-line driver.
//
// Dispatches to the library and serializes results. Conventions:
//   * exit 0: success
//   * exit 1: the computation itself refused (critical/transition point,
//             eigensolver failure); a JSON error record goes to stdout
//   * exit 2: usage error (bad flags, bad config file, invalid parameters)
// All file outputs are deterministic: fixed column order, 12 significant
// digits, no timestamps. Identical invocations produce identical bytes.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "angle.hpp"
#include "nhssh/bands.hpp"
#include "nhssh/errors.hpp"
#include "nhssh/model.hpp"
#include "nhssh/output.hpp"
#include "nhssh/realspace.hpp"
#include "nhssh/symmetry.hpp"
#include "nhssh/topology.hpp"

namespace {

using nhssh::json;

// Merged view of a JSON config file and the parsed flags. Precedence:
// explicit flag > config file entry > built-in default. Config keys use the
// long flag names without the leading dashes. Unknown keys are rejected so a
// typo cannot silently fall back to a default.
class Settings {
 public:
  void load(const std::string& path) {
    std::ifstream f(path);
    if (!f)
      throw nhssh::invalid_parameter_error("cannot open config file: " + path);
    try {
      cfg_ = json::parse(f);
    } catch (const json::parse_error& e) {
      throw nhssh::invalid_parameter_error("malformed config file " + path +
                                           ": " + e.what());
    }
    if (!cfg_.is_object())
      throw nhssh::invalid_parameter_error(
          "config file must contain a JSON object");
  }

  // Every accessor consumes its key even when the flag wins, so an entry
  // that was merely overridden is not reported as unknown afterwards.
  double number(const CLI::Option* opt, double flag_value, const char* key,
                double fallback) {
    const json* v = find(key);
    if (opt && opt->count() > 0) return flag_value;
    if (v) {
      if (!v->is_number())
        throw nhssh::invalid_parameter_error(std::string("config key '") +
                                             key + "' must be a number");
      return v->get<double>();
    }
    return fallback;
  }

  int integer(const CLI::Option* opt, int flag_value, const char* key,
              int fallback) {
    const json* v = find(key);
    if (opt && opt->count() > 0) return flag_value;
    if (v) {
      if (!v->is_number_integer())
        throw nhssh::invalid_parameter_error(std::string("config key '") +
                                             key + "' must be an integer");
      return v->get<int>();
    }
    return fallback;
  }

  // Angle-capable value: flag and config entry may be a number (radians) or
  // a string like "0.5pi".
  double angle(const CLI::Option* opt, const std::string& flag_value,
               const char* key, const std::string& fallback) {
    const json* v = find(key);
    std::string text = fallback;
    if (opt && opt->count() > 0) {
      text = flag_value;
    } else if (v) {
      if (v->is_number()) return v->get<double>();
      if (!v->is_string())
        throw nhssh::invalid_parameter_error(
            std::string("config key '") + key +
            "' must be a number or an angle string");
      text = v->get<std::string>();
    }
    try {
      return nhssh::cli::parse_angle(text);
    } catch (const std::invalid_argument& e) {
      throw nhssh::invalid_parameter_error(e.what());
    }
  }

  std::string str(const CLI::Option* opt, const std::string& flag_value,
                  const char* key, const std::string& fallback) {
    const json* v = find(key);
    if (opt && opt->count() > 0) return flag_value;
    if (v) {
      if (!v->is_string())
        throw nhssh::invalid_parameter_error(std::string("config key '") +
                                             key + "' must be a string");
      return v->get<std::string>();
    }
    return fallback;
  }

  void reject_unused() const {
    for (auto it = cfg_.begin(); it != cfg_.end(); ++it)
      if (!used_.count(it.key()))
        throw nhssh::invalid_parameter_error("unknown config key: '" +
                                             it.key() + "'");
  }

 private:
  const json* find(const char* key) {
    auto it = cfg_.find(key);
    if (it == cfg_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  json cfg_ = json::object();
  std::set<std::string> used_;
};

// Model-parameter flags shared by every subcommand.
struct ModelFlags {
  double t = 1.0, delta = 0.3, gamma1 = 0.0, gamma2 = 0.0;
  std::string theta = "0";
  CLI::Option *t_o = nullptr, *delta_o = nullptr, *theta_o = nullptr,
              *g1_o = nullptr, *g2_o = nullptr;

  void attach(CLI::App* cmd) {
    t_o = cmd->add_option("--t", t, "Hopping scale t (default 1)");
    delta_o = cmd->add_option("--delta", delta,
                              "Dimerization strength, 0 < delta < 1 "
                              "(default 0.3)");
    theta_o = cmd->add_option(
        "--theta", theta,
        "Dimerization phase in radians or multiples of pi, e.g. 'pi', "
        "'0.5pi' (default 0)");
    g1_o = cmd->add_option("--gamma1", gamma1,
                           "Gain/loss strength on A/C sites (default 0)");
    g2_o = cmd->add_option("--gamma2", gamma2,
                           "Gain/loss strength on B/D sites (default 0)");
  }

  nhssh::ModelParams resolve(Settings& s) const {
    return nhssh::make_params(s.number(t_o, t, "t", 1.0),
                              s.number(delta_o, delta, "delta", 0.3),
                              s.angle(theta_o, theta, "theta", "0"),
                              s.number(g1_o, gamma1, "gamma1", 0.0),
                              s.number(g2_o, gamma2, "gamma2", 0.0));
  }
};

// Output destination and formats shared by the artifact-writing commands.
struct OutputFlags {
  std::string base, format;
  CLI::Option *base_o = nullptr, *format_o = nullptr;

  void attach(CLI::App* cmd, const char* default_base,
              const char* default_format) {
    base_o = cmd->add_option(
        "-o,--output", base,
        std::string("Output path base; files get .csv/.json/.svg suffixes "
                    "(default '") +
            default_base + "')");
    format_o = cmd->add_option(
        "--format", format,
        std::string("Comma-separated subset of csv,json,svg (default '") +
            default_format + "')");
  }

  std::string resolve_base(Settings& s, const char* default_base) const {
    return s.str(base_o, base, "output", default_base);
  }

  std::set<std::string> resolve_formats(Settings& s,
                                        const char* default_format) const {
    const std::string text = s.str(format_o, format, "format", default_format);
    std::set<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      if (token != "csv" && token != "json" && token != "svg")
        throw nhssh::invalid_parameter_error(
            "unknown output format '" + token + "' (expected csv, json, svg)");
      out.insert(token);
    }
    if (out.empty())
      throw nhssh::invalid_parameter_error("no output format selected");
    return out;
  }
};

void note_written(const std::string& path) {
  std::cout << "wrote " << path << "\n";
}

const char* kBandPalette[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

void write_band_svgs(const std::string& base, const nhssh::BandStructure& bs) {
  for (const bool imag : {false, true}) {
    std::vector<nhssh::SvgSeries> series;
    for (int b = 0; b < 4; ++b) {
      nhssh::SvgSeries s;
      s.x = bs.k_grid;
      s.y.reserve(bs.k_grid.size());
      for (nhssh::cplx e : bs.bands[b])
        s.y.push_back(imag ? e.imag() : e.real());
      s.color = kBandPalette[b];
      s.label = "band " + std::to_string(b + 1);
      series.push_back(std::move(s));
    }
    const std::string path = base + (imag ? "_im.svg" : "_re.svg");
    nhssh::write_svg_chart(path, imag ? "Im E(k)" : "Re E(k)", "k",
                           imag ? "Im E" : "Re E", series);
    note_written(path);
  }
}

// Complex-plane scatter of a chain spectrum, edge states highlighted.
void write_chain_svg(const std::string& path, const nhssh::ChainSpectrum& cs) {
  nhssh::SvgSeries bulk, edge;
  bulk.points_only = edge.points_only = true;
  bulk.color = "#1f77b4";
  bulk.label = "bulk";
  edge.color = "#d62728";
  edge.label = "edge";
  const std::set<int> edges(cs.edge_indices.begin(), cs.edge_indices.end());
  for (Eigen::Index i = 0; i < cs.eigenvalues.size(); ++i) {
    auto& s = edges.count(static_cast<int>(i)) ? edge : bulk;
    s.x.push_back(cs.eigenvalues(i).real());
    s.y.push_back(cs.eigenvalues(i).imag());
  }
  nhssh::write_svg_chart(path, "Finite-chain spectrum", "Re E", "Im E",
                         {bulk, edge});
}

void write_sweep_svgs(const std::string& base, const nhssh::SpectrumSweep& sw) {
  for (const bool imag : {false, true}) {
    nhssh::SvgSeries bulk, edge;
    bulk.points_only = edge.points_only = true;
    bulk.color = "#1f77b4";
    bulk.label = "bulk";
    edge.color = "#d62728";
    edge.label = "edge";
    for (const auto& pt : sw.points) {
      const std::set<int> edges(pt.edge_indices.begin(),
                                pt.edge_indices.end());
      for (Eigen::Index i = 0; i < pt.eigenvalues.size(); ++i) {
        auto& s = edges.count(static_cast<int>(i)) ? edge : bulk;
        s.x.push_back(pt.value);
        s.y.push_back(imag ? pt.eigenvalues(i).imag()
                           : pt.eigenvalues(i).real());
      }
    }
    const std::string path = base + (imag ? "_im.svg" : "_re.svg");
    nhssh::write_svg_chart(path, imag ? "Im E vs sweep" : "Re E vs sweep",
                           nhssh::to_string(sw.axis), imag ? "Im E" : "Re E",
                           {bulk, edge});
    note_written(path);
  }
}

void write_phase_svg(const std::string& path, const nhssh::PhaseDiagram& pd) {
  std::vector<std::string> cells;
  cells.reserve(pd.points.size());
  for (const auto& pt : pd.points)
    cells.push_back(nhssh::region_color(pt.region));
  const std::vector<std::pair<std::string, std::string>> legend = {
      {nhssh::region_color(nhssh::Region::trivial), "trivial"},
      {nhssh::region_color(nhssh::Region::nontrivial_real_line_gapped),
       "nontrivial, real-line gapped"},
      {nhssh::region_color(nhssh::Region::nontrivial_complex),
       "nontrivial, complex"},
      {nhssh::region_color(nhssh::Region::nontrivial_partial_reZero),
       "nontrivial, partial Re=0"},
      {nhssh::region_color(nhssh::Region::nontrivial_all_imaginary),
       "nontrivial, all-imaginary"},
  };
  nhssh::write_svg_raster(path, "Phase diagram",
                          nhssh::to_string(pd.axis1.axis),
                          nhssh::to_string(pd.axis2.axis), pd.values1,
                          pd.values2, cells, legend);
}

// Open-boundary spectrum with CLI-tunable edge detection.
nhssh::ChainSpectrum obc_with_detection(const nhssh::ModelParams& p,
                                        int n_cells, double re_tol) {
  nhssh::ChainSpectrum cs =
      nhssh::chain_spectrum(p, n_cells, nhssh::Boundary::open);
  try {
    cs.edge_indices = nhssh::detect_edge_states(cs, re_tol).indices;
  } catch (const nhssh::computation_error& e) {
    cs.edge_note = e.what();
  }
  return cs;
}

void print_error_record(const std::exception& e) {
  const char* type = "internal";
  if (dynamic_cast<const nhssh::critical_point_error*>(&e))
    type = "critical_point";
  else if (dynamic_cast<const nhssh::transition_point_error*>(&e))
    type = "transition_point";
  else if (dynamic_cast<const nhssh::eigensolver_error*>(&e))
    type = "eigensolver";
  else if (dynamic_cast<const nhssh::computation_error*>(&e))
    type = "computation";
  json record{{"error", {{"type", type}, {"message", e.what()}}}};
  std::cout << record.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nhssh: band structures, symmetries, topological invariants and "
      "finite-chain spectra of a one-dimensional lattice with a four-site "
      "cell and staggered gain/loss."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nhssh 0.1.0");

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file; explicit flags override its entries")
      ->expected(1);

  int workers = 0;
  CLI::Option* workers_o = app.add_option(
      "--workers", workers,
      "Worker threads for grid workloads (0 = NHSSH_WORKERS or all cores)");

  Settings settings;
  std::function<void()> runner;

  // ---- bands ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "bands", "Complex band structure over the Brillouin zone");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    auto nk = std::make_shared<int>(401);
    model->attach(cmd);
    out->attach(cmd, "bands", "csv,svg");
    CLI::Option* nk_o =
        cmd->add_option("--nk", *nk, "Momentum grid size (default 401)");
    cmd->callback([&, cmd, model, out, nk, nk_o]() {
      runner = [&, model, out, nk, nk_o]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const int n_k = settings.integer(nk_o, *nk, "nk", 401);
        const std::string base = out->resolve_base(settings, "bands");
        const auto formats = out->resolve_formats(settings, "csv,svg");
        settings.reject_unused();
        const nhssh::BandStructure bs = nhssh::band_sweep(p, n_k);
        if (formats.count("csv")) {
          nhssh::write_band_csv(base + ".csv", bs);
          note_written(base + ".csv");
        }
        if (formats.count("json")) {
          json j = nhssh::to_json(bs);
          j["params"] = nhssh::to_json(p);
          nhssh::write_json_file(base + ".json", j);
          note_written(base + ".json");
        }
        if (formats.count("svg")) write_band_svgs(base, bs);
      };
    });
  }

  // ---- zak --------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "zak", "Biorthogonal Zak phase of the occupied band pair");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    auto nk = std::make_shared<int>(128);
    model->attach(cmd);
    out->attach(cmd, "", "json");
    CLI::Option* nk_o =
        cmd->add_option("--nk", *nk, "Wilson-loop grid size (default 128)");
    cmd->callback([&, model, out, nk, nk_o]() {
      runner = [&, model, out, nk, nk_o]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const int n_k = settings.integer(nk_o, *nk, "nk", 128);
        const std::string base = out->resolve_base(settings, "");
        settings.reject_unused();
        const double z = nhssh::zak_phase(p, n_k);
        json j{{"params", nhssh::to_json(p)},
               {"nk", n_k},
               {"zak", nhssh::round_g12(z)}};
        std::cout << j.dump(2) << "\n";
        if (!base.empty()) {
          nhssh::write_json_file(base + ".json", j);
          note_written(base + ".json");
        }
      };
    });
  }

  // ---- winding ----------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "winding",
        "Degeneracy points, winding number and analytic critical lines");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    model->attach(cmd);
    out->attach(cmd, "", "json");
    cmd->callback([&, model, out]() {
      runner = [&, model, out]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const std::string base = out->resolve_base(settings, "");
        settings.reject_unused();
        const nhssh::DegeneracyPoints dp = nhssh::degeneracy_points(p);
        const auto w = nhssh::winding_number(p);
        const nhssh::CriticalLines cl =
            nhssh::critical_lines(p.t, p.delta, p.theta);
        json pts = json::array();
        for (const auto& [hx, hy] : dp.points)
          pts.push_back(
              json::array({nhssh::round_g12(hx), nhssh::round_g12(hy)}));
        json j{{"params", nhssh::to_json(p)},
               {"degeneracy_points", std::move(pts)},
               {"none_real", dp.none_real},
               {"winding", w ? json(*w) : json(nullptr)},
               {"critical_lines", nhssh::to_json(cl)}};
        std::cout << j.dump(2) << "\n";
        if (!base.empty()) {
          nhssh::write_json_file(base + ".json", j);
          note_written(base + ".json");
        }
      };
    });
  }

  // ---- symmetries -------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "symmetries", "Symmetry residual table and class label");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    auto nk = std::make_shared<int>(64);
    model->attach(cmd);
    out->attach(cmd, "", "json");
    CLI::Option* nk_o =
        cmd->add_option("--nk", *nk, "Residual k-grid size (default 64)");
    cmd->callback([&, model, out, nk, nk_o]() {
      runner = [&, model, out, nk, nk_o]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const int n_k = settings.integer(nk_o, *nk, "nk", 64);
        const std::string base = out->resolve_base(settings, "");
        settings.reject_unused();
        const nhssh::SymmetryReport rep = nhssh::classify(p, n_k);
        const nhssh::AntiPTResiduals apt = nhssh::antiPT_residual(p, n_k);
        std::cout << nhssh::format_symmetry_report(rep, apt);
        if (!base.empty()) {
          json j{{"params", nhssh::to_json(p)},
                 {"report", nhssh::to_json(rep)},
                 {"antiPT", nhssh::to_json(apt)}};
          nhssh::write_json_file(base + ".json", j);
          note_written(base + ".json");
        }
      };
    });
  }

  // ---- phase-diagram ----------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "phase-diagram", "Region classification over a 2D parameter grid");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    struct AxisFlags {
      std::string name1 = "gamma1", name2 = "gamma2";
      std::string min1 = "0", max1 = "3.2", min2 = "0", max2 = "3.2";
      int n1 = 100, n2 = 100;
      int nk = 201, nzak = 96;
      CLI::Option *name1_o, *name2_o, *min1_o, *max1_o, *min2_o, *max2_o,
          *n1_o, *n2_o, *nk_o, *nzak_o;
    };
    auto ax = std::make_shared<AxisFlags>();
    model->attach(cmd);
    out->attach(cmd, "phase-diagram", "csv,svg");
    ax->name1_o = cmd->add_option("--axis1", ax->name1,
                                  "First axis: gamma1, gamma2 or theta "
                                  "(default gamma1)");
    ax->min1_o = cmd->add_option("--min1", ax->min1,
                                 "First-axis lower bound (default 0)");
    ax->max1_o = cmd->add_option("--max1", ax->max1,
                                 "First-axis upper bound (default 3.2)");
    ax->n1_o = cmd->add_option("--n1", ax->n1,
                               "First-axis grid count, >= 2 (default 100)");
    ax->name2_o = cmd->add_option("--axis2", ax->name2,
                                  "Second axis (default gamma2)");
    ax->min2_o = cmd->add_option("--min2", ax->min2,
                                 "Second-axis lower bound (default 0)");
    ax->max2_o = cmd->add_option("--max2", ax->max2,
                                 "Second-axis upper bound (default 3.2)");
    ax->n2_o = cmd->add_option("--n2", ax->n2,
                               "Second-axis grid count, >= 2 (default 100)");
    ax->nk_o = cmd->add_option("--nk", ax->nk,
                               "Per-node momentum grid (default 201)");
    ax->nzak_o = cmd->add_option("--nzak", ax->nzak,
                                 "Per-node Wilson-loop grid (default 96)");
    cmd->callback([&, model, out, ax]() {
      runner = [&, model, out, ax]() {
        const nhssh::ModelParams p = model->resolve(settings);
        nhssh::AxisSpec a1, a2;
        a1.axis = nhssh::axis_from_string(
            settings.str(ax->name1_o, ax->name1, "axis1", "gamma1"));
        a2.axis = nhssh::axis_from_string(
            settings.str(ax->name2_o, ax->name2, "axis2", "gamma2"));
        a1.lo = settings.angle(ax->min1_o, ax->min1, "min1", "0");
        a1.hi = settings.angle(ax->max1_o, ax->max1, "max1", "3.2");
        a2.lo = settings.angle(ax->min2_o, ax->min2, "min2", "0");
        a2.hi = settings.angle(ax->max2_o, ax->max2, "max2", "3.2");
        a1.n = settings.integer(ax->n1_o, ax->n1, "n1", 100);
        a2.n = settings.integer(ax->n2_o, ax->n2, "n2", 100);
        if (a1.n < 2 || a2.n < 2)
          throw nhssh::invalid_parameter_error(
              "phase-diagram grid counts must be >= 2");
        const int n_k = settings.integer(ax->nk_o, ax->nk, "nk", 201);
        const int n_zak = settings.integer(ax->nzak_o, ax->nzak, "nzak", 96);
        const int nw = settings.integer(workers_o, workers, "workers", 0);
        const std::string base = out->resolve_base(settings, "phase-diagram");
        const auto formats = out->resolve_formats(settings, "csv,svg");
        settings.reject_unused();
        const nhssh::PhaseDiagram pd =
            nhssh::phase_diagram(a1, a2, p, n_k, n_zak, nw);
        if (formats.count("csv")) {
          nhssh::write_phase_diagram_csv(base + ".csv", pd);
          note_written(base + ".csv");
        }
        if (formats.count("json")) {
          nhssh::write_json_file(base + ".json", nhssh::to_json(pd));
          note_written(base + ".json");
        }
        if (formats.count("svg")) {
          write_phase_svg(base + ".svg", pd);
          note_written(base + ".svg");
        }
      };
    });
  }

  // ---- obc --------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "obc", "Finite-chain spectrum with edge-state detection");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    struct ObcFlags {
      int n_cells = 100;
      double re_tol = 1e-6;
      std::string bc = "open";
      CLI::Option *n_o, *tol_o, *bc_o;
    };
    auto fl = std::make_shared<ObcFlags>();
    model->attach(cmd);
    out->attach(cmd, "obc", "csv,svg");
    fl->n_o = cmd->add_option("--n-cells", fl->n_cells,
                              "Number of unit cells (default 100)");
    fl->tol_o = cmd->add_option(
        "--re-tol", fl->re_tol,
        "Edge candidate threshold on |Re E| (default 1e-6)");
    fl->bc_o = cmd->add_option("--bc", fl->bc,
                               "Boundary condition: open or periodic "
                               "(default open)")
                   ->check(CLI::IsMember({"open", "periodic"}));
    cmd->callback([&, model, out, fl]() {
      runner = [&, model, out, fl]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const int n_cells = settings.integer(fl->n_o, fl->n_cells,
                                             "n_cells", 100);
        const double re_tol =
            settings.number(fl->tol_o, fl->re_tol, "re_tol", 1e-6);
        const std::string bc = settings.str(fl->bc_o, fl->bc, "bc", "open");
        const std::string base = out->resolve_base(settings, "obc");
        const auto formats = out->resolve_formats(settings, "csv,svg");
        settings.reject_unused();
        const nhssh::ChainSpectrum cs =
            bc == "open"
                ? obc_with_detection(p, n_cells, re_tol)
                : nhssh::chain_spectrum(p, n_cells,
                                        nhssh::Boundary::periodic);
        if (formats.count("csv")) {
          nhssh::write_chain_csv(base + ".csv", cs);
          note_written(base + ".csv");
        }
        if (formats.count("json")) {
          nhssh::write_json_file(base + ".json", nhssh::to_json(cs));
          note_written(base + ".json");
        }
        if (formats.count("svg")) {
          write_chain_svg(base + ".svg", cs);
          note_written(base + ".svg");
        }
      };
    });
  }

  // ---- ldos -------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "ldos",
        "Per-site density of selected finite-chain states (default: the "
        "detected edge states)");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    struct LdosFlags {
      int n_cells = 100;
      double re_tol = 1e-6;
      std::vector<int> states;
      CLI::Option *n_o, *tol_o, *states_o;
    };
    auto fl = std::make_shared<LdosFlags>();
    model->attach(cmd);
    out->attach(cmd, "ldos", "csv,svg");
    fl->n_o = cmd->add_option("--n-cells", fl->n_cells,
                              "Number of unit cells (default 100)");
    fl->tol_o = cmd->add_option(
        "--re-tol", fl->re_tol,
        "Edge candidate threshold on |Re E| (default 1e-6)");
    fl->states_o = cmd->add_option(
        "--state", fl->states,
        "Explicit state indices (repeatable); default: detected edge states");
    cmd->callback([&, model, out, fl]() {
      runner = [&, model, out, fl]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const int n_cells =
            settings.integer(fl->n_o, fl->n_cells, "n_cells", 100);
        const double re_tol =
            settings.number(fl->tol_o, fl->re_tol, "re_tol", 1e-6);
        const std::string base = out->resolve_base(settings, "ldos");
        const auto formats = out->resolve_formats(settings, "csv,svg");
        settings.reject_unused();
        const nhssh::ChainSpectrum cs = obc_with_detection(p, n_cells, re_tol);
        std::vector<int> states = fl->states_o->count() > 0
                                      ? fl->states
                                      : cs.edge_indices;
        if (states.empty())
          throw nhssh::invalid_parameter_error(
              "no states selected: no edge states detected and no --state "
              "given" +
              (cs.edge_note.empty() ? std::string()
                                    : " (" + cs.edge_note + ")"));
        std::vector<nhssh::SvgSeries> series;
        json jstates = json::array();
        for (std::size_t m = 0; m < states.size(); ++m) {
          const int idx = states[m];
          const nhssh::LDOSProfile prof = nhssh::ldos(cs, idx);
          if (formats.count("csv")) {
            const std::string path =
                base + "_state" + std::to_string(idx) + ".csv";
            nhssh::write_ldos_csv(path, prof);
            note_written(path);
          }
          json w = json::array();
          for (double x : prof.weights) w.push_back(nhssh::round_g12(x));
          jstates.push_back(
              json{{"index", idx},
                   {"energy",
                    json{{"re", nhssh::round_g12(cs.eigenvalues(idx).real())},
                         {"im", nhssh::round_g12(cs.eigenvalues(idx).imag())}}},
                   {"ipr", nhssh::round_g12(nhssh::ipr(prof))},
                   {"weights", std::move(w)}});
          nhssh::SvgSeries s;
          s.color = kBandPalette[m % 4];
          s.label = "state " + std::to_string(idx);
          for (std::size_t site = 0; site < prof.weights.size(); ++site) {
            s.x.push_back(static_cast<double>(site));
            s.y.push_back(prof.weights[site]);
          }
          series.push_back(std::move(s));
        }
        if (formats.count("json")) {
          json j{{"params", nhssh::to_json(p)},
                 {"n_cells", n_cells},
                 {"states", std::move(jstates)}};
          nhssh::write_json_file(base + ".json", j);
          note_written(base + ".json");
        }
        if (formats.count("svg")) {
          nhssh::write_svg_chart(base + ".svg", "State density by site",
                                 "site", "|psi|^2", series);
          note_written(base + ".svg");
        }
      };
    });
  }

  // ---- sweep ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "sweep",
        "Finite-chain spectra along a parameter sweep, edge states tracked");
    auto model = std::make_shared<ModelFlags>();
    auto out = std::make_shared<OutputFlags>();
    struct SweepFlags {
      std::string axis = "theta", min = "-pi", max = "pi";
      int n = 33, n_cells = 100;
      double re_tol = 1e-6;
      CLI::Option *axis_o, *min_o, *max_o, *n_o, *cells_o, *tol_o;
    };
    auto fl = std::make_shared<SweepFlags>();
    model->attach(cmd);
    out->attach(cmd, "sweep", "csv,svg");
    fl->axis_o = cmd->add_option("--axis", fl->axis,
                                 "Swept parameter: gamma1, gamma2 or theta "
                                 "(default theta)");
    fl->min_o = cmd->add_option("--min", fl->min,
                                "Sweep lower bound (default -pi)");
    fl->max_o = cmd->add_option("--max", fl->max,
                                "Sweep upper bound (default pi)");
    fl->n_o = cmd->add_option("--n", fl->n,
                              "Number of sweep points, >= 16 (default 33)");
    fl->cells_o = cmd->add_option("--n-cells", fl->n_cells,
                                  "Number of unit cells (default 100)");
    fl->tol_o = cmd->add_option(
        "--re-tol", fl->re_tol,
        "Edge candidate threshold on |Re E| (default 1e-6)");
    cmd->callback([&, model, out, fl]() {
      runner = [&, model, out, fl]() {
        const nhssh::ModelParams p = model->resolve(settings);
        const nhssh::Axis axis = nhssh::axis_from_string(
            settings.str(fl->axis_o, fl->axis, "axis", "theta"));
        const double lo = settings.angle(fl->min_o, fl->min, "min", "-pi");
        const double hi = settings.angle(fl->max_o, fl->max, "max", "pi");
        const int n = settings.integer(fl->n_o, fl->n, "n", 33);
        const int n_cells =
            settings.integer(fl->cells_o, fl->n_cells, "n_cells", 100);
        const double re_tol =
            settings.number(fl->tol_o, fl->re_tol, "re_tol", 1e-6);
        const int nw = settings.integer(workers_o, workers, "workers", 0);
        const std::string base = out->resolve_base(settings, "sweep");
        const auto formats = out->resolve_formats(settings, "csv,svg");
        settings.reject_unused();
        const nhssh::SpectrumSweep sw =
            nhssh::spectrum_sweep(p, axis, lo, hi, n, n_cells, re_tol, nw);
        if (formats.count("csv")) {
          nhssh::write_sweep_csv(base + ".csv", sw);
          note_written(base + ".csv");
        }
        if (formats.count("json")) {
          nhssh::write_json_file(base + ".json", nhssh::to_json(sw));
          note_written(base + ".json");
        }
        if (formats.count("svg")) write_sweep_svgs(base, sw);
      };
    });
  }

  // Let the global --config/--workers appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any parse error is usage
  }

  try {
    if (!config_path.empty()) settings.load(config_path);
    runner();
  } catch (const nhssh::invalid_parameter_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    print_error_record(e);
    return 1;
  }
  return 0;
}
