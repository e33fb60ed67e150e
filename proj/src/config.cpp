#include "casimir/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/corrugation.hpp"
#include "casimir/errors.hpp"
#include "casimir/onedim.hpp"
#include "casimir/parallel.hpp"
#include "casimir/pfa.hpp"
#include "casimir/planeplane.hpp"
#include "casimir/planesphere.hpp"

namespace casimir {

std::vector<double> SweepSpec::grid() const {
  if (count < 1) throw LoadError("sweep: count must be >= 1");
  if (!(from > 0.0) || !(to > 0.0))
    throw LoadError("sweep: range must be positive");
  std::vector<double> g;
  if (count == 1) {
    g.push_back(from);
    return g;
  }
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    if (log_spacing)
      g.push_back(std::exp(std::log(from) + t * (std::log(to) - std::log(from))));
    else
      g.push_back(from + t * (to - from));
  }
  return g;
}

namespace {

struct RawConfig {
  // section -> key -> value, preserving duplicate detection
  std::map<std::string, std::map<std::string, std::string>> kv;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

RawConfig tokenize(std::istream& in) {
  RawConfig raw;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw LoadError("config line " + std::to_string(lineno) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw LoadError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw LoadError("config line " + std::to_string(lineno) + ": empty key or value");
    if (section.empty())
      throw LoadError("config line " + std::to_string(lineno) + ": key outside any section");
    auto& sec = raw.kv[section];
    if (sec.count(key))
      throw LoadError("config: duplicate key '" + section + "." + key + "'");
    sec[key] = value;
  }
  return raw;
}

const std::map<std::string, std::set<std::string>> allowed_keys = {
    {"run", {"mode", "out", "workers", "units", "tolerance"}},
    {"geometry",
     {"L", "R", "A", "a1", "a2", "lambda_C", "b", "theta", "Lx", "Ly", "h", "d",
      "d1", "r1", "r2", "ellmax", "convergence_report", "pfa_kind"}},
    {"material",
     {"model", "omega_p", "gamma", "eps0", "eps_inf", "xi0", "path",
      "tail_omega_p", "tail_gamma"}},
    {"material2",
     {"model", "omega_p", "gamma", "eps0", "eps_inf", "xi0", "path",
      "tail_omega_p", "tail_gamma"}},
    {"thermal", {"T"}},
    {"sweep", {"variable", "from", "to", "spacing", "count"}},
};

void check_keys(const RawConfig& raw) {
  std::vector<std::string> unknown;
  for (const auto& [section, keys] : raw.kv) {
    auto it = allowed_keys.find(section);
    if (it == allowed_keys.end()) {
      unknown.push_back("[" + section + "]");
      continue;
    }
    for (const auto& [k, v] : keys)
      if (!it->second.count(k)) unknown.push_back(section + "." + k);
  }
  if (!unknown.empty()) {
    std::string msg = "config: unknown keys:";
    for (const auto& u : unknown) msg += " " + u;
    throw LoadError(msg);
  }
}

class Section {
public:
  Section(const RawConfig& raw, const std::string& name) {
    auto it = raw.kv.find(name);
    if (it != raw.kv.end()) kv_ = &it->second;
    name_ = name;
  }
  bool exists() const { return kv_ != nullptr; }
  std::optional<std::string> get(const std::string& key) const {
    if (!kv_) return std::nullopt;
    auto it = kv_->find(key);
    if (it == kv_->end()) return std::nullopt;
    return it->second;
  }
  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw LoadError("config: missing required key '" + name_ + "." + key + "'");
    return *v;
  }
  double get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? parse_double(key, *v) : fallback;
  }
  int get_int(const std::string& key, int fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
      size_t pos = 0;
      int r = std::stoi(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("");
      return r;
    } catch (...) {
      throw LoadError("config: key '" + name_ + "." + key + "' is not an integer: " + *v);
    }
  }
  double parse_double(const std::string& key, const std::string& v) const {
    try {
      size_t pos = 0;
      double r = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("");
      return r;
    } catch (...) {
      throw LoadError("config: key '" + name_ + "." + key + "' is not a number: " + v);
    }
  }

private:
  const std::map<std::string, std::string>* kv_ = nullptr;
  std::string name_;
};

DielectricModel parse_material(const Section& sec) {
  std::string model = sec.require("model");
  std::optional<DrudeTail> tail;
  if (sec.get("tail_omega_p")) {
    tail = DrudeTail{sec.get_double("tail_omega_p", 0.0),
                     sec.get_double("tail_gamma", 0.0)};
  }
  if (model == "perfect") return DielectricModel::perfect_mirror();
  if (model == "plasma") return DielectricModel::plasma(sec.get_double("omega_p", 0.0));
  if (model == "drude")
    return DielectricModel::drude(sec.get_double("omega_p", 0.0),
                                  sec.get_double("gamma", 0.0));
  if (model == "drude_lorentz")
    return DielectricModel::drude_lorentz(sec.get_double("eps0", 0.0),
                                          sec.get_double("eps_inf", 0.0),
                                          sec.get_double("xi0", 0.0));
  if (model == "table") return load_table_file(sec.require("path"), tail);
  throw LoadError("config: unknown material model '" + model + "'");
}

} // namespace

RunConfig parse_config(std::istream& in) {
  RawConfig raw = tokenize(in);
  check_keys(raw);
  RunConfig cfg;

  Section run(raw, "run");
  std::string mode = run.exists() ? run.require("mode") : "plane-plane";
  if (mode == "onedim")
    cfg.mode = RunMode::OneDim;
  else if (mode == "plane-plane")
    cfg.mode = RunMode::PlanePlane;
  else if (mode == "plane-sphere")
    cfg.mode = RunMode::PlaneSphere;
  else if (mode == "corrugation")
    cfg.mode = RunMode::Corrugation;
  else if (mode == "pfa")
    cfg.mode = RunMode::Pfa;
  else
    throw LoadError("config: unknown mode '" + mode + "'");
  if (auto v = run.get("out")) cfg.out_path = *v;
  cfg.workers = run.get_int("workers", 0);
  cfg.tolerance = run.get_double("tolerance", 1e-9);
  if (auto v = run.get("units")) {
    if (*v == "natural")
      cfg.units = UnitSystem::Natural;
    else if (*v == "si")
      cfg.units = UnitSystem::SI;
    else
      throw LoadError("config: units must be 'natural' or 'si'");
  }

  Section geo(raw, "geometry");
  cfg.L = geo.get_double("L", 0.0);
  cfg.R = geo.get_double("R", 0.0);
  cfg.area = geo.get_double("A", 1.0);
  cfg.a1 = geo.get_double("a1", 0.0);
  cfg.a2 = geo.get_double("a2", 0.0);
  cfg.lambda_C = geo.get_double("lambda_C", 0.0);
  cfg.b = geo.get_double("b", 0.0);
  cfg.theta = geo.get_double("theta", 0.0);
  cfg.Lx = geo.get_double("Lx", 0.0);
  cfg.Ly = geo.get_double("Ly", 0.0);
  cfg.h = geo.get_double("h", 0.0);
  cfg.d = geo.get_double("d", 0.0);
  cfg.d1 = geo.get_double("d1", 0.0);
  cfg.r1 = geo.get_double("r1", 1.0);
  cfg.r2 = geo.get_double("r2", 1.0);
  cfg.ell_max = geo.get_int("ellmax", 0);
  if (auto v = geo.get("convergence_report"))
    cfg.convergence_report = (*v == "true" || *v == "1" || *v == "yes");
  if (auto v = geo.get("pfa_kind")) cfg.pfa_kind = *v;

  Section mat(raw, "material");
  if (mat.exists()) cfg.material = parse_material(mat);
  Section mat2(raw, "material2");
  if (mat2.exists()) {
    cfg.material2 = parse_material(mat2);
    cfg.has_material2 = true;
  } else {
    cfg.material2 = cfg.material;
  }

  Section th(raw, "thermal");
  if (th.exists()) {
    std::string tlist = th.require("T");
    cfg.temperatures.clear();
    std::stringstream ss(tlist);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        cfg.temperatures.push_back(std::stod(item));
      } catch (...) {
        throw LoadError("config: bad temperature '" + item + "'");
      }
    }
    if (cfg.temperatures.empty())
      throw LoadError("config: thermal.T lists no temperatures");
    for (double T : cfg.temperatures)
      if (T < 0.0) throw LoadError("config: temperatures must be >= 0");
  }

  Section sw(raw, "sweep");
  if (sw.exists()) {
    SweepSpec s;
    s.variable = sw.require("variable");
    if (s.variable != "L" && s.variable != "R" && s.variable != "T" &&
        s.variable != "lambda_C")
      throw LoadError("config: sweep variable must be one of L, R, T, lambda_C");
    s.from = sw.get_double("from", 0.0);
    s.to = sw.get_double("to", 0.0);
    s.count = sw.get_int("count", 1);
    std::string spacing = sw.get("spacing").value_or("linear");
    if (spacing == "log")
      s.log_spacing = true;
    else if (spacing != "linear")
      throw LoadError("config: sweep spacing must be 'linear' or 'log'");
    (void)s.grid(); // validates range and count
    cfg.sweep = s;
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open config file: " + path);
  return parse_config(in);
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Row {
  std::vector<std::string> cells;
  bool failed = false;
  bool warned = false;
};

struct SweepPoint {
  double L, R, T, lambda_C;
};

// one task per (temperature x sweep value)
std::vector<SweepPoint> sweep_points(const RunConfig& cfg) {
  std::vector<double> values{0.0};
  std::string var;
  if (cfg.sweep) {
    var = cfg.sweep->variable;
    values = cfg.sweep->grid();
  }
  std::vector<SweepPoint> pts;
  for (double T : cfg.temperatures) {
    for (double v : values) {
      SweepPoint p{cfg.L, cfg.R, T, cfg.lambda_C};
      if (var == "L") p.L = v;
      if (var == "R") p.R = v;
      if (var == "T") p.T = v;
      if (var == "lambda_C") p.lambda_C = v;
      pts.push_back(p);
    }
  }
  // sweeping T replaces the temperature list
  if (var == "T") {
    pts.clear();
    for (double v : values) pts.push_back({cfg.L, cfg.R, v, cfg.lambda_C});
  }
  return pts;
}

double to_si(double v, double factor, UnitSystem u) {
  return u == UnitSystem::SI ? v * factor : v;
}

} // namespace

int run(const RunConfig& cfg) {
  const bool si = cfg.units == UnitSystem::SI;
  std::vector<std::string> header;
  std::vector<Row> rows;
  auto points = sweep_points(cfg);
  int workers = cfg.workers > 0 ? cfg.workers : default_workers();

  auto emit = [&](const std::vector<double>& vals, bool warned) {
    Row r;
    for (double v : vals) r.cells.push_back(fmt(v));
    r.warned = warned;
    return r;
  };
  auto failed_row = [&](const SweepPoint& p, size_t ncols,
                        const std::string& /*what*/) {
    Row r;
    r.cells.push_back(fmt(p.L));
    while (r.cells.size() + 1 < ncols) r.cells.push_back("FAILED");
    r.failed = true;
    return r;
  };

  switch (cfg.mode) {
    case RunMode::OneDim: {
      header = {"L_nm", "T_K", si ? "FreeEnergy_J" : "FreeEnergy_eV",
                si ? "F_N" : "F_eV_per_nm", "S_eV_per_K", "tail_eV", "status"};
      auto m1 = Mirror1D::constant(cfg.r1);
      auto m2 = Mirror1D::constant(cfg.r2);
      auto task = [&](int i) {
        const auto& p = points[i];
        ThermalSpec th(p.T);
        double F = free_energy_1d(m1, m2, p.L, th);
        double f = force_1d(m1, m2, p.L, th);
        double S = p.T > 0.0 ? entropy_1d(m1, m2, p.L, p.T) : 0.0;
        Row r = emit({p.L, p.T, to_si(F, ev_to_joule, cfg.units),
                      to_si(f, ev_per_nm_to_newton, cfg.units), S, 0.0}, false);
        return r;
      };
      rows = parallel_map<Row>(static_cast<int>(points.size()), workers,
                               [&](int i) -> Row {
                                 try {
                                   return task(i);
                                 } catch (const ConvergenceError& e) {
                                   return failed_row(points[i], header.size(), e.what());
                                 }
                               });
      break;
    }
    case RunMode::PlanePlane: {
      header = {"L_nm",
                "T_K",
                si ? "F_per_area_Pa" : "F_per_area_eV_nm3",
                si ? "E_per_area_J_m2" : "E_per_area_eV_nm2",
                si ? "G_per_area_N_m3" : "G_per_area_eV_nm4",
                "S_per_area_eV_K_nm2",
                "eta",
                "tail_estimate",
                "status"};
      auto task = [&](int i) {
        const auto& p = points[i];
        PlanePlaneSpec s;
        s.L = p.L;
        s.area = cfg.area;
        s.model1 = cfg.material;
        s.model2 = cfg.material2;
        s.thermal = ThermalSpec(p.T);
        s.quad_rel_tol = cfg.tolerance;
        auto fe = free_energy_pp(s);
        double f = force_pp(s);
        double g = gradient_pp(s);
        double S = p.T > 0.0 ? entropy_pp(s) : 0.0;
        double eta = reduction_factor(s);
        return emit({p.L, p.T,
                     to_si(f, ev_per_nm3_to_pascal, cfg.units),
                     to_si(fe.free_energy_per_area, ev_to_joule * 1e18, cfg.units),
                     to_si(g, ev_per_nm3_to_pascal * 1e9, cfg.units),
                     S, eta, fe.matsubara_tail},
                    false);
      };
      rows = parallel_map<Row>(static_cast<int>(points.size()), workers,
                               [&](int i) -> Row {
                                 try {
                                   return task(i);
                                 } catch (const ConvergenceError& e) {
                                   return failed_row(points[i], header.size(), e.what());
                                 }
                               });
      break;
    }
    case RunMode::PlaneSphere: {
      if (cfg.convergence_report) {
        header = {"ell_max", "rho_E", "FreeEnergy_eV", "status"};
        for (int lm : {10, 20, 40, 80, 120}) {
          PlaneSphereSpec s;
          s.L = cfg.L;
          s.R = cfg.R;
          s.sphere = cfg.material;
          s.plate = cfg.material2;
          s.thermal = ThermalSpec(points.front().T);
          s.ell_max = lm;
          s.workers = workers;
          try {
            auto res = compute_ps(s);
            auto pfa = pfa_plane_sphere(cfg.L, cfg.R, cfg.material, cfg.material2,
                                        s.thermal);
            Row r = emit({static_cast<double>(lm),
                          rho_ratio(res.free_energy, pfa.value.energy),
                          res.free_energy},
                         res.diag.ell_max_warning);
            rows.push_back(r);
          } catch (const ConvergenceError& e) {
            rows.push_back(failed_row(points.front(), header.size(), e.what()));
          }
        }
        break;
      }
      header = {"L_nm", "R_nm", "T_K", "ell_max",
                si ? "F_N" : "F_eV_per_nm",
                si ? "G_N_per_m" : "G_eV_per_nm2",
                si ? "E_or_FreeEnergy_J" : "E_or_FreeEnergy_eV",
                "rho_E", "rho_F", "rho_G", "theta", "tail_m", "resid_ell",
                "status"};
      for (const auto& p : points) {
        PlaneSphereSpec s;
        s.L = p.L;
        s.R = p.R;
        s.sphere = cfg.material;
        s.plate = cfg.material2;
        s.thermal = ThermalSpec(p.T);
        s.ell_max = cfg.ell_max;
        s.workers = workers;
        try {
          auto res = compute_ps(s);
          auto pfa =
              pfa_plane_sphere(p.L, p.R, cfg.material, cfg.material2, s.thermal);
          double th = p.T > 0.0 ? theta_ratio(s) : 1.0;
          rows.push_back(emit(
              {p.L, p.R, p.T, static_cast<double>(res.diag.ell_max_used),
               to_si(res.force, ev_per_nm_to_newton, cfg.units),
               to_si(res.gradient, ev_per_nm2_to_newton_per_m, cfg.units),
               to_si(res.free_energy, ev_to_joule, cfg.units),
               rho_ratio(res.free_energy, pfa.value.energy),
               rho_ratio(res.force, pfa.value.force),
               rho_ratio(res.gradient, pfa.value.gradient), th,
               res.diag.matsubara_tail, res.diag.ell_residual},
              res.diag.ell_max_warning));
        } catch (const ConvergenceError& e) {
          rows.push_back(failed_row(p, header.size(), e.what()));
        }
      }
      break;
    }
    case RunMode::Corrugation: {
      header = {"L_nm", "lambdaC_nm", "kCL", "rho",
                "G_C_eV_nm4", si ? "Flat_max_N" : "Flat_max_eV_per_nm",
                "theta_star_rad",
                si ? "tau_star_per_area_N_per_m" : "tau_star_per_area_eV_nm2",
                "status"};
      for (const auto& p : points) {
        CorrugationSpec s;
        s.L = p.L;
        s.a1 = cfg.a1;
        s.a2 = cfg.a2;
        s.lambda_C = p.lambda_C;
        s.b = cfg.b;
        s.theta = 0.0;
        s.Lx = cfg.Lx;
        s.Ly = cfg.Ly;
        s.model = cfg.material;
        s.thermal = ThermalSpec(p.T);
        try {
          double kC = s.k_C();
          double gc = response_function(kC, s.L, s.model, s.thermal);
          double g0 = pfa_response(s.L, s.model, s.thermal);
          // peak lateral force at b = lambda_C / 4
          double flat = 0.5 * s.area() * gc * s.a1 * s.a2 * kC;
          auto tm = torque_max(s);
          rows.push_back(emit({p.L, p.lambda_C, kC * p.L, gc / g0, gc,
                               to_si(flat, ev_per_nm_to_newton, cfg.units),
                               tm.theta_star,
                               to_si(tm.tau_star / s.area(),
                                     ev_per_nm2_to_newton_per_m, cfg.units)},
                              s.perturbative_warning()));
        } catch (const ConvergenceError& e) {
          rows.push_back(failed_row(p, header.size(), e.what()));
        }
      }
      break;
    }
    case RunMode::Pfa: {
      if (cfg.pfa_kind == "grating") {
        header = {"L_nm", "h_nm", "d_nm", "d1_nm", "T_K",
                  si ? "F_PFA_per_area_Pa" : "F_PFA_per_area_eV_nm3", "status"};
        for (const auto& p : points) {
          PfaGratingSpec s;
          s.L = p.L;
          s.h = cfg.h;
          s.d = cfg.d;
          s.d1 = cfg.d1;
          s.model1 = cfg.material;
          s.model2 = cfg.material2;
          try {
            double f = pfa_grating(s, ThermalSpec(p.T));
            rows.push_back(emit({p.L, cfg.h, cfg.d, cfg.d1, p.T,
                                 to_si(f, ev_per_nm3_to_pascal, cfg.units)},
                                false));
          } catch (const ConvergenceError& e) {
            rows.push_back(failed_row(p, header.size(), e.what()));
          }
        }
      } else if (cfg.pfa_kind == "plane-sphere") {
        header = {"L_nm", "R_nm", "T_K",
                  si ? "E_PFA_J" : "E_PFA_eV",
                  si ? "F_PFA_N" : "F_PFA_eV_per_nm",
                  si ? "G_PFA_N_per_m" : "G_PFA_eV_nm2", "status"};
        for (const auto& p : points) {
          try {
            auto r = pfa_plane_sphere(p.L, p.R, cfg.material, cfg.material2,
                                      ThermalSpec(p.T));
            rows.push_back(emit({p.L, p.R, p.T,
                                 to_si(r.value.energy, ev_to_joule, cfg.units),
                                 to_si(r.value.force, ev_per_nm_to_newton, cfg.units),
                                 to_si(r.value.gradient,
                                       ev_per_nm2_to_newton_per_m, cfg.units)},
                                r.curvature_warning));
          } catch (const ConvergenceError& e) {
            rows.push_back(failed_row(p, header.size(), e.what()));
          }
        }
      } else {
        throw LoadError("config: pfa_kind must be 'plane-sphere' or 'grating'");
      }
      break;
    }
  }

  std::ofstream out(cfg.out_path);
  if (!out) throw LoadError("cannot open output path: " + cfg.out_path);
  for (size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  bool exit2 = false;
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.cells.size(); ++i) out << r.cells[i] << ",";
    out << (r.failed ? "fail" : (r.warned ? "warn" : "ok")) << "\n";
    exit2 = exit2 || r.failed;
    if (cfg.mode == RunMode::PlaneSphere && r.warned) exit2 = true;
  }
  out.close();
  return exit2 ? 2 : 0;
}

} // namespace casimir
