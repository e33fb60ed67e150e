#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

static constexpr double inf = std::numeric_limits<double>::infinity();

DielectricModel DielectricModel::perfect_mirror() {
  DielectricModel m;
  m.kind_ = MaterialKind::PerfectMirror;
  return m;
}

DielectricModel DielectricModel::plasma(double omega_p_ev) {
  if (!(omega_p_ev > 0.0)) throw DomainError("plasma: omega_p must be > 0");
  DielectricModel m;
  m.kind_ = MaterialKind::Plasma;
  m.omega_p_ = omega_p_ev;
  return m;
}

DielectricModel DielectricModel::drude(double omega_p_ev, double gamma_ev) {
  if (!(omega_p_ev > 0.0)) throw DomainError("drude: omega_p must be > 0");
  if (!(gamma_ev > 0.0))
    throw DomainError("drude: gamma must be > 0 (use the plasma variant for gamma = 0)");
  DielectricModel m;
  m.kind_ = MaterialKind::Drude;
  m.omega_p_ = omega_p_ev;
  m.gamma_ = gamma_ev;
  return m;
}

DielectricModel DielectricModel::drude_lorentz(double eps0, double eps_inf,
                                               double xi0_ev) {
  if (!(eps0 > eps_inf) || !(eps_inf >= 1.0))
    throw DomainError("drude_lorentz: require eps0 > eps_inf >= 1");
  if (!(xi0_ev > 0.0)) throw DomainError("drude_lorentz: xi0 must be > 0");
  DielectricModel m;
  m.kind_ = MaterialKind::DrudeLorentz;
  m.eps0_ = eps0;
  m.eps_inf_ = eps_inf;
  m.xi0_ = xi0_ev;
  return m;
}

DielectricModel DielectricModel::tabulated(std::vector<double> xi_ev,
                                           std::vector<double> eps,
                                           std::optional<DrudeTail> tail) {
  if (xi_ev.size() != eps.size() || xi_ev.size() < 2)
    throw LoadError("tabulated: need at least two (xi, eps) rows");
  for (size_t i = 0; i < xi_ev.size(); ++i) {
    if (!(xi_ev[i] > 0.0)) throw LoadError("tabulated: xi values must be > 0");
    if (i > 0 && !(xi_ev[i] > xi_ev[i - 1]))
      throw LoadError("tabulated: xi grid must be strictly increasing");
    if (!(eps[i] >= 1.0)) throw LoadError("tabulated: eps must be >= 1");
    if (i > 0 && eps[i] > eps[i - 1] + 1e-12 * eps[i - 1])
      throw LoadError("tabulated: eps must be non-increasing in xi");
  }
  DielectricModel m;
  m.kind_ = MaterialKind::Tabulated;
  m.tab_xi_ = xi_ev;
  m.tab_eps_ = eps;
  m.tab_ln_xi_.resize(xi_ev.size());
  m.tab_ln_em1_.resize(xi_ev.size());
  for (size_t i = 0; i < xi_ev.size(); ++i) {
    m.tab_ln_xi_[i] = std::log(xi_ev[i]);
    m.tab_ln_em1_[i] = (eps[i] > 1.0) ? std::log(eps[i] - 1.0) : -inf;
  }
  m.tail_ = tail;
  return m;
}

double DielectricModel::eval_epsilon(double xi) const {
  if (xi < 0.0) throw DomainError("eval_epsilon: xi must be >= 0");
  switch (kind_) {
    case MaterialKind::PerfectMirror:
      return inf;
    case MaterialKind::Plasma:
      if (xi == 0.0) return inf;
      return 1.0 + (omega_p_ / xi) * (omega_p_ / xi);
    case MaterialKind::Drude:
      if (xi == 0.0) return inf;
      return 1.0 + omega_p_ * omega_p_ / (xi * (xi + gamma_));
    case MaterialKind::DrudeLorentz:
      return eps_inf_ + (eps0_ - eps_inf_) * xi0_ * xi0_ / (xi * xi + xi0_ * xi0_);
    case MaterialKind::Tabulated: {
      if (xi < tab_xi_.front()) {
        if (tail_) {
          if (xi == 0.0) return inf;
          return 1.0 + tail_->omega_p * tail_->omega_p / (xi * (xi + tail_->gamma));
        }
        throw DomainError("eval_epsilon: xi below tabulated grid (no extrapolation enabled)");
      }
      if (xi > tab_xi_.back())
        throw DomainError("eval_epsilon: xi above tabulated grid");
      auto it = std::lower_bound(tab_xi_.begin(), tab_xi_.end(), xi);
      size_t hi = static_cast<size_t>(it - tab_xi_.begin());
      if (tab_xi_[hi] == xi) return tab_eps_[hi];
      size_t lo = hi - 1;
      // log-log interpolation of eps - 1
      if (tab_ln_em1_[lo] == -inf || tab_ln_em1_[hi] == -inf) return 1.0;
      double t = (std::log(xi) - tab_ln_xi_[lo]) / (tab_ln_xi_[hi] - tab_ln_xi_[lo]);
      return 1.0 + std::exp((1.0 - t) * tab_ln_em1_[lo] + t * tab_ln_em1_[hi]);
    }
  }
  return 1.0;
}

double DielectricModel::static_conductivity() const {
  switch (kind_) {
    case MaterialKind::Drude:
      return omega_p_ * omega_p_ / gamma_;
    case MaterialKind::Plasma:
    case MaterialKind::PerfectMirror:
      return inf; // lossless limit
    default:
      throw NotApplicableError("static_conductivity: defined for perfect, plasma and Drude only");
  }
}

double DielectricModel::plasma_wavelength() const {
  if (kind_ != MaterialKind::Plasma && kind_ != MaterialKind::Drude)
    throw NotApplicableError("plasma_wavelength: no omega_p in this model");
  return 2.0 * pi * hbar_c / omega_p_;
}

std::string DielectricModel::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case MaterialKind::PerfectMirror: os << "perfect"; break;
    case MaterialKind::Plasma: os << "plasma(omega_p=" << omega_p_ << " eV)"; break;
    case MaterialKind::Drude:
      os << "drude(omega_p=" << omega_p_ << " eV, gamma=" << gamma_ << " eV)";
      break;
    case MaterialKind::DrudeLorentz:
      os << "drude_lorentz(eps0=" << eps0_ << ", eps_inf=" << eps_inf_
         << ", xi0=" << xi0_ << " eV)";
      break;
    case MaterialKind::Tabulated:
      os << "tabulated(" << tab_xi_.size() << " points)";
      break;
  }
  return os.str();
}

DielectricModel load_table(std::istream& in, std::optional<DrudeTail> tail) {
  std::vector<double> xi, eps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double a, b;
    if (!(ls >> a)) continue; // blank or comment-only line
    if (!(ls >> b))
      throw LoadError("table line " + std::to_string(lineno) + ": expected two columns");
    double trailing;
    if (ls >> trailing)
      throw LoadError("table line " + std::to_string(lineno) + ": more than two columns");
    xi.push_back(a);
    eps.push_back(b);
  }
  try {
    return DielectricModel::tabulated(std::move(xi), std::move(eps), tail);
  } catch (const LoadError& e) {
    throw LoadError(std::string("table: ") + e.what());
  }
}

DielectricModel load_table_file(const std::string& path, std::optional<DrudeTail> tail) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open table file: " + path);
  return load_table(in, tail);
}

} // namespace casimir
