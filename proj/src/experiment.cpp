#include "qlogic/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json_io.hpp"
#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/truth.hpp"
#include "qlogic/valuation.hpp"

namespace qlogic {

using detail::invalid;
using detail::json;

void ExperimentConfig::validate(const Tolerance& tol) const {
  if (n_paths() < 2) invalid("amplitudes", "at least two paths are required");
  if (screen_cells < 2) invalid("screen_cells", "at least two screen cells are required");
  double total = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const Complex c = amplitudes[i];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      invalid("amplitudes[" + std::to_string(i) + "]", "non-finite amplitude");
    }
    total += std::norm(c);
  }
  if (std::abs(total - 1.0) > tol.norm) {
    std::ostringstream os;
    os.precision(12);
    os << "squared moduli sum to " << total << ", not 1";
    invalid("amplitudes", os.str());
  }
  if (path_wavefunctions.size() != n_paths()) {
    invalid("path_wavefunctions", "expected one wavefunction per path (" + std::to_string(n_paths()) + ")");
  }
  for (std::size_t i = 0; i < path_wavefunctions.size(); ++i) {
    const std::string field = "path_wavefunctions[" + std::to_string(i) + "]";
    const auto& phi = path_wavefunctions[i];
    if (phi.size() != screen_cells) invalid(field, "length differs from screen_cells");
    for (const auto& z : phi) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) invalid(field, "non-finite entry");
    }
    if (std::abs(vector_norm(phi) - 1.0) > tol.norm) invalid(field, "wavefunction is not normalized");
  }
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (std::size_t cell : regions[r].cells) {
      if (cell >= screen_cells) {
        invalid("regions[" + std::to_string(r) + "]", "cell " + std::to_string(cell) + " is out of range");
      }
    }
  }
}

ExperimentConfig parse_experiment(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ConfigInvalid, std::string("experiment: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("experiment")) invalid("experiment", "missing top-level 'experiment' object");
  detail::reject_unknown_keys(doc, "document", {"dimension", "atoms", "state", "policy", "assignment", "experiment"});
  const json& e = doc["experiment"];
  detail::reject_unknown_keys(e, "experiment", {"amplitudes", "screen_cells", "path_wavefunctions", "regions", "seed"});

  ExperimentConfig cfg;
  if (!e.contains("amplitudes")) invalid("experiment.amplitudes", "required");
  cfg.amplitudes = detail::parse_complex_vector(e["amplitudes"], "experiment.amplitudes");
  if (!e.contains("screen_cells")) invalid("experiment.screen_cells", "required");
  cfg.screen_cells = detail::parse_positive(e["screen_cells"], "experiment.screen_cells");
  if (!e.contains("path_wavefunctions") || !e["path_wavefunctions"].is_array()) {
    invalid("experiment.path_wavefunctions", "expected an array of wavefunctions");
  }
  const json& waves = e["path_wavefunctions"];
  for (std::size_t i = 0; i < waves.size(); ++i) {
    cfg.path_wavefunctions.push_back(
        detail::parse_complex_vector(waves[i], "experiment.path_wavefunctions[" + std::to_string(i) + "]"));
  }
  if (e.contains("regions")) {
    const json& regions = e["regions"];
    if (!regions.is_array()) invalid("experiment.regions", "expected an array of {name, cells}");
    for (std::size_t r = 0; r < regions.size(); ++r) {
      const std::string field = "experiment.regions[" + std::to_string(r) + "]";
      detail::reject_unknown_keys(regions[r], field, {"name", "cells"});
      if (!regions[r].contains("name") || !regions[r]["name"].is_string()) invalid(field + ".name", "expected a string");
      if (!regions[r].contains("cells") || !regions[r]["cells"].is_array()) invalid(field + ".cells", "expected an array");
      Region region{regions[r]["name"].get<std::string>(), {}};
      for (const auto& c : regions[r]["cells"]) {
        if (!c.is_number_unsigned()) invalid(field + ".cells", "expected non-negative integers");
        region.cells.push_back(c.get<std::size_t>());
      }
      cfg.regions.push_back(std::move(region));
    }
  }
  if (e.contains("seed")) {
    if (!e["seed"].is_number_unsigned()) invalid("experiment.seed", "expected a non-negative integer");
    cfg.seed = e["seed"].get<std::uint64_t>();
  }
  cfg.validate();
  return cfg;
}

StateVector build_state(const ExperimentConfig& cfg, const Tolerance& tol) {
  cfg.validate(tol);
  ComplexVector amps;
  amps.reserve(cfg.n_paths() * cfg.screen_cells);
  for (std::size_t i = 0; i < cfg.n_paths(); ++i)
    for (const auto& phi : cfg.path_wavefunctions[i]) amps.push_back(cfg.amplitudes[i] * phi);
  return StateVector(std::move(amps), Tolerance{tol.proj, tol.herm, 10 * tol.norm, tol.rank, tol.eq});
}

std::vector<double> conditional_pattern(const ExperimentConfig& cfg, std::size_t path, const Tolerance& tol) {
  cfg.validate(tol);
  if (path >= cfg.n_paths()) fail(ErrorKind::IndexOutOfRange, "path index " + std::to_string(path) + " out of range");
  std::vector<double> out;
  out.reserve(cfg.screen_cells);
  for (const auto& z : cfg.path_wavefunctions[path]) out.push_back(std::norm(z));
  return out;
}

namespace {

std::vector<double> raw_cross_terms(const ExperimentConfig& cfg) {
  std::vector<double> cross(cfg.screen_cells, 0.0);
  for (std::size_t m = 0; m < cfg.screen_cells; ++m) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < cfg.n_paths(); ++i)
      for (std::size_t j = i + 1; j < cfg.n_paths(); ++j)
        acc += cfg.amplitudes[i] * std::conj(cfg.amplitudes[j]) * cfg.path_wavefunctions[i][m] *
               std::conj(cfg.path_wavefunctions[j][m]);
    cross[m] = 2.0 * acc.real();
  }
  return cross;
}

std::vector<double> mixture_pattern(const ExperimentConfig& cfg) {
  std::vector<double> mix(cfg.screen_cells, 0.0);
  for (std::size_t i = 0; i < cfg.n_paths(); ++i) {
    const double w = std::norm(cfg.amplitudes[i]);
    for (std::size_t m = 0; m < cfg.screen_cells; ++m) mix[m] += w * std::norm(cfg.path_wavefunctions[i][m]);
  }
  return mix;
}

}  // namespace

std::vector<double> interference_cross_terms(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<double> cross = raw_cross_terms(cfg);
  const std::vector<double> mix = mixture_pattern(cfg);
  // The coherent pattern is renormalized by Z = 1 + sum(cross); this is the
  // cross-term expression for coherent - mixture after that rescaling. For
  // mutually orthogonal path wavefunctions Z = 1 and it is the bare sum.
  double z = 1.0;
  for (double c : cross) z += c;
  std::vector<double> out(cfg.screen_cells);
  for (std::size_t m = 0; m < cfg.screen_cells; ++m) out[m] = (cross[m] - (z - 1.0) * mix[m]) / z;
  return out;
}

PatternReport run_patterns(const ExperimentConfig& cfg, const Tolerance& tol) {
  cfg.validate(tol);
  PatternReport rep;
  rep.mixture = mixture_pattern(cfg);

  rep.coherent.resize(cfg.screen_cells);
  double z = 0.0;
  for (std::size_t m = 0; m < cfg.screen_cells; ++m) {
    Complex amp = 0.0;
    for (std::size_t i = 0; i < cfg.n_paths(); ++i) amp += cfg.amplitudes[i] * cfg.path_wavefunctions[i][m];
    rep.coherent[m] = std::norm(amp);
    z += rep.coherent[m];
  }
  if (z <= tol.eq) invalid("path_wavefunctions", "the coherent superposition vanishes on the screen");
  for (double& p : rep.coherent) p /= z;

  rep.interference_term.resize(cfg.screen_cells);
  for (std::size_t m = 0; m < cfg.screen_cells; ++m) rep.interference_term[m] = rep.coherent[m] - rep.mixture[m];

  for (const auto& region : cfg.regions) {
    RegionProbabilities rp{region.name, 0.0, 0.0, std::vector<double>(cfg.n_paths(), 0.0)};
    for (std::size_t cell : region.cells) {
      rp.coherent += rep.coherent[cell];
      rp.mixture += rep.mixture[cell];
      for (std::size_t i = 0; i < cfg.n_paths(); ++i) rp.conditional[i] += std::norm(cfg.path_wavefunctions[i][cell]);
    }
    rep.regions.push_back(std::move(rp));
  }
  return rep;
}

WhichWayResult simulate_which_way(const ExperimentConfig& cfg, std::size_t trials, SplitMix64& rng,
                                  const Tolerance& tol) {
  if (trials == 0) fail(ErrorKind::InvalidArgument, "trials must be at least 1");
  const StateVector psi = build_state(cfg, tol);
  const std::size_t n = cfg.n_paths();
  const ComplexMatrix screen_identity = ComplexMatrix::identity(cfg.screen_cells);

  std::vector<Subspace> detectors;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> indicator(n, 0.0);
    indicator[i] = 1.0;
    detectors.emplace_back(Projector(tensor_product(ComplexMatrix::diagonal(indicator), screen_identity), tol));
    acc += expectation(detectors.back().projector(), psi, tol);
    cumulative.push_back(acc);
  }

  WhichWayResult out{trials, std::vector<std::size_t>(n, 0), true, true};
  for (std::size_t t = 0; t < trials; ++t) {
    const double u = rng.uniform() * acc;
    std::size_t path = 0;
    while (path + 1 < n && u >= cumulative[path]) ++path;
    ++out.clicks[path];

    const Valuation after(ValuationPolicy::eigenstate_bivalent(), measure_update(detectors[path].projector(), psi, tol),
                          tol);
    std::size_t true_count = 0;
    TruthValue any = TruthValue::degree(0.0);
    TruthValue all = TruthValue::degree(1.0);
    for (std::size_t j = 0; j < n; ++j) {
      const TruthValue x = value_of(after, detectors[j]);
      if (!is_bivalent(x)) {
        out.post_click_bivalent = false;
      } else if (x.value() == 1.0) {
        ++true_count;
      }
      any = disj(any, x, LogicSystem::Bivalent);
      all = conj(all, x, LogicSystem::Bivalent);
    }
    if (true_count != 1) out.post_click_bivalent = false;
    const TruthValue compound = conj(any, neg(all), LogicSystem::Bivalent);
    if (!(compound == TruthValue::degree(1.0))) out.xor_always_true = false;
  }
  return out;
}

WhichWayResult simulate_which_way(const ExperimentConfig& cfg, std::size_t trials, const Tolerance& tol) {
  SplitMix64 rng(cfg.seed);
  return simulate_which_way(cfg, trials, rng, tol);
}

SpectralIdentityReport verify_spectral_commutator_identity(const HermitianOperator& q, const HermitianOperator& r,
                                                           const Tolerance& tol) {
  if (q.dim() != r.dim()) fail(ErrorKind::DimensionMismatch, "observables act on different dimensions");
  const auto qs = spectral_decompose(q, tol);
  const auto rs = spectral_decompose(r, tol);
  ComplexMatrix lhs(q.dim(), q.dim());
  for (const auto& a : qs)
    for (const auto& b : rs)
      lhs += (a.eigenvalue * b.eigenvalue) * commutator(a.projector.matrix(), b.projector.matrix());
  const double residual = frobenius_norm(lhs - commutator(q.matrix(), r.matrix()));
  const double threshold = 1e2 * tol.proj * (1.0 + frobenius_norm(q.matrix()) * frobenius_norm(r.matrix()));
  return {residual, threshold, residual <= threshold};
}

std::string_view to_string(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::ClockShift: return "clock-shift";
    case OperatorFamily::Diagonal: return "diagonal";
  }
  return "unknown";
}

OperatorFamily operator_family_from_string(std::string_view name) {
  if (name == "clock-shift") return OperatorFamily::ClockShift;
  if (name == "diagonal") return OperatorFamily::Diagonal;
  fail(ErrorKind::InvalidArgument, "unknown operator family '" + std::string(name) + "'");
}

std::pair<HermitianOperator, HermitianOperator> operator_pair(OperatorFamily family, std::size_t dim) {
  if (dim < 2) fail(ErrorKind::InvalidArgument, "sweep dimensions must be at least 2");
  std::vector<double> angles(dim);
  for (std::size_t k = 0; k < dim; ++k) angles[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim);
  const ComplexMatrix q = ComplexMatrix::diagonal(angles);

  if (family == OperatorFamily::Diagonal) {
    std::reverse(angles.begin(), angles.end());
    return {HermitianOperator(q), HermitianOperator(ComplexMatrix::diagonal(angles))};
  }

  ComplexMatrix f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce j*k mod d first so the phase argument stays small and exact.
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      f(j, k) = std::polar(scale, phase);
    }
  ComplexMatrix r = f * q * f.adjoint();
  // Symmetrize away rounding so the result is Hermitian to machine precision.
  r = 0.5 * (r + r.adjoint());
  return {HermitianOperator(q), HermitianOperator(std::move(r))};
}

std::vector<SweepRow> commutator_sweep(OperatorFamily family, const std::vector<std::size_t>& dims,
                                       const Tolerance& tol) {
  std::vector<SweepRow> rows;
  for (std::size_t d : dims) {
    const auto [q, r] = operator_pair(family, d);
    const auto qs = spectral_decompose(q, tol);
    const auto rs = spectral_decompose(r, tol);
    double worst = 0.0;
    for (const auto& a : qs)
      for (const auto& b : rs)
        worst = std::max(worst, frobenius_norm(commutator(a.projector.matrix(), b.projector.matrix())));
    rows.push_back({d, worst, frobenius_norm(commutator(q.matrix(), r.matrix()))});
  }
  return rows;
}

}  // namespace qlogic
