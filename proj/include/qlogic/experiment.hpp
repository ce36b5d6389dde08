#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/numeric.hpp"
#include "qlogic/rng.hpp"

namespace qlogic {

inline constexpr std::uint64_t kDefaultSeed = 20190101;

struct Region {
  std::string name;
  std::vector<std::size_t> cells;
};

/// N-path interference setup: path amplitudes c_i and per-path screen
/// wavefunctions phi_i over M discrete cells.
struct ExperimentConfig {
  std::vector<Complex> amplitudes;
  std::size_t screen_cells = 0;
  std::vector<ComplexVector> path_wavefunctions;
  std::vector<Region> regions;
  std::uint64_t seed = kDefaultSeed;

  std::size_t n_paths() const noexcept { return amplitudes.size(); }

  /// Throws ConfigInvalid naming the first offending field.
  void validate(const Tolerance& tol = {}) const;
};

/// Reads the "experiment" object of a scenario document.
ExperimentConfig parse_experiment(std::string_view json_text);

/// sum_i c_i |i> (x) |phi_i>, path index slow.
StateVector build_state(const ExperimentConfig& cfg, const Tolerance& tol = {});

/// |phi_i(cell)|^2.
std::vector<double> conditional_pattern(const ExperimentConfig& cfg, std::size_t path, const Tolerance& tol = {});

struct RegionProbabilities {
  std::string name;
  double coherent;
  double mixture;
  std::vector<double> conditional;  // P[R | X_i] per path
};

struct PatternReport {
  std::vector<double> coherent;
  std::vector<double> mixture;
  std::vector<double> interference_term;
  std::vector<RegionProbabilities> regions;
};

PatternReport run_patterns(const ExperimentConfig& cfg, const Tolerance& tol = {});

/// 2 Re sum_{i<j} c_i conj(c_j) phi_i(cell) conj(phi_j(cell)), evaluated
/// directly from the cross terms.
std::vector<double> interference_cross_terms(const ExperimentConfig& cfg);

struct WhichWayResult {
  std::size_t trials;
  std::vector<std::size_t> clicks;
  bool xor_always_true;
  bool post_click_bivalent;
};

/// Samples a path with probability |c_i|^2, collapses the composite state
/// with P_i (x) I, then values every detector proposition X_j under the
/// eigenstate-bivalent policy.
WhichWayResult simulate_which_way(const ExperimentConfig& cfg, std::size_t trials, SplitMix64& rng,
                                  const Tolerance& tol = {});
WhichWayResult simulate_which_way(const ExperimentConfig& cfg, std::size_t trials, const Tolerance& tol = {});

struct SpectralIdentityReport {
  double residual;
  double threshold;
  bool holds;
};

/// Compares sum_{a,b} q_a r_b [P_qa, P_rb] with [q, r].
SpectralIdentityReport verify_spectral_commutator_identity(const HermitianOperator& q, const HermitianOperator& r,
                                                           const Tolerance& tol = {});

enum class OperatorFamily { ClockShift, Diagonal };

std::string_view to_string(OperatorFamily f);
OperatorFamily operator_family_from_string(std::string_view name);

struct SweepRow {
  std::size_t dim;
  double max_projector_commutator_norm;
  double operator_commutator_norm;
};

/// Clock-shift family: q = diag(2 pi k / d) (phases of the clock operator
/// read as real angles) and r = F q F^dagger with F the unitary DFT, the
/// Hermitian counterpart of the shift operator. Diagonal family: r is the
/// diagonal of q reversed, so the pair commutes.
std::pair<HermitianOperator, HermitianOperator> operator_pair(OperatorFamily family, std::size_t dim);

std::vector<SweepRow> commutator_sweep(OperatorFamily family, const std::vector<std::size_t>& dims,
                                       const Tolerance& tol = {});

}  // namespace qlogic
