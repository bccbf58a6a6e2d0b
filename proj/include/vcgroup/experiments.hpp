#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcgroup/group.hpp"
#include "vcgroup/record.hpp"
#include "vcgroup/subset.hpp"

namespace vcgroup {

struct RunOptions {
  std::uint64_t node_limit = 0;  // per trial, see VcOptions
  unsigned workers = 1;
};

/// Group of order n from a family name: "C" (cyclic), "D" (dihedral of
/// order n, so n even and n >= 6) or "C2xC" (C2 x C_{n/2}).
FiniteGroup make_family_group(const std::string& family, std::size_t n);

/// Size of the fixed-size models' sample: round(p * n).
std::size_t fixed_size_for(double p, std::size_t n);

/// One record per (N, trial). Trial i at size N draws from
/// SeededRng::for_trial(base_seed, N, i); a trial that exceeds the node
/// limit becomes an error record. Output is sorted by record_order.
std::vector<ExperimentRecord> run_lln(const std::string& family,
                                      const std::vector<std::size_t>& sizes, double p,
                                      std::size_t trials, std::uint64_t base_seed,
                                      Model model, const RunOptions& options = {});

struct Summary {
  std::string group;
  std::size_t n = 0;
  double p = 0.0;
  Model model = Model::bernoulli;
  std::size_t trials = 0;  // records in the group, failed ones included
  std::size_t errors = 0;
  double mean = 0.0;  // over successful trials
  double sd = 0.0;    // population convention
  std::optional<double> mean_ratio;        // mean of vcdim / log_r N
  std::optional<double> fraction_in_band;  // in_band count / trials
  std::size_t min = 0;
  std::size_t max = 0;
  std::vector<std::size_t> histogram;  // index v counts vcdim == v, v <= floor(log2 N)
};

/// Aggregates per (group, N, p, model), in record_order.
std::vector<Summary> summarize(const std::vector<ExperimentRecord>& records);

void write_summaries_csv(std::ostream& out, const std::vector<Summary>& summaries);

struct CutoutEstimate {
  std::size_t trials = 0;
  std::size_t not_cut_out = 0;
  double empirical = 0.0;
  double std_error = 0.0;  // binomial, at the larger of empirical and bound
  std::size_t ell = 0;     // size of the greedy packing of u
  double bound = 0.0;      // (1 - p^|K| (1-p)^(|U|-|K|))^ell
  bool consistent = false; // empirical <= bound + 5 std_error
};

/// Monte Carlo estimate of Pr[K is not cut out of U by the translates of A]
/// for A Bernoulli(p), next to the bound from the disjoint subfamily.
CutoutEstimate cutout_probability(const FiniteGroup& g, const Subset& u, const Subset& k,
                                  double p, std::size_t trials, std::uint64_t base_seed);

struct ResidueOptions {
  std::uint64_t max_prime = 1009;
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
};

/// VC-dimension of the r-th power residue Cayley digraph on Z/NZ for each N,
/// normalised against log_r N. Composite N, N above the cap, or (with
/// require_congruence) N != 1 mod r give an error record. Sorted by N.
std::vector<ExperimentRecord> residue_experiment(const std::vector<std::uint64_t>& primes,
                                                 std::uint64_t r, bool require_congruence,
                                                 const ResidueOptions& options = {});

}  // namespace vcgroup
