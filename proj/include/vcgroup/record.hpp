#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vcgroup {

enum class Model { bernoulli, fixed_size, fixed_size_symmetric, power_residue };

std::string to_string(Model m);
Model parse_model(const std::string& text);

/// One computed VC-dimension, self-describing enough to be re-run.
///
/// For sampled models r = 1/min(p, 1-p); for power-residue rows p = 1/r and r
/// is the base the row is normalised against (2 for quadratic residues, the
/// exponent otherwise). band and in_band are absent when log_r N <= 1.
struct ExperimentRecord {
  Model model = Model::bernoulli;
  std::string group;
  std::size_t n = 0;
  double p = 0.0;
  double r = 0.0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::optional<std::size_t> vcdim;  // empty for failed trials
  std::string error;                 // failure code when vcdim is empty
  double log_r_n = 0.0;
  std::optional<double> band;
  std::optional<bool> in_band;

  bool failed() const { return !vcdim.has_value(); }
  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// 1 / min(p, 1-p); infinite at p = 0 or 1.
double r_of(double p);

/// Fills r, log_r_n, band and in_band from model, n, p and vcdim.
void fill_derived(ExperimentRecord& rec);

/// Fills the same fields for a row normalised against an explicit base.
void fill_derived_with_base(ExperimentRecord& rec, double base);

/// Sort key (group, N, p, model, trial).
bool record_order(const ExperimentRecord& a, const ExperimentRecord& b);

inline constexpr const char* kRecordCsvHeader =
    "model,group,N,p,r,seed,trial,vcdim,log_r_N,band,in_band";

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// Header row, then one row per record. Each comment line is written first
/// as "# <line>"; the reader skips such lines ahead of the header.
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                       const std::vector<std::string>& comments = {});
std::vector<ExperimentRecord> read_records_csv(std::istream& in);
void write_records_json(std::ostream& out, const std::vector<ExperimentRecord>& records);

/// Writes CSV or JSON to path, or to stdout for "" and "-". Comments are
/// dropped for JSON.
void write_records(const std::string& path, const std::string& format,
                   const std::vector<ExperimentRecord>& records,
                   const std::vector<std::string>& comments = {});

}  // namespace vcgroup
