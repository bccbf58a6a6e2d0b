#include "vcgroup/record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <tuple>

#include <json.hpp>

#include "vcgroup/error.hpp"

namespace vcgroup {

std::string to_string(Model m) {
  switch (m) {
    case Model::bernoulli: return "bernoulli";
    case Model::fixed_size: return "fixed-size";
    case Model::fixed_size_symmetric: return "fixed-size-symmetric";
    case Model::power_residue: return "power-residue";
  }
  return "unknown";
}

Model parse_model(const std::string& text) {
  for (Model m : {Model::bernoulli, Model::fixed_size, Model::fixed_size_symmetric,
                  Model::power_residue}) {
    if (to_string(m) == text) return m;
  }
  throw Error(Errc::parse, "unknown model '" + text + "'");
}

double r_of(double p) {
  const double q = std::min(p, 1.0 - p);
  return q <= 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / q;
}

void fill_derived_with_base(ExperimentRecord& rec, double base) {
  rec.r = base;
  rec.log_r_n = std::isinf(base) ? 0.0
                                 : std::log(static_cast<double>(rec.n)) / std::log(base);
  rec.band.reset();
  rec.in_band.reset();
  if (rec.log_r_n > 1.0) {
    rec.band = 10.0 * std::log(rec.log_r_n) / std::log(base);
    if (rec.vcdim) {
      rec.in_band = std::abs(static_cast<double>(*rec.vcdim) - rec.log_r_n) <= *rec.band;
    }
  }
}

void fill_derived(ExperimentRecord& rec) { fill_derived_with_base(rec, r_of(rec.p)); }

bool record_order(const ExperimentRecord& a, const ExperimentRecord& b) {
  return std::tie(a.group, a.n, a.p, a.model, a.trial) <
         std::tie(b.group, b.n, b.p, b.model, b.trial);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& text, const char* column) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::parse, std::string("bad value '") + text + "' in column " + column);
  }
  return v;
}

double parse_double(const std::string& text, const char* column) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  return parse_number<double>(text, column);
}

std::string vcdim_text(const ExperimentRecord& rec) {
  return rec.vcdim ? std::to_string(*rec.vcdim) : "error:" + rec.error;
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                       const std::vector<std::string>& comments) {
  for (const auto& line : comments) out << "# " << line << '\n';
  out << kRecordCsvHeader << '\n';
  for (const auto& rec : records) {
    out << to_string(rec.model) << ',' << rec.group << ',' << rec.n << ','
        << format_double(rec.p) << ',' << format_double(rec.r) << ',' << rec.seed << ','
        << rec.trial << ',' << vcdim_text(rec) << ',' << format_double(rec.log_r_n) << ','
        << (rec.band ? format_double(*rec.band) : "n/a") << ','
        << (rec.in_band ? (*rec.in_band ? "true" : "false") : "n/a") << '\n';
  }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.starts_with('#')) {
  }
  if (!in || line != kRecordCsvHeader) {
    throw Error(Errc::parse, "record CSV must start with the header '" +
                                 std::string(kRecordCsvHeader) + "'");
  }
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 11) {
      throw Error(Errc::parse, "record CSV row with " + std::to_string(f.size()) +
                                   " fields, expected 11");
    }
    ExperimentRecord rec;
    rec.model = parse_model(f[0]);
    rec.group = f[1];
    rec.n = parse_number<std::size_t>(f[2], "N");
    rec.p = parse_double(f[3], "p");
    rec.r = parse_double(f[4], "r");
    rec.seed = parse_number<std::uint64_t>(f[5], "seed");
    rec.trial = parse_number<std::size_t>(f[6], "trial");
    if (f[7].starts_with("error:")) {
      rec.error = f[7].substr(6);
    } else {
      rec.vcdim = parse_number<std::size_t>(f[7], "vcdim");
    }
    rec.log_r_n = parse_double(f[8], "log_r_N");
    if (f[9] != "n/a") rec.band = parse_double(f[9], "band");
    if (f[10] == "true") {
      rec.in_band = true;
    } else if (f[10] == "false") {
      rec.in_band = false;
    } else if (f[10] != "n/a") {
      throw Error(Errc::parse, "bad value '" + f[10] + "' in column in_band");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_records_json(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["model"] = to_string(rec.model);
    row["group"] = rec.group;
    row["N"] = rec.n;
    row["p"] = rec.p;
    row["r"] = std::isinf(rec.r) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(rec.r);
    row["seed"] = rec.seed;
    row["trial"] = rec.trial;
    row["vcdim"] = rec.vcdim ? nlohmann::ordered_json(*rec.vcdim)
                             : nlohmann::ordered_json(vcdim_text(rec));
    row["log_r_N"] = rec.log_r_n;
    row["band"] = rec.band ? nlohmann::ordered_json(*rec.band) : nlohmann::ordered_json();
    row["in_band"] =
        rec.in_band ? nlohmann::ordered_json(*rec.in_band) : nlohmann::ordered_json();
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

void write_records(const std::string& path, const std::string& format,
                   const std::vector<ExperimentRecord>& records,
                   const std::vector<std::string>& comments) {
  auto emit = [&](std::ostream& out) {
    if (format == "json") {
      write_records_json(out, records);
    } else {
      write_records_csv(out, records, comments);
    }
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot open " + path + " for writing");
  emit(out);
  out.flush();
  if (!out) throw Error(Errc::io, "write to " + path + " failed");
}

}  // namespace vcgroup
