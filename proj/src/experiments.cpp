#include "vcgroup/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "vcgroup/error.hpp"
#include "vcgroup/residues.hpp"
#include "vcgroup/sampling.hpp"
#include "vcgroup/set_system.hpp"
#include "vcgroup/tiling_cover.hpp"

namespace vcgroup {

namespace {

std::size_t floor_log2(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{2} << d) <= n) ++d;
  return d;
}

// Runs job(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any job is rethrown after all threads finish.
template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Subset sample_set(const FiniteGroup& g, Model model, double p, SeededRng& rng) {
  switch (model) {
    case Model::bernoulli:
      return bernoulli_subset(g, p, rng);
    case Model::fixed_size:
      return uniform_fixed_size(g, fixed_size_for(p, g.order()), rng);
    case Model::fixed_size_symmetric:
      return symmetrize(g, uniform_fixed_size(g, fixed_size_for(p, g.order()), rng));
    case Model::power_residue:
      break;
  }
  throw Error(Errc::precondition, "power-residue sets are not sampled");
}

}  // namespace

FiniteGroup make_family_group(const std::string& family, std::size_t n) {
  if (family == "C") return make_cyclic(n);
  if (family == "D") {
    if (n % 2 != 0) {
      throw Error(Errc::invalid_order, "dihedral family needs an even order, got " +
                                           std::to_string(n));
    }
    return make_dihedral(n / 2);
  }
  if (family == "C2xC") {
    if (n % 2 != 0 || n == 0) {
      throw Error(Errc::invalid_order, "C2xC family needs a positive even order, got " +
                                           std::to_string(n));
    }
    return make_direct_product(make_cyclic(2), make_cyclic(n / 2));
  }
  throw Error(Errc::parse, "unknown group family '" + family + "'");
}

std::size_t fixed_size_for(double p, std::size_t n) {
  return static_cast<std::size_t>(std::llround(p * static_cast<double>(n)));
}

std::vector<ExperimentRecord> run_lln(const std::string& family,
                                      const std::vector<std::size_t>& sizes, double p,
                                      std::size_t trials, std::uint64_t base_seed,
                                      Model model, const RunOptions& options) {
  if (trials == 0) throw Error(Errc::precondition, "at least one trial is required");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::domain, "p must lie in [0, 1], got " + format_double(p));
  }
  if (model == Model::power_residue) {
    throw Error(Errc::precondition, "use residue_experiment for power residues");
  }

  std::vector<FiniteGroup> groups;
  for (std::size_t n : sizes) groups.push_back(make_family_group(family, n));

  std::vector<ExperimentRecord> records(sizes.size() * trials);
  parallel_for(records.size(), options.workers, [&](std::size_t job) {
    const FiniteGroup& g = groups[job / trials];
    const std::size_t trial = job % trials;
    ExperimentRecord& rec = records[job];
    rec.model = model;
    rec.group = g.descriptor();
    rec.n = g.order();
    rec.p = p;
    rec.seed = base_seed;
    rec.trial = trial;
    SeededRng rng = SeededRng::for_trial(base_seed, g.order(), trial);
    const Subset a = sample_set(g, model, p, rng);
    try {
      rec.vcdim = vc_dim(TranslateFamily::left_translates(g, a), {options.node_limit});
    } catch (const Error& e) {
      if (e.code() != Errc::resource) throw;
      rec.error = std::string(to_string(e.code()));
    }
    fill_derived(rec);
  });
  std::stable_sort(records.begin(), records.end(), record_order);
  return records;
}

std::vector<Summary> summarize(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw Error(Errc::precondition, "nothing to summarize");
  std::vector<ExperimentRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(), record_order);

  std::vector<Summary> out;
  auto same_group = [](const ExperimentRecord& a, const Summary& s) {
    return a.group == s.group && a.n == s.n && a.p == s.p && a.model == s.model;
  };
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    Summary s;
    s.group = sorted[begin].group;
    s.n = sorted[begin].n;
    s.p = sorted[begin].p;
    s.model = sorted[begin].model;
    s.histogram.assign(floor_log2(s.n) + 1, 0);
    std::size_t end = begin;
    while (end < sorted.size() && same_group(sorted[end], s)) ++end;

    std::size_t ok = 0;
    std::size_t ratio_count = 0;
    std::size_t banded = 0;
    std::size_t in_band = 0;
    double sum = 0.0;
    double ratio_sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const ExperimentRecord& rec = sorted[i];
      ++s.trials;
      if (rec.band) ++banded;
      if (rec.in_band && *rec.in_band) ++in_band;
      if (!rec.vcdim) {
        ++s.errors;
        continue;
      }
      const std::size_t v = *rec.vcdim;
      if (v >= s.histogram.size()) s.histogram.resize(v + 1, 0);
      ++s.histogram[v];
      s.min = ok == 0 ? v : std::min(s.min, v);
      s.max = ok == 0 ? v : std::max(s.max, v);
      ++ok;
      sum += static_cast<double>(v);
      if (rec.log_r_n > 0.0) {
        ratio_sum += static_cast<double>(v) / rec.log_r_n;
        ++ratio_count;
      }
    }
    if (ok > 0) {
      s.mean = sum / static_cast<double>(ok);
      double sq = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        if (!sorted[i].vcdim) continue;
        const double d = static_cast<double>(*sorted[i].vcdim) - s.mean;
        sq += d * d;
      }
      s.sd = std::sqrt(sq / static_cast<double>(ok));
    }
    if (ratio_count > 0) s.mean_ratio = ratio_sum / static_cast<double>(ratio_count);
    if (banded > 0) {
      s.fraction_in_band = static_cast<double>(in_band) / static_cast<double>(s.trials);
    }
    out.push_back(std::move(s));
    begin = end;
  }
  return out;
}

void write_summaries_csv(std::ostream& out, const std::vector<Summary>& summaries) {
  out << "# sd is the population standard deviation over successful trials\n";
  out << "model,group,N,p,trials,errors,mean,sd,mean_ratio,fraction_in_band,min,max,"
         "histogram\n";
  for (const Summary& s : summaries) {
    out << to_string(s.model) << ',' << s.group << ',' << s.n << ',' << format_double(s.p)
        << ',' << s.trials << ',' << s.errors << ',' << format_double(s.mean) << ','
        << format_double(s.sd) << ','
        << (s.mean_ratio ? format_double(*s.mean_ratio) : "n/a") << ','
        << (s.fraction_in_band ? format_double(*s.fraction_in_band) : "n/a") << ','
        << s.min << ',' << s.max << ',';
    for (std::size_t v = 0; v < s.histogram.size(); ++v) {
      out << (v ? ";" : "") << s.histogram[v];
    }
    out << '\n';
  }
}

CutoutEstimate cutout_probability(const FiniteGroup& g, const Subset& u, const Subset& k,
                                  double p, std::size_t trials, std::uint64_t base_seed) {
  const std::size_t n = g.order();
  if (u.universe() != n || k.universe() != n) {
    throw Error(Errc::dimension, "subsets must be sized for " + g.descriptor());
  }
  if (!k.is_subset_of(u)) throw Error(Errc::precondition, "K must be a subset of U");
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Errc::domain, "p must lie in (0, 1), got " + format_double(p));
  }
  if (trials == 0) throw Error(Errc::precondition, "at least one trial is required");

  CutoutEstimate est;
  est.trials = trials;
  const std::vector<Element> probe = u.elements();
  std::vector<Element> inverses(n);
  for (Element t = 0; t < n; ++t) inverses[t] = g.inv(t);

  for (std::size_t i = 0; i < trials; ++i) {
    SeededRng rng = SeededRng::for_trial(base_seed, n, i);
    const Subset a = bernoulli_subset(g, p, rng);
    // tA ∩ U = K iff, for every x in U, t^-1 x lies in A exactly when x is in K.
    bool cut = false;
    for (Element t = 0; t < n && !cut; ++t) {
      cut = std::all_of(probe.begin(), probe.end(), [&](Element x) {
        return a.contains(g.mul(inverses[t], x)) == k.contains(x);
      });
    }
    if (!cut) ++est.not_cut_out;
  }
  est.empirical = static_cast<double>(est.not_cut_out) / static_cast<double>(trials);

  const std::size_t size_u = u.count();
  const std::size_t size_k = k.count();
  est.ell = u.empty() ? n : greedy_disjoint_translates(g, u).size();
  const double hit = std::pow(p, static_cast<double>(size_k)) *
                     std::pow(1.0 - p, static_cast<double>(size_u - size_k));
  est.bound = std::pow(1.0 - hit, static_cast<double>(est.ell));
  const double q = std::max(est.empirical, est.bound);
  est.std_error = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
  est.consistent = est.empirical <= est.bound + 5.0 * est.std_error;
  return est;
}

std::vector<ExperimentRecord> residue_experiment(const std::vector<std::uint64_t>& primes,
                                                 std::uint64_t r, bool require_congruence,
                                                 const ResidueOptions& options) {
  if (r < 2) throw Error(Errc::precondition, "residue exponent must be at least 2");
  std::vector<std::uint64_t> order = primes;
  std::stable_sort(order.begin(), order.end());

  std::vector<ExperimentRecord> records(order.size());
  parallel_for(order.size(), options.workers, [&](std::size_t i) {
    const std::uint64_t n = order[i];
    ExperimentRecord& rec = records[i];
    rec.model = Model::power_residue;
    rec.group = "C" + std::to_string(n);
    rec.n = n;
    rec.p = 1.0 / static_cast<double>(r);
    try {
      if (!is_prime(n)) throw Error(Errc::precondition, std::to_string(n) + " is not prime");
      if (n > options.max_prime) {
        throw Error(Errc::capacity, std::to_string(n) + " exceeds the prime cap " +
                                        std::to_string(options.max_prime));
      }
      if (require_congruence && (n - 1) % r != 0) {
        throw Error(Errc::precondition,
                    std::to_string(n) + " is not 1 mod " + std::to_string(r));
      }
      const ResidueSet res = power_residues(n, r);
      rec.vcdim = vc_dim(TranslateFamily::left_translates(make_cyclic(n), res.members),
                         {options.node_limit});
    } catch (const Error& e) {
      rec.error = std::string(to_string(e.code()));
    }
    fill_derived_with_base(rec, static_cast<double>(r));
  });
  return records;
}

}  // namespace vcgroup
