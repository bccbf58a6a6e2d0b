#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcgroup/cayley.hpp"
#include "vcgroup/error.hpp"
#include "vcgroup/experiments.hpp"
#include "vcgroup/residues.hpp"
#include "vcgroup/sampling.hpp"
#include "vcgroup/set_system.hpp"
#include "vcgroup/tiling_cover.hpp"

namespace vcgroup::cli {

namespace {

constexpr const char* kDefaultsNote = "defaults: seed=0 trials=100 format=csv";

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "Base seed of the random streams")
      ->capture_default_str();
  sub->add_option("--trials", cfg.trials, "Number of trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
  sub->add_option("--format", cfg.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_search_limits(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--node-limit", cfg.node_limit,
                  "Search nodes allowed per VC computation (0 = unlimited)")
      ->capture_default_str();
  sub->add_option("--workers", cfg.workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));
}

void require_open_unit(const std::optional<double>& p) {
  if (p && !(*p > 0.0 && *p < 1.0)) {
    throw CLI::ValidationError("--p", "must lie strictly between 0 and 1, got " +
                                          format_double(*p));
  }
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::parse, "'" + text + "' is not a non-negative integer");
  }
  return v;
}

// Writes to --out when given, to `fallback` otherwise.
void emit(const CliConfig& cfg, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty() || cfg.out == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(Errc::io, "cannot open " + cfg.out + " for writing");
  body(file);
  file.flush();
  if (!file) throw Error(Errc::io, "write to " + cfg.out + " failed");
}

FiniteGroup load_group(const CliConfig& cfg) {
  if (!cfg.table.empty()) return read_cayley_table_file(cfg.table);
  return make_group(cfg.group);
}

std::string join(const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? " " : "") + std::to_string(xs[i]);
  }
  return s;
}

int run_vcdim(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = load_group(cfg);
  Subset a(g.order());
  if (cfg.p) {
    SeededRng rng = SeededRng::for_trial(cfg.seed, g.order(), 0);
    a = bernoulli_subset(g, *cfg.p, rng);
  } else {
    a = Subset::from_hex(g.order(), cfg.set_hex);
  }

  const VcOptions options{cfg.node_limit};
  TranslateFamily family = TranslateFamily::left_translates(g, a);
  if (cfg.family == "sisask") {
    family = sisask_family(g, a);
  } else if (cfg.family == "sum") {
    family = neighborhood_family(cayley_sum_graph(g, a));
  } else if (cfg.family == "closed") {
    family = closed_neighborhood_family(cayley_digraph(g, a));
  }
  const VcResult result = vc_search(family, options);

  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["group"] = g.descriptor();
      j["set"] = a.to_hex();
      j["family"] = cfg.family;
      j["vcdim"] = result.dimension;
      j["witness"] = result.witness;
      os << j.dump(2) << '\n';
    } else {
      os << result.dimension << '\n';
    }
  });
  return 0;
}

int run_sample(const CliConfig& cfg, std::ostream& out) {
  const Model model = parse_model(cfg.model);
  const auto records = run_lln(cfg.group, cfg.sizes, *cfg.p, cfg.trials, cfg.seed, model,
                               {cfg.node_limit, cfg.workers});
  std::string sizes;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    sizes += (i ? "," : "") + std::to_string(cfg.sizes[i]);
  }
  const std::vector<std::string> comments = {
      "sample group=" + cfg.group + " sizes=" + sizes + " p=" + format_double(*cfg.p) +
          " model=" + cfg.model + " trials=" + std::to_string(cfg.trials) +
          " seed=" + std::to_string(cfg.seed),
      kDefaultsNote};
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      write_records_json(os, records);
    } else {
      write_records_csv(os, records, comments);
    }
  });
  if (!cfg.summary.empty()) {
    std::ofstream file(cfg.summary, std::ios::binary);
    if (!file) throw Error(Errc::io, "cannot open " + cfg.summary + " for writing");
    write_summaries_csv(file, summarize(records));
  }
  for (const auto& rec : records) {
    if (rec.failed()) return 1;
  }
  return 0;
}

int run_cutout(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = load_group(cfg);
  const Subset u = Subset::from_hex(g.order(), cfg.u_hex);
  const Subset k = Subset::from_hex(g.order(), cfg.k_hex);
  const CutoutEstimate est = cutout_probability(g, u, k, *cfg.p, cfg.trials, cfg.seed);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["group"] = g.descriptor();
      j["u"] = u.to_hex();
      j["k"] = k.to_hex();
      j["p"] = *cfg.p;
      j["seed"] = cfg.seed;
      j["trials"] = est.trials;
      j["not_cut_out"] = est.not_cut_out;
      j["empirical"] = est.empirical;
      j["std_error"] = est.std_error;
      j["ell"] = est.ell;
      j["bound"] = est.bound;
      j["consistent"] = est.consistent;
      os << j.dump(2) << '\n';
    } else {
      os << "group,u,k,p,seed,trials,not_cut_out,empirical,std_error,ell,bound,consistent\n"
         << g.descriptor() << ',' << u.to_hex() << ',' << k.to_hex() << ','
         << format_double(*cfg.p) << ',' << cfg.seed << ',' << est.trials << ','
         << est.not_cut_out << ',' << format_double(est.empirical) << ','
         << format_double(est.std_error) << ',' << est.ell << ','
         << format_double(est.bound) << ',' << (est.consistent ? "true" : "false") << '\n';
    }
  });
  return 0;
}

int run_paley(const CliConfig& cfg, std::ostream& out) {
  const Digraph d = paley_digraph(cfg.n);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.print_vcdim) {
      os << vc_dim(neighborhood_family(d), {cfg.node_limit}) << '\n';
    } else {
      write_adjacency(os, d);
    }
  });
  return 0;
}

int run_residue(const CliConfig& cfg, std::ostream& out) {
  const auto records = residue_experiment(cfg.primes, cfg.r, cfg.congruent,
                                          {cfg.max_prime, cfg.node_limit, cfg.workers});
  const std::vector<std::string> comments = {
      "residue r=" + std::to_string(cfg.r) +
          " congruent=" + (cfg.congruent ? "true" : "false") +
          " max_prime=" + std::to_string(cfg.max_prime),
      kDefaultsNote};
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      write_records_json(os, records);
    } else {
      write_records_csv(os, records, comments);
    }
  });
  for (const auto& rec : records) {
    if (rec.failed()) return 1;
  }
  return 0;
}

int run_tile(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = load_group(cfg);
  const Packing packing = greedy_disjoint_translates(g, Subset::from_hex(g.order(), cfg.u_hex));
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["group"] = g.descriptor();
      j["u"] = packing.probe.to_hex();
      j["reps"] = packing.reps;
      j["ell"] = packing.size();
      j["bound"] = packing.guaranteed_size(g.order());
      os << j.dump(2) << '\n';
    } else {
      os << "reps: " << join(packing.reps) << '\n'
         << "ell: " << packing.size() << '\n'
         << "bound: " << format_double(packing.guaranteed_size(g.order())) << '\n';
    }
  });
  return 0;
}

int run_cover(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = load_group(cfg);
  const Subset s = Subset::from_hex(g.order(), cfg.set_hex);
  Cover cover;
  double bound = 0.0;
  if (cfg.shortcut) {
    cover = abelian_cover_shortcut(g, s);
    bound = static_cast<double>(s.count() * s.count());
  } else {
    cover = greedy_cover(g, s);
    bound = cover.guaranteed_size(g.order());
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["group"] = g.descriptor();
      j["base"] = cover.base.to_hex();
      j["reps"] = cover.reps;
      j["m"] = cover.size();
      j["bound"] = bound;
      os << j.dump(2) << '\n';
    } else {
      os << "base: " << cover.base.to_hex() << '\n'
         << "reps: " << join(cover.reps) << '\n'
         << "m: " << cover.size() << '\n'
         << "bound: " << format_double(bound) << '\n';
    }
  });
  return 0;
}

}  // namespace

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dash = text.find('-');
  if (dash != std::string::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dash));
    const std::uint64_t hi = parse_u64(text.substr(dash + 1));
    if (lo > hi) throw Error(Errc::parse, "empty prime range " + text);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_prime(n)) out.push_back(n);
    }
    return out;
  }
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_u64(item));
  if (out.empty()) throw Error(Errc::parse, "no primes given");
  return out;
}

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out,
                        std::ostream& err) {
  CliConfig cfg;
  std::string primes_text;
  CLI::App app{"Exact VC-dimension of translate families over finite groups", "vcgroup"};
  app.require_subcommand(1, 1);

  auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of one family");
  add_common(vcdim, cfg);
  auto* vg = vcdim->add_option("--group", cfg.group, "Group descriptor, e.g. C12, D5, C3xC4");
  vcdim->add_option("--table", cfg.table, "Cayley table file instead of --group")
      ->excludes(vg);
  auto* vset = vcdim->add_option("--set", cfg.set_hex, "Set A as a hex bit-string, bit 0 = element 0");
  vcdim->add_option("--p", cfg.p, "Sample A with inclusion probability p instead of --set")
      ->excludes(vset);
  vcdim->add_option("--family", cfg.family, "Family built from A")
      ->capture_default_str()
      ->check(CLI::IsMember({"translates", "sisask", "sum", "closed"}));
  add_search_limits(vcdim, cfg);

  auto* sample = app.add_subcommand("sample", "Monte Carlo VC-dimension of random sets");
  add_common(sample, cfg);
  sample->add_option("--group", cfg.group, "Group family")
      ->required()
      ->check(CLI::IsMember({"C", "D", "C2xC"}));
  sample->add_option("--sizes", cfg.sizes, "Group orders, comma separated")
      ->required()
      ->delimiter(',');
  sample->add_option("--p", cfg.p, "Inclusion probability in (0,1)")->required();
  sample->add_option("--model", cfg.model, "Random set model")
      ->capture_default_str()
      ->check(CLI::IsMember({"bernoulli", "fixed-size", "fixed-size-symmetric"}));
  sample->add_option("--summary", cfg.summary, "Also write per-size summary CSV here");
  add_search_limits(sample, cfg);

  auto* cutout = app.add_subcommand("cutout", "Probability that K is not cut out of U");
  add_common(cutout, cfg);
  auto* cg = cutout->add_option("--group", cfg.group, "Group descriptor");
  cutout->add_option("--table", cfg.table, "Cayley table file instead of --group")->excludes(cg);
  cutout->add_option("--u", cfg.u_hex, "U as a hex bit-string")->required();
  cutout->add_option("--k", cfg.k_hex, "K, a subset of U, as a hex bit-string")->required();
  cutout->add_option("--p", cfg.p, "Inclusion probability in (0,1)")->required();

  auto* paley = app.add_subcommand("paley", "Paley digraph of a prime");
  add_common(paley, cfg);
  paley->add_option("--n", cfg.n, "Prime modulus")->required();
  paley->add_flag("--vcdim", cfg.print_vcdim,
                  "Print the VC-dimension of the neighbourhood family instead");
  add_search_limits(paley, cfg);

  auto* residue = app.add_subcommand("residue", "VC-dimension of power-residue Cayley digraphs");
  add_common(residue, cfg);
  residue->add_option("--r", cfg.r, "Residue exponent, at least 2")
      ->required()
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  residue->add_option("--primes", primes_text, "Primes as a list 5,13 or a range 5-101")
      ->required();
  residue->add_flag("--congruent", cfg.congruent, "Require N = 1 mod r");
  residue->add_option("--max-prime", cfg.max_prime, "Largest prime computed exactly")
      ->capture_default_str();
  add_search_limits(residue, cfg);

  auto* tile = app.add_subcommand("tile", "Greedy packing of disjoint translates of U");
  add_common(tile, cfg);
  auto* tg = tile->add_option("--group", cfg.group, "Group descriptor");
  tile->add_option("--table", cfg.table, "Cayley table file instead of --group")->excludes(tg);
  tile->add_option("--u", cfg.u_hex, "U as a hex bit-string")->required();

  auto* cover = app.add_subcommand("cover", "Greedy cover of the group by translates S t");
  add_common(cover, cfg);
  auto* og = cover->add_option("--group", cfg.group, "Group descriptor");
  cover->add_option("--table", cfg.table, "Cayley table file instead of --group")->excludes(og);
  cover->add_option("--set", cfg.set_hex, "S as a hex bit-string")->required();
  cover->add_flag("--shortcut", cfg.shortcut,
                  "Abelian groups: treat --set as U and cover with T = (U U^-1)^-1");

  try {
    app.parse(argc, argv);
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    const bool has_group = !cfg.group.empty() || !cfg.table.empty();
    if (cfg.command != "sample" && cfg.command != "paley" && cfg.command != "residue" &&
        !has_group) {
      throw CLI::RequiredError("--group or --table");
    }
    if (cfg.command == "vcdim" && cfg.set_hex.empty() && !cfg.p) {
      throw CLI::RequiredError("--set or --p");
    }
    require_open_unit(cfg.p);
    if (cfg.command == "sample" && cfg.sizes.empty()) throw CLI::RequiredError("--sizes");
    if (cfg.command == "residue") {
      try {
        cfg.primes = parse_primes(primes_text);
      } catch (const Error& e) {
        throw CLI::ValidationError("--primes", e.what());
      }
    }
  } catch (const CLI::ParseError& e) {
    ParseOutcome outcome;
    outcome.exit_code = app.exit(e, out, err);
    return outcome;
  }
  return {cfg, 0};
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "vcdim") return run_vcdim(cfg, out);
    if (cfg.command == "sample") return run_sample(cfg, out);
    if (cfg.command == "cutout") return run_cutout(cfg, out);
    if (cfg.command == "paley") return run_paley(cfg, out);
    if (cfg.command == "residue") return run_residue(cfg, out);
    if (cfg.command == "tile") return run_tile(cfg, out);
    if (cfg.command == "cover") return run_cover(cfg, out);
    err << "error: unknown command " << cfg.command << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace vcgroup::cli
