#include "pareto_smooth/cli/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pareto_smooth/experiments/bounds.hpp"
#include "pareto_smooth/experiments/campaigns.hpp"
#include "pareto_smooth/experiments/report.hpp"
#include "pareto_smooth/io/json_io.hpp"
#include "pareto_smooth/pareto/nemhauser_ullmann.hpp"
#include "pareto_smooth/pareto/pareto.hpp"
#include "pareto_smooth/sampling/rng.hpp"
#include "pareto_smooth/transcript/recon.hpp"
#include "pareto_smooth/transcript/trans.hpp"

namespace pareto_smooth::cli {

namespace {

struct Options {
  std::string out_path;
  std::vector<std::string> formats;

  // generator
  std::string family;
  std::string distribution;
  std::vector<std::size_t> n;
  std::vector<std::size_t> d;
  std::size_t m = 0;
  double phi = 1.0;
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;
  std::optional<int> epsilon_exp;
  std::optional<int> fixed_exp;
  double center = 0.0;
  bool center_set = false;
  bool random_centers = false;

  // file inputs
  std::string instance_path;
  std::string transcript_path;
  std::string split_path;
  std::string items_path;
  std::string emit_split;

  std::optional<std::size_t> solution;
  std::string bits;
  bool oracle = false;

  std::string campaign;
  std::optional<std::size_t> trials;
  double checker_gap = 1.0;
  std::int64_t box_offset = 0;
};

class Output {
 public:
  Output(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  // Writes the machine-readable result; `suffix` distinguishes multiple formats sharing one --out prefix.
  void result(const std::string& text, const std::string& suffix = "") {
    if (opt_.out_path.empty()) {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return;
    }
    write_text_file(opt_.out_path + suffix, text);
  }

  std::ostream& summary() { return opt_.out_path.empty() ? err_ : out_; }
  std::ostream& console() { return out_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

std::size_t first_or(const std::vector<std::size_t>& v, std::size_t fallback) { return v.empty() ? fallback : v.front(); }

GeneratorSpec spec_from(const Options& opt, Family default_family, std::size_t default_n, std::size_t default_d) {
  GeneratorSpec spec;
  spec.family = opt.family.empty() ? default_family : family_from_string(opt.family);
  spec.n = first_or(opt.n, default_n);
  spec.d = first_or(opt.d, default_d);
  spec.m = opt.m;
  spec.phi = opt.phi;
  if (!opt.distribution.empty()) spec.distribution = distribution_kind_from_string(opt.distribution);
  spec.seed = opt.seed;
  if (opt.epsilon_exp) spec.epsilon_exponent = *opt.epsilon_exp;
  spec.frac_bits = opt.fixed_exp ? *opt.fixed_exp : std::max(kDefaultFracBits, spec.epsilon_exponent + kMinGridMargin);
  spec.center = opt.center;
  spec.random_centers = opt.random_centers;
  return spec;
}

Instance load_instance(const Options& opt) { return instance_from_json(read_json_file(opt.instance_path)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_generate(const Options& opt, Output& io) {
  GeneratorSpec spec = spec_from(opt, Family::all_vectors, 6, 2);
  if (spec.family == Family::random_subset && spec.m == 0) spec.m = std::min<std::size_t>(std::size_t{1} << std::min<std::size_t>(spec.n, 20), 64);
  validate(spec);
  const Instance inst = generate_instance(spec, opt.trial);
  io.result(dump(instance_to_json(inst)));
  io.summary() << "generated " << to_string(spec.family) << " instance: n=" << inst.n() << " d=" << inst.d()
               << " |S|=" << inst.solutions().size() << " F=" << inst.format().frac_bits
               << " epsilon=2^-" << inst.epsilon().exponent << "\n";
  return kExitOk;
}

int cmd_pareto(const Options& opt, Output& io) {
  const Instance inst = load_instance(opt);
  const ParetoResult result = pareto_sweep(inst);
  io.result(dump(pareto_result_to_json(result, inst.format())));
  io.summary() << "|PO| = " << result.optima.size() << " of |S| = " << inst.solutions().size() << "\n";
  if (!opt.oracle) return kExitOk;
  const ParetoResult brute = brute_force_pareto(inst);
  const bool match = brute.optima == result.optima;
  io.summary() << (match ? "MATCH" : "MISMATCH") << " (sweep vs brute force)\n";
  return match ? kExitOk : kExitVerdictFailed;
}

KnapsackItems random_items(const Options& opt) {
  const std::size_t n = first_or(opt.n, 12);
  const FixedFormat fmt{opt.fixed_exp.value_or(kDefaultFracBits)};
  const SeededRng rng(opt.seed);
  SplitMix64 gen = rng.stream(opt.trial, 0);
  KnapsackItems items{fmt, {}, {}};
  const std::uint64_t one = static_cast<std::uint64_t>(fmt.one().raw);
  for (std::size_t i = 0; i < n; ++i) {
    items.profits.push_back({static_cast<std::int64_t>(uniform_below(gen, one))});
    items.weights.push_back({static_cast<std::int64_t>(uniform_below(gen, one))});
  }
  return items;
}

std::vector<FixedKnapsackPoint> brute_force_knapsack(const KnapsackItems& items) {
  const std::size_t n = items.profits.size();
  std::vector<FixedKnapsackPoint> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FixedKnapsackPoint p;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        p.profit += items.profits[i];
        p.weight += items.weights[i];
      }
    all.push_back(p);
  }
  std::vector<FixedKnapsackPoint> front;
  for (const auto& p : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const FixedKnapsackPoint& q) {
      return q.profit >= p.profit && q.weight <= p.weight && (q.profit > p.profit || q.weight < p.weight);
    });
    if (!dominated && std::find(front.begin(), front.end(), p) == front.end()) front.push_back(p);
  }
  std::sort(front.begin(), front.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return front;
}

int cmd_knapsack(const Options& opt, Output& io) {
  const KnapsackItems items = opt.items_path.empty() ? random_items(opt) : knapsack_items_from_json(read_json_file(opt.items_path));
  const auto lists = nemhauser_ullmann(items.profits, items.weights);
  Json j = knapsack_lists_to_json(lists, items.format);
  j["items"] = knapsack_items_to_json(items);
  io.result(dump(j));
  io.summary() << "items = " << items.profits.size() << ", final Pareto list size = " << lists.back().size() << "\n";
  if (!opt.oracle) return kExitOk;
  if (items.profits.size() > 20) throw InputError("--oracle: brute force limited to 20 items");
  const bool match = brute_force_knapsack(items) == lists.back();
  io.summary() << (match ? "MATCH" : "MISMATCH") << " (Nemhauser-Ullmann vs brute force)\n";
  return match ? kExitOk : kExitVerdictFailed;
}

int cmd_transcript(const Options& opt, Output& io) {
  const Instance inst = load_instance(opt);
  Solution x(inst.n());
  if (!opt.bits.empty()) {
    x = Solution::from_string(opt.bits);
    if (x.size() != inst.n()) throw InputError("--bits: length " + std::to_string(x.size()) + ", expected " + std::to_string(inst.n()));
  } else if (opt.solution) {
    if (*opt.solution >= inst.solutions().size())
      throw InputError("--solution: index " + std::to_string(*opt.solution) + " out of range");
    x = inst.solution(*opt.solution);
  } else {
    throw InputError("transcript: pass --solution INDEX or --bits BITSTRING");
  }
  const Transcript tr = trans(x, inst);
  io.result(dump(transcript_to_json(tr)));
  if (!opt.emit_split.empty()) write_text_file(opt.emit_split, dump(split_to_json(inst, tr.j)));
  io.summary() << "transcript of " << x.to_string() << ": |J| = " << tr.j.count() << ", sum(J) = " << tr.j.sum()
               << ", dim(B) = " << dim(tr.boxes) << "\n";
  return kExitOk;
}

int cmd_recon(const Options& opt, Output& io) {
  if (opt.transcript_path.empty() || opt.split_path.empty()) throw InputError("recon: pass --transcript and --split");
  const Transcript tr = transcript_from_json(read_json_file(opt.transcript_path));
  const SplitFile split = split_from_json(read_json_file(opt.split_path));
  if (tr.j.d() != split.d || tr.a.n() != split.n)
    throw InputError("recon: transcript shape does not match the split file");
  const PublicData data{split.solutions, split.tail_objectives, split.format, split.epsilon};
  const ReconResult r = recon(tr, split.w_bar, data);
  Json j;
  j["ok"] = r.ok();
  j["solution"] = r.ok() ? Json(r.solution->to_string()) : Json(nullptr);
  j["index"] = r.index ? Json(*r.index) : Json(nullptr);
  if (!r.ok()) j["failure"] = r.failure;
  if (!opt.out_path.empty()) io.result(dump(j));
  // Short results are printed on stdout in either mode.
  if (r.ok()) {
    io.console() << r.solution->to_string() << "\n";
  } else {
    io.console() << "FAIL\n";
    io.summary() << "recon failed: " << r.failure << "\n";
  }
  return r.ok() ? kExitOk : kExitVerdictFailed;
}

ExperimentConfig campaign_config(const Options& opt) {
  ExperimentConfig cfg;
  const std::string& c = opt.campaign;
  if (c == "po-scaling") {
    const bool d1 = opt.d.empty() || (opt.d.size() == 1 && opt.d.front() == 1);
    cfg.generator = spec_from(opt, d1 ? Family::knapsack : Family::all_vectors, 8, 1);
    if (cfg.generator.family == Family::knapsack && !opt.center_set) cfg.generator.center = 0.5;
    cfg.n_grid = opt.n.empty() ? (d1 ? std::vector<std::size_t>{8, 12, 16, 24, 32, 48, 64} : std::vector<std::size_t>{4, 6, 8, 10, 12})
                               : opt.n;
    cfg.d_grid = opt.d.empty() ? std::vector<std::size_t>{1} : opt.d;
    cfg.trials = opt.trials.value_or(200);
    if (cfg.generator.family == Family::knapsack) cfg.slope_range = std::pair{1.5, 2.3};
  } else if (c == "ok-prob") {
    cfg.generator = spec_from(opt, Family::all_vectors, 3, 1);
    cfg.trials = opt.trials.value_or(100000);
    cfg.checker_gap_multiplier = opt.checker_gap;
  } else if (c == "boundedness") {
    Options o = opt;
    if (!o.epsilon_exp) o.epsilon_exp = 6;
    cfg.generator = spec_from(o, Family::all_vectors, 4, 1);
    cfg.trials = opt.trials.value_or(1000000);
    cfg.target_solution = opt.solution;
    cfg.target_box_offset = opt.box_offset;
  } else if (c == "uniqueness-fuzz") {
    cfg.generator = spec_from(opt, Family::all_vectors, 8, 1);
    cfg.n_grid = opt.n.empty() ? std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8} : opt.n;
    cfg.d_grid = opt.d.empty() ? std::vector<std::size_t>{1, 2, 3} : opt.d;
    cfg.trials = opt.trials.value_or(1000);
  } else {
    throw InputError("--campaign: unknown campaign \"" + c + "\"");
  }
  return cfg;
}

int cmd_experiment(const Options& opt, Output& io) {
  ExperimentReport report;
  if (opt.campaign == "a-count") {
    const std::size_t max_n = opt.n.empty() ? 5 : *std::max_element(opt.n.begin(), opt.n.end());
    const std::size_t max_d = opt.d.empty() ? 3 : *std::max_element(opt.d.begin(), opt.d.end());
    if (max_n > 6 || max_d > 3) throw InputError("a-count: enumeration limited to n <= 6, d <= 3");
    report = a_count_report(max_n, max_d);
  } else {
    const ExperimentConfig cfg = campaign_config(opt);
    if (opt.campaign == "po-scaling") report = estimate_po_count(cfg);
    else if (opt.campaign == "ok-prob") report = ok_probability_test(cfg);
    else if (opt.campaign == "boundedness") report = boundedness_test(cfg);
    else report = uniqueness_fuzz(cfg);
  }
  const auto formats = opt.formats.empty() ? std::vector<std::string>{"json"} : opt.formats;
  const bool several = formats.size() > 1;
  for (const auto& f : formats) {
    std::string text;
    if (f == "json") text = report_to_json(report);
    else if (f == "csv") text = report_to_csv(report);
    else if (f == "svg") text = report_to_svg(report);
    else throw InputError("--format: unknown format \"" + f + "\"");
    io.result(text, several || !opt.out_path.empty() ? "." + f : "");
  }
  io.summary() << report_summary(report);
  return report.all_pass() ? kExitOk : kExitVerdictFailed;
}

std::string number(double v) {
  std::ostringstream s;
  s.precision(15);
  s << v;
  return s.str();
}

int cmd_bound(const Options& opt, Output& io) {
  if (opt.n.empty() || opt.d.empty()) throw InputError("bound: pass --n and --d");
  const std::size_t n = opt.n.front();
  const std::size_t d = opt.d.front();
  if (n < 1 || d < 1 || !(opt.phi > 0)) throw InputError("bound: need n >= 1, d >= 1, phi > 0");
  const BoundValue main = main_theorem_bound(static_cast<double>(n), d, opt.phi);
  const BoundValue counting = counting_lemma_bound(static_cast<double>(n), d, opt.phi);
  Json j;
  auto put = [&](const char* key, const BoundValue& b) {
    j[key] = b.overflow ? Json("inf") : Json(b.value);
  };
  put("main_theorem_bound", main);
  put("counting_lemma_bound", counting);
  std::optional<double> ok;
  if (opt.epsilon_exp) {
    ok = ok_lemma_bound(n, d, opt.phi, std::ldexp(1.0, -*opt.epsilon_exp));
    j["ok_lemma_bound"] = *ok;
  }
  if (!opt.out_path.empty()) io.result(dump(j));
  auto show = [](const BoundValue& b) { return b.overflow ? std::string("inf") : number(b.value); };
  io.console() << "main_theorem_bound " << show(main) << "\n";
  io.console() << "counting_lemma_bound " << show(counting) << "\n";
  if (ok) io.console() << "ok_lemma_bound " << number(*ok) << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Pareto optima of smoothed binary optimization problems"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "write the machine-readable result here"); };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "all_vectors | random_subset | knapsack");
    sub->add_option("--distribution", opt.distribution, "uniform_band | truncated_gaussian | uniform_full");
    sub->add_option("--n", opt.n, "number of variables (comma-separated list for sweeps)")->delimiter(',');
    sub->add_option("--d", opt.d, "number of linear objectives (comma-separated list for sweeps)")->delimiter(',');
    sub->add_option("--m", opt.m, "size of the random subset");
    sub->add_option("--phi", opt.phi, "density bound");
    sub->add_option("--seed", opt.seed, "master seed");
    sub->add_option("--epsilon-exp", opt.epsilon_exp, "epsilon = 2^-E");
    sub->add_option("--fixed-exp", opt.fixed_exp, "fixed-point fraction bits F");
    sub->add_option("--center", opt.center, "center of every weight density")->each([&](const std::string&) {
      opt.center_set = true;
    });
    sub->add_flag("--random-centers", opt.random_centers, "draw one adversarial center per weight");
  };

  auto* generate = app.add_subcommand("generate", "sample an instance");
  add_generator(generate);
  generate->add_option("--trial", opt.trial, "trial index of the weight draw");
  add_out(generate);

  auto* pareto = app.add_subcommand("pareto", "enumerate the Pareto optima of an instance");
  pareto->add_option("instance,--instance", opt.instance_path, "instance JSON")->required();
  pareto->add_flag("--oracle", opt.oracle, "cross-check against brute force");
  add_out(pareto);

  auto* knapsack = app.add_subcommand("knapsack", "Nemhauser-Ullmann prefix Pareto lists");
  knapsack->add_option("--items", opt.items_path, "items JSON {F, profits, weights}");
  knapsack->add_option("--n", opt.n, "number of random items")->delimiter(',');
  knapsack->add_option("--seed", opt.seed, "seed for random items");
  knapsack->add_option("--trial", opt.trial, "trial index for random items");
  knapsack->add_option("--fixed-exp", opt.fixed_exp, "fixed-point fraction bits F");
  knapsack->add_flag("--oracle", opt.oracle, "cross-check against brute force");
  add_out(knapsack);

  auto* transcript = app.add_subcommand("transcript", "run Trans on one solution");
  transcript->add_option("instance,--instance", opt.instance_path, "instance JSON")->required();
  transcript->add_option("--solution", opt.solution, "index into the solution list");
  transcript->add_option("--bits", opt.bits, "solution as a bitstring");
  transcript->add_option("--emit-split", opt.emit_split, "also write the unmasked weights and public data here");
  add_out(transcript);

  auto* recon_cmd = app.add_subcommand("recon", "run Recon from a transcript and a split file");
  recon_cmd->add_option("--transcript", opt.transcript_path, "transcript JSON")->required();
  recon_cmd->add_option("--split", opt.split_path, "split JSON written by transcript --emit-split")->required();
  add_out(recon_cmd);

  auto* experiment = app.add_subcommand("experiment", "run a validation campaign");
  experiment->add_option("--campaign", opt.campaign, "po-scaling | uniqueness-fuzz | ok-prob | boundedness | a-count")
      ->required();
  add_generator(experiment);
  experiment->add_option("--trials", opt.trials, "trials per grid point");
  experiment->add_option("--format", opt.formats, "json, csv, svg (comma-separated)")->delimiter(',');
  experiment->add_option("--checker-gap", opt.checker_gap, "ok-prob: multiply the checker's gap");
  experiment->add_option("--solution", opt.solution, "boundedness: target solution index");
  experiment->add_option("--box-offset", opt.box_offset, "boundedness: shift the first target box");
  add_out(experiment);

  auto* bound = app.add_subcommand("bound", "evaluate the theoretical bounds");
  bound->add_option("--n", opt.n, "number of variables")->delimiter(',');
  bound->add_option("--d", opt.d, "number of linear objectives")->delimiter(',');
  bound->add_option("--phi", opt.phi, "density bound");
  bound->add_option("--epsilon-exp", opt.epsilon_exp, "epsilon = 2^-E for the OK lemma bound");
  add_out(bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Output io(opt, out, err);
  try {
    if (*generate) return cmd_generate(opt, io);
    if (*pareto) return cmd_pareto(opt, io);
    if (*knapsack) return cmd_knapsack(opt, io);
    if (*transcript) return cmd_transcript(opt, io);
    if (*recon_cmd) return cmd_recon(opt, io);
    if (*experiment) return cmd_experiment(opt, io);
    if (*bound) return cmd_bound(opt, io);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pareto_smooth::cli
