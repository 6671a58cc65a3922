// hgdual: enumerate all minimal hitting sets (the dual) of a hypergraph.
//
// Subcommands:
//   solve    enumerate the dual of one instance
//   gen      emit a benchmark instance in the text format
//   verify   run several algorithms and compare their outputs
//   bench    run an instance matrix and emit CSV timings
//
// Results go to standard output, diagnostics to standard error.
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 limit hit, 4 verify mismatch.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgdual/hgdual.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitMismatch = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CommonOpts {
  std::string algorithm = "rs";
  bool complement = false;
  std::string prune = "on";
  std::string bits = "auto";
  bool minimize = false;
  bool count_only = false;
  std::uint64_t max_outputs = 0;  // 0 = unlimited
  double time_limit = 0.0;        // seconds, 0 = none
  std::string sort_edges = "input";
  std::string output = "-";
};

// Same semantic family, co-edges stored: the dense-input mode.
hgdual::Hypergraph as_complement_storage(const hgdual::Hypergraph& h) {
  return hgdual::complement(hgdual::complement(h).materialized());
}

hgdual::Hypergraph load_instance(const std::string& path) {
  if (path == "-") return hgdual::parse_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input '" + path + "'");
  return hgdual::parse_hypergraph(in);
}

hgdual::Hypergraph prepare(hgdual::Hypergraph h, const CommonOpts& opts) {
  if (opts.minimize) h = hgdual::remove_superset_edges(h);
  if (opts.sort_edges == "size-asc") {
    std::vector<hgdual::EdgeId> perm(h.m());
    for (hgdual::EdgeId i = 0; i < h.m(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](hgdual::EdgeId a, hgdual::EdgeId b) {
      return h.edge_size(a) < h.edge_size(b);
    });
    h = h.with_edge_order(perm);
  }
  if (opts.complement) h = as_complement_storage(h);
  return h;
}

std::optional<hgdual::BitMatrix> resolve_bits(const hgdual::Hypergraph& h,
                                              const std::string& mode) {
  if (mode == "on" || (mode == "auto" && hgdual::should_use_bits(h)))
    return hgdual::build_bit_matrix(h);
  return std::nullopt;
}

hgdual::StopToken make_stop(double time_limit) {
  hgdual::StopToken stop;
  if (time_limit <= 0.0) {
    if (const char* env = std::getenv("HGDUAL_TIME_LIMIT")) time_limit = std::atof(env);
  }
  if (time_limit > 0.0)
    stop.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(time_limit));
  return stop;
}

struct RunOutcome {
  hgdual::EnumStats stats;
  double seconds = 0.0;
};

// Runs one enumeration algorithm against a sink.  "crs"/"cdfs" switch the
// instance to complement storage first.
RunOutcome run_algorithm(const std::string& name, const hgdual::Hypergraph& input,
                         hgdual::MhsSink& sink, bool prune, const std::string& bits_mode,
                         const hgdual::StopToken& stop) {
  const bool want_complement = (name == "crs" || name == "cdfs");
  hgdual::Hypergraph local;
  const hgdual::Hypergraph* h = &input;
  if (want_complement && !input.complemented()) {
    local = as_complement_storage(input);
    h = &local;
  }
  auto bits = resolve_bits(*h, bits_mode);

  RunOutcome out;
  auto t0 = Clock::now();
  if (name == "rs" || name == "crs") {
    hgdual::RsOptions o;
    o.prune = prune;
    o.bits = bits ? &*bits : nullptr;
    o.stop = stop;
    out.stats = hgdual::enumerate_rs(*h, sink, o);
  } else if (name == "dfs" || name == "cdfs") {
    hgdual::DfsOptions o;
    o.prune = prune;
    o.bits = bits ? &*bits : nullptr;
    o.stop = stop;
    out.stats = hgdual::enumerate_dfs(*h, sink, o);
  } else if (name == "dl") {
    hgdual::DualCollection d = hgdual::enumerate_dl(*h, stop);
    for (const auto& s : d.sets) {
      ++out.stats.emitted;
      if (!sink.accept(s)) {
        out.stats.aborted = true;
        break;
      }
    }
    out.stats.nodes = d.size();
  } else if (name == "brute") {
    hgdual::DualCollection d = hgdual::enumerate_brute(*h, stop);
    for (const auto& s : d.sets) {
      ++out.stats.emitted;
      if (!sink.accept(s)) {
        out.stats.aborted = true;
        break;
      }
    }
    out.stats.nodes = std::uint64_t(1) << h->n();
  } else {
    throw CLI::ValidationError("unknown algorithm '" + name + "'");
  }
  out.seconds = seconds_since(t0);
  return out;
}

int cmd_solve(const std::string& input, const CommonOpts& opts) {
  hgdual::Hypergraph h = prepare(load_instance(input), opts);

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (opts.output != "-") {
    file_out.open(opts.output);
    if (!file_out) throw std::runtime_error("cannot open output '" + opts.output + "'");
    out = &file_out;
  }

  hgdual::CountSink count_sink;
  hgdual::StreamSink stream_sink(h, *out);
  hgdual::MhsSink* base =
      opts.count_only ? static_cast<hgdual::MhsSink*>(&count_sink) : &stream_sink;
  std::unique_ptr<hgdual::LimitSink> limit;
  hgdual::MhsSink* sink = base;
  if (opts.max_outputs > 0) {
    limit = std::make_unique<hgdual::LimitSink>(*base, opts.max_outputs);
    sink = limit.get();
  }

  RunOutcome r;
  try {
    r = run_algorithm(opts.algorithm, h, *sink, opts.prune == "on", opts.bits,
                      make_stop(opts.time_limit));
  } catch (const hgdual::TimeoutError&) {
    std::cerr << "time limit exceeded\n";
    return kExitLimit;
  }

  std::uint64_t mhs = opts.count_only ? count_sink.count() : stream_sink.count();
  std::cerr << "edges=" << h.m() << " verts=" << h.n() << " size=" << h.total_size()
            << " mhs=" << mhs << " nodes=" << r.stats.nodes << " seconds=" << r.seconds
            << "\n";
  return r.stats.aborted ? kExitLimit : kExitOk;
}

int cmd_gen(const hgdual::InstanceSpec& spec, const std::string& output) {
  hgdual::Hypergraph h = hgdual::generate(spec);
  if (output == "-") {
    hgdual::write_hypergraph(h, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output '" + output + "'");
    hgdual::write_hypergraph(h, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::vector<std::string>& algorithms,
               const CommonOpts& opts) {
  hgdual::Hypergraph h = prepare(load_instance(input), opts);
  if (algorithms.size() < 2) throw CLI::ValidationError("verify needs at least two algorithms");

  std::vector<hgdual::DualCollection> results;
  for (const std::string& name : algorithms) {
    hgdual::CollectSink sink;
    try {
      run_algorithm(name, h, sink, opts.prune == "on", opts.bits, make_stop(opts.time_limit));
    } catch (const hgdual::TimeoutError&) {
      std::cerr << name << ": time limit exceeded\n";
      return kExitLimit;
    }
    results.push_back(hgdual::collect_canonical(sink));
    std::cerr << name << ": " << results.back().size() << " minimal hitting sets\n";
  }

  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k] == results[0]) continue;
    const auto& a = results[0].sets;
    const auto& b = results[k].sets;
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    const bool from_first = i < a.size() && (i >= b.size() || a[i] < b[i]);
    const auto& diff = from_first ? a[i] : b[i];
    std::ostringstream os;
    for (std::size_t j = 0; j < diff.size(); ++j) {
      if (j) os << ' ';
      os << h.label(diff[j]);
    }
    std::cerr << "mismatch: set {" << os.str() << "} found by "
              << (from_first ? algorithms[0] : algorithms[k]) << " but not by "
              << (from_first ? algorithms[k] : algorithms[0]) << "\n";
    return kExitMismatch;
  }
  std::cout << "ok: " << results[0].size() << " minimal hitting sets, " << algorithms.size()
            << " algorithms agree\n";
  return kExitOk;
}

// Bench instance tokens: a path to an instance file, or FAMILY:n
// (e.g. M:20, TH:120, SDFP:16) or RANDOM:n:m:p:seed.
hgdual::Hypergraph load_bench_instance(const std::string& token, std::string& name) {
  name = token;
  auto colon = token.find(':');
  if (colon == std::string::npos) {
    std::ifstream probe(token);
    if (probe) return hgdual::parse_hypergraph(probe);
    throw std::runtime_error("bench token '" + token + "' is neither a file nor FAMILY:n");
  }
  hgdual::InstanceSpec spec;
  spec.family = hgdual::family_from_name(token.substr(0, colon));
  std::vector<std::string> parts;
  std::size_t pos = colon + 1;
  while (pos <= token.size()) {
    auto next = token.find(':', pos);
    if (next == std::string::npos) next = token.size();
    parts.push_back(token.substr(pos, next - pos));
    pos = next + 1;
  }
  if (spec.family == hgdual::Family::RANDOM) {
    if (parts.size() != 4) throw std::runtime_error("RANDOM token needs n:m:p:seed");
    spec.n = std::stoi(parts[0]);
    spec.m = std::stoi(parts[1]);
    spec.p = std::stod(parts[2]);
    spec.seed = std::stoull(parts[3]);
  } else {
    if (parts.size() != 1) throw std::runtime_error("generator token needs FAMILY:n");
    spec.n = std::stoi(parts[0]);
  }
  return hgdual::generate(spec);
}

int cmd_bench(const std::vector<std::string>& tokens, const std::string& list_file,
              const std::vector<std::string>& algorithms, const std::string& prune_mode,
              const CommonOpts& opts) {
  std::vector<std::string> all = tokens;
  if (!list_file.empty()) {
    std::ifstream in(list_file);
    if (!in) throw std::runtime_error("cannot open list file '" + list_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] != '#') all.push_back(line);
    }
  }

  std::cout << "instance,algorithm,prune,bits,m,total_size,mhs,nodes,seconds\n";

  std::vector<bool> prune_values;
  if (prune_mode == "on") prune_values = {true};
  else if (prune_mode == "off") prune_values = {false};
  else prune_values = {true, false};

  // seconds with pruning / seconds without, per algorithm
  std::vector<std::vector<double>> ratios(algorithms.size());

  for (const std::string& token : all) {
    std::string name;
    hgdual::Hypergraph h = prepare(load_bench_instance(token, name), opts);
    const bool bits_on = opts.bits == "on" || (opts.bits == "auto" && hgdual::should_use_bits(h));

    for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
      double on_seconds = -1.0, off_seconds = -1.0;
      for (bool prune : prune_values) {
        hgdual::CountSink sink;
        std::string seconds_text;
        std::uint64_t mhs = 0, nodes = 0;
        try {
          RunOutcome r = run_algorithm(algorithms[ai], h, sink, prune, opts.bits,
                                       make_stop(opts.time_limit));
          if (r.stats.aborted) {
            seconds_text = "timeout";
          } else {
            std::ostringstream os;
            os << r.seconds;
            seconds_text = os.str();
            (prune ? on_seconds : off_seconds) = r.seconds;
          }
          mhs = sink.count();
          nodes = r.stats.nodes;
        } catch (const hgdual::TimeoutError&) {
          seconds_text = "timeout";
        }
        std::cout << name << ',' << algorithms[ai] << ',' << (prune ? "on" : "off") << ','
                  << (bits_on ? "on" : "off") << ',' << h.m() << ',' << h.total_size() << ','
                  << mhs << ',' << nodes << ',' << seconds_text << "\n";
      }
      if (on_seconds >= 0.0 && off_seconds > 0.0)
        ratios[ai].push_back(on_seconds / off_seconds);
    }
  }

  if (prune_values.size() == 2) {
    for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
      if (ratios[ai].empty()) continue;
      double sum = 0.0;
      for (double r : ratios[ai]) sum += r;
      std::cerr << "pruning-ratio " << algorithms[ai] << " "
                << sum / static_cast<double>(ratios[ai].size()) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal hitting set / hypergraph dualization tool"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "enumerate all minimal hitting sets");
  std::string solve_input = "-";
  CommonOpts solve_opts;
  solve->add_option("input", solve_input, "instance file, or - for stdin");
  solve->add_option("-a,--algorithm", solve_opts.algorithm, "rs|dfs|dl|brute")
      ->check(CLI::IsMember({"rs", "dfs", "dl", "brute"}));
  solve->add_flag("-c,--complement", solve_opts.complement,
                  "store co-edges internally (dense inputs)");
  solve->add_option("--prune", solve_opts.prune, "violating-vertex pruning (default on)")
      ->check(CLI::IsMember({"on", "off"}));
  solve->add_option("--bits", solve_opts.bits, "adjacency bit matrix (default auto)")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  solve->add_flag("--minimize", solve_opts.minimize, "drop superset edges first");
  solve->add_flag("--count-only", solve_opts.count_only, "count instead of printing sets");
  solve->add_option("--max-outputs", solve_opts.max_outputs, "stop after N sets");
  solve->add_option("--time-limit", solve_opts.time_limit, "seconds (0 = none)");
  solve->add_option("--sort-edges", solve_opts.sort_edges, "edge order: input|size-asc")
      ->check(CLI::IsMember({"input", "size-asc"}));
  solve->add_option("-o,--output", solve_opts.output, "output path (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a benchmark instance");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::string gen_output = "-";
  std::uint64_t gen_seed = 0;
  gen->add_option("family", gen_family, "M|DM|TH|SDTH|SDFP|RANDOM")->required();
  gen->add_option("params", gen_params, "n (and m p for RANDOM)");
  gen->add_option("--seed", gen_seed, "RANDOM seed (default 0)");
  gen->add_option("-o,--output", gen_output, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check algorithms on one instance");
  std::string verify_input = "-";
  std::string verify_algos = "rs,dfs";
  CommonOpts verify_opts;
  verify->add_option("input", verify_input, "instance file, or - for stdin");
  verify->add_option("-a,--algorithms", verify_algos,
                     "comma list of rs,dfs,dl,brute,crs,cdfs");
  verify->add_flag("-c,--complement", verify_opts.complement, "complement storage for all");
  verify->add_option("--prune", verify_opts.prune, "on|off")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--bits", verify_opts.bits, "auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  verify->add_flag("--minimize", verify_opts.minimize, "drop superset edges first");
  verify->add_option("--time-limit", verify_opts.time_limit, "seconds per algorithm");
  verify->add_option("--sort-edges", verify_opts.sort_edges, "input|size-asc")
      ->check(CLI::IsMember({"input", "size-asc"}));

  // bench
  auto* bench = app.add_subcommand("bench", "CSV timings over an instance matrix");
  std::vector<std::string> bench_tokens;
  std::string bench_list;
  std::string bench_algos = "rs,dfs";
  std::string bench_prune = "on";
  CommonOpts bench_opts;
  bench->add_option("instances", bench_tokens, "files or FAMILY:n / RANDOM:n:m:p:seed tokens");
  bench->add_option("--list", bench_list, "file with one instance token per line");
  bench->add_option("-a,--algorithms", bench_algos, "comma list of rs,dfs,dl,brute,crs,cdfs");
  bench->add_option("--prune", bench_prune, "on|off|both")
      ->check(CLI::IsMember({"on", "off", "both"}));
  bench->add_option("--bits", bench_opts.bits, "auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  bench->add_option("--time-limit", bench_opts.time_limit, "seconds per run");
  bench->add_option("--sort-edges", bench_opts.sort_edges, "input|size-asc")
      ->check(CLI::IsMember({"input", "size-asc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  auto split_list = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      if (next > pos) out.push_back(s.substr(pos, next - pos));
      pos = next + 1;
    }
    return out;
  };

  try {
    if (solve->parsed()) return cmd_solve(solve_input, solve_opts);
    if (gen->parsed()) {
      hgdual::InstanceSpec spec;
      spec.family = hgdual::family_from_name(gen_family);
      spec.seed = gen_seed;
      if (spec.family == hgdual::Family::RANDOM) {
        if (gen_params.size() != 3)
          throw CLI::ValidationError("gen RANDOM needs: n m p (--seed S)");
        spec.n = std::stoi(gen_params[0]);
        spec.m = std::stoi(gen_params[1]);
        spec.p = std::stod(gen_params[2]);
      } else {
        if (gen_params.size() != 1) throw CLI::ValidationError("gen needs: FAMILY n");
        spec.n = std::stoi(gen_params[0]);
      }
      return cmd_gen(spec, gen_output);
    }
    if (verify->parsed())
      return cmd_verify(verify_input, split_list(verify_algos), verify_opts);
    if (bench->parsed())
      return cmd_bench(bench_tokens, bench_list, split_list(bench_algos), bench_prune,
                       bench_opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hgdual::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
