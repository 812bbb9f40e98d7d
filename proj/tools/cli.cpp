#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "metacomm/eichler.hpp"
#include "metacomm/metacommute.hpp"
#include "metacomm/tree.hpp"
#include "metacomm/verify.hpp"

namespace metacomm::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json matrix_json(const Mat2& m) {
  return json::array({json::array({m.at(0, 0).value(), m.at(0, 1).value()}),
                      json::array({m.at(1, 0).value(), m.at(1, 1).value()})});
}

std::string omega_csv(const Mat2& m) {
  return std::to_string(m.at(0, 0).value()) + "," + std::to_string(m.at(0, 1).value()) + "," +
         std::to_string(m.at(1, 0).value()) + "," + std::to_string(m.at(1, 1).value());
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_tsv(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "NA";
}

EichlerContext make_context(const RunConfig& cfg) {
  try {
    return EichlerContext(cfg.p, cfg.n, cfg.precision);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Mat2 require_omega(const EichlerContext& ctx, const RunConfig& cfg) {
  if (!cfg.omega) throw UsageError("--omega is required");
  const auto& w = *cfg.omega;
  const Mat2 omega = ctx.matrix(w[0], w[1], w[2], w[3]);
  const auto pn = ctx.modulus().power(ctx.n());
  if (!contains(ctx, omega)) {
    throw UsageError("omega not in O^x: c = " + std::to_string(w[2]) + " is not divisible by p^n = " +
                     std::to_string(pn));
  }
  if (!omega.det().is_unit()) {
    throw UsageError("omega not in O^x: ad - bc is divisible by p = " + std::to_string(ctx.p()));
  }
  return omega;
}

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed, const char* cmd) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    throw UsageError(std::string("--format not supported by ") + cmd);
  }
}

json report_json(const PermutationReport& report) {
  json mapping = json::object();
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    mapping[report.labels[i].to_string()] = report.mapping[i].to_string();
  }
  json cycles = json::array();
  for (const auto& cycle : report.cycles) {
    json c = json::array();
    for (const auto& l : cycle) c.push_back(l.to_string());
    cycles.push_back(std::move(c));
  }
  return json{{"mapping", std::move(mapping)},
              {"cycles", std::move(cycles)},
              {"ell1", optional_json(report.ell1)},
              {"ell2", optional_json(report.ell2)},
              {"fixed_s1", report.fixed_s1},
              {"fixed_s2", report.fixed_s2}};
}

std::string cycle_string(const std::vector<IdealLabel>& cycle) {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " ";
    out += cycle[i].to_string();
  }
  return out + ")";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

// ---------------------------------------------------------------------------

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Tsv}, "enumerate");
  const EichlerContext ctx = make_context(cfg);
  if (cfg.format == Format::Tsv) {
    out << "label\ta11\ta12\ta21\ta22\n";
    for (const auto& ideal : enumerate_ideals(ctx)) {
      const Mat2& g = ideal.generator;
      out << ideal.label.to_string() << '\t' << g.at(0, 0).value() << '\t' << g.at(0, 1).value()
          << '\t' << g.at(1, 0).value() << '\t' << g.at(1, 1).value() << '\n';
    }
    return kExitOk;
  }
  json ideals = json::array();
  for (const auto& ideal : enumerate_ideals(ctx)) {
    ideals.push_back({{"label", ideal.label.to_string()}, {"generator", matrix_json(ideal.generator)}});
  }
  json doc{{"p", ctx.p()},
           {"n", ctx.n()},
           {"precision", ctx.precision()},
           {"gamma", matrix_json(gamma_of(ctx))},
           {"census_size", ctx.census_size()},
           {"ideals", std::move(ideals)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_permute(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Tsv}, "permute");
  const EichlerContext ctx = make_context(cfg);
  const Mat2 omega = require_omega(ctx, cfg);
  const PermutationReport report = sigma_perm(ctx, omega);
  if (cfg.format == Format::Json) {
    out << report_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "label\timage\n";
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    out << report.labels[i].to_string() << '\t' << report.mapping[i].to_string() << '\n';
  }
  return kExitOk;
}

int run_cycles(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Tsv}, "cycles");
  const EichlerContext ctx = make_context(cfg);
  const Mat2 omega = require_omega(ctx, cfg);
  const PermutationReport report = sigma_perm(ctx, omega);
  const EllPair ell = ell_pair(report);
  if (cfg.format == Format::Json) {
    json cycles = json::array();
    for (const auto& c : report.cycles) {
      if (c.size() > 1) cycles.push_back(cycle_string(c));
    }
    json doc{{"cycle_type_s1", report.cycle_type(Side::S1)},
             {"cycle_type_s2", report.cycle_type(Side::S2)},
             {"nontrivial_cycles", std::move(cycles)},
             {"ell1", optional_json(ell.ell1)},
             {"ell2", optional_json(ell.ell2)},
             {"ell_equal", ell.equal}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "cycle_type_s1\tcycle_type_s2\tell1\tell2\tell_equal\n";
  out << join(report.cycle_type(Side::S1)) << '\t' << join(report.cycle_type(Side::S2)) << '\t'
      << optional_tsv(ell.ell1) << '\t' << optional_tsv(ell.ell2) << '\t'
      << (ell.equal ? "true" : "false") << '\n';
  return kExitOk;
}

int run_verify(const RunConfig& cfg, const VerifyOptions& options, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Tsv}, "verify");
  const EichlerContext ctx = make_context(cfg);
  if (options.exhaustive_mod && (*options.exhaustive_mod <= ctx.n() ||
                                 *options.exhaustive_mod >= ctx.precision())) {
    throw UsageError("--exhaustive-mod must lie strictly between n and the precision");
  }
  const std::vector<SuiteOutcome> suites = run_verification(ctx, options);
  const bool passed =
      std::all_of(suites.begin(), suites.end(), [](const SuiteOutcome& s) { return s.passed(); });

  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& s : suites) {
      json cxs = json::array();
      for (const auto& cx : s.failures) {
        cxs.push_back({{"omega", cx.omega},
                       {"check", cx.label},
                       {"expected", cx.expected},
                       {"actual", cx.actual}});
      }
      arr.push_back({{"suite", s.name},
                     {"checked", s.checked},
                     {"failed", s.failed},
                     {"counterexamples", std::move(cxs)}});
    }
    json doc{{"p", ctx.p()},       {"n", ctx.n()},         {"precision", ctx.precision()},
             {"trials", options.trials}, {"seed", options.seed}, {"suites", std::move(arr)},
             {"passed", passed}};
    out << doc.dump(2) << '\n';
  } else {
    out << "suite\tchecked\tfailed\n";
    for (const auto& s : suites) out << s.name << '\t' << s.checked << '\t' << s.failed << '\n';
    for (const auto& s : suites) {
      for (const auto& cx : s.failures) {
        out << "counterexample\t" << s.name << '\t' << cx.omega << '\t' << cx.label << "\texpected "
            << cx.expected << "\tactual " << cx.actual << '\n';
      }
    }
    out << "result\t" << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_tree(const RunConfig& cfg, int radius, const std::string& highlight, std::ostream& out) {
  require_format(cfg, {Format::Dot}, "tree");
  if (radius < 0) throw UsageError("--radius must be >= 0");
  const EichlerContext ctx = make_context(cfg);
  std::vector<IdealLabel> labels;
  for (const auto& ideal : ctx.census()) {
    const Side side = ideal.label.side;
    if (highlight == "all" || (highlight == "s1" && side == Side::S1) ||
        (highlight == "s2" && side == Side::S2)) {
      labels.push_back(ideal.label);
    }
  }
  out << export_dot(ctx, radius, labels);
  return kExitOk;
}

int run_scan(const RunConfig& cfg, const std::string& p_list, const std::string& n_list,
             std::ostream& out) {
  require_format(cfg, {Format::Tsv}, "scan");
  const auto ps = parse_list(p_list, "--p-list");
  const auto ns = parse_list(n_list, "--n-list");
  out << "p\tn\tomega\tcensus_size\tell1\tell2\tfixed_s1\tfixed_s2\tdiagrams_ok\n";
  for (std::uint64_t p : ps) {
    for (std::uint64_t n : ns) {
      RunConfig local = cfg;
      local.p = p;
      local.n = static_cast<int>(n);
      const EichlerContext ctx = make_context(local);
      std::vector<Mat2> omegas;
      if (cfg.omega) {
        omegas.push_back(require_omega(ctx, local));
      } else {
        omegas = random_units(ctx, cfg.trials, cfg.seed).omegas();
      }
      for (const auto& omega : omegas) {
        const PermutationReport report = sigma_perm(ctx, omega);
        const DiagramCheck diagrams = check_diagrams(ctx, omega);
        out << p << '\t' << n << '\t' << omega_csv(omega) << '\t' << ctx.census_size() << '\t'
            << optional_tsv(report.ell1) << '\t' << optional_tsv(report.ell2) << '\t'
            << report.fixed_s1 << '\t' << report.fixed_s2 << '\t'
            << (diagrams.all() ? "true" : "false") << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metacommutation of norm-p ideals in local Eichler orders", "metacomm"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::int64_t> omega;
  std::string format_name;
  VerifyOptions verify_options;
  std::optional<int> exhaustive_mod;
  bool serial = false;
  int radius = 1;
  std::string highlight = "all";
  std::string p_list = "2,3,5";
  std::string n_list = "1,2";

  auto add_context = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", cfg.p, "Prime p");
    auto* n = sub->add_option("--n", cfg.n, "Level exponent n >= 1");
    if (required) {
      p->required();
      n->required();
    }
    sub->add_option("--precision", cfg.precision, "Working precision K (default n + 12)");
  };
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    format_name = fallback;
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "dot"}));
  };
  auto add_omega = [&](CLI::App* sub) {
    sub->add_option("--omega", omega, "Unit of O as a,b,c,d")->delimiter(',')->expected(4);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the norm-p left ideals of O");
  add_context(enumerate, true);
  auto* permute = app.add_subcommand("permute", "Permutation sigma_omega on the census");
  add_context(permute, true);
  add_omega(permute);
  auto* cycles = app.add_subcommand("cycles", "Cycle type and (ell1, ell2) of sigma_omega");
  add_context(cycles, true);
  add_omega(cycles);
  auto* verify = app.add_subcommand("verify", "Check every structural property on random units");
  add_context(verify, true);
  verify->add_option("--trials", cfg.trials, "Random units to test");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--exhaustive-mod", exhaustive_mod,
                     "Also sweep all unit residues mod p^k");
  verify->add_flag("--serial", serial, "Use the serial reference kernel");
  auto* tree = app.add_subcommand("tree", "Bruhat-Tits tree around O's segment in DOT");
  add_context(tree, true);
  tree->add_option("--radius", radius, "Ball radius around O's segment");
  tree->add_option("--highlight", highlight, "Ideal segments to overlay")
      ->check(CLI::IsMember({"all", "s1", "s2", "none"}));
  auto* scan = app.add_subcommand("scan", "TSV statistics across parameter grids");
  add_context(scan, false);
  scan->add_option("--p-list", p_list, "Comma-separated primes");
  scan->add_option("--n-list", n_list, "Comma-separated level exponents");
  scan->add_option("--trials", cfg.trials, "Random units per (p, n)");
  scan->add_option("--seed", cfg.seed, "RNG seed");
  add_omega(scan);

  for (auto* sub : {enumerate, permute, cycles, verify}) add_format(sub, "");
  add_format(tree, "");
  add_format(scan, "");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto pick_format = [&](Format fallback) {
    if (format_name.empty()) return fallback;
    if (format_name == "json") return Format::Json;
    if (format_name == "tsv") return Format::Tsv;
    return Format::Dot;
  };

  try {
    if (!omega.empty()) cfg.omega = std::array<std::int64_t, 4>{omega[0], omega[1], omega[2], omega[3]};
    if (*enumerate) {
      cfg.format = pick_format(Format::Json);
      return run_enumerate(cfg, out);
    }
    if (*permute) {
      cfg.format = pick_format(Format::Json);
      return run_permute(cfg, out);
    }
    if (*cycles) {
      cfg.format = pick_format(Format::Json);
      return run_cycles(cfg, out);
    }
    if (*verify) {
      cfg.format = pick_format(Format::Tsv);
      if (cfg.trials == 0) throw UsageError("--trials must be positive");
      verify_options.trials = cfg.trials;
      verify_options.seed = cfg.seed;
      verify_options.exhaustive_mod = exhaustive_mod;
      verify_options.parallel = !serial;
      return run_verify(cfg, verify_options, out);
    }
    if (*tree) {
      cfg.format = pick_format(Format::Dot);
      return run_tree(cfg, radius, highlight, out);
    }
    if (*scan) {
      cfg.format = pick_format(Format::Tsv);
      if (!cfg.omega && cfg.trials == 0) throw UsageError("--trials must be positive");
      return run_scan(cfg, p_list, n_list, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metacomm::cli
