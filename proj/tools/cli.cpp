#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lcurve/bruhat.hpp"
#include "lcurve/classify.hpp"
#include "lcurve/curves.hpp"
#include "lcurve/errors.hpp"
#include "lcurve/serialization.hpp"
#include "lcurve/spin_chop.hpp"
#include "selftest.hpp"

namespace lcurve::cli {

namespace {

// Raised for bad flags or unreadable files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void maybe_write_json(const CommandConfig& config, const Json& j) {
  if (!config.json_path.empty()) write_file(config.json_path, j.dump(2) + "\n");
}

int require_m(const CommandConfig& config) {
  if (config.m < 2) throw UsageError(config.subcommand + " needs --n N or --m M (m = n + 1 >= 2)");
  return config.m;
}

std::vector<double> offsets(const CommandConfig& config) {
  if (config.h) return {*config.h};
  return {1e-2, 1e-3};
}

int cmd_enumerate(const CommandConfig& config, std::ostream& out) {
  const int m = require_m(config);
  Json list = Json::array();
  if (config.spin) {
    for (const auto& z : enumerate_tilde_D(m, config.force)) list.push_back(format_spin(z));
  } else {
    for (const auto& q : enumerate_D(m, config.force)) list.push_back(q.to_string());
  }
  const long long expected = config.spin ? spin_group_order(m) : weyl_group_order(m);
  out << (config.spin ? "double cover of D_" : "D_") << m << ": " << list.size() << " elements (expected "
      << expected << ")\n";
  if (config.json_path.empty()) {
    for (const auto& e : list) out << e.get<std::string>() << '\n';
  }
  maybe_write_json(config, Json{{"level", config.spin ? "Spin" : "SO"}, {"m", m}, {"count", list.size()},
                                {"elements", list}});
  return static_cast<long long>(list.size()) == expected ? kExitOk : kExitVerification;
}

int cmd_classify(const CommandConfig& config, std::ostream& out) {
  const int m = require_m(config);
  const auto report = config.spin ? spin_classes(m, config.force) : so_classes(m, config.force);
  out << level_name(report.level) << " classification, n = " << m - 1 << ": " << report.classes.size()
      << " classes (expected " << report.expected_classes << "), group order " << report.group_order << '\n';
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    out << "  class " << i << ": size " << c.size << ", s =";
    for (const auto& [s, count] : c.members_by_s) out << ' ' << s;
    out << ", named:";
    for (const auto& name : c.named) out << ' ' << name;
    out << ", rep " << c.representative_text << '\n';
  }
  for (const auto& f : report.failures) out << "  FAIL: " << f << '\n';
  if (config.timing) out << "  elapsed " << report.elapsed_ms << " ms\n";
  maybe_write_json(config, to_json(report, config.timing));
  if (!config.csv_path.empty()) write_file(config.csv_path, to_csv(report));
  return report.passed() ? kExitOk : kExitVerification;
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return matrix_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
  }
  return parse_matrix(text);
}

int cmd_decompose(const CommandConfig& config, std::ostream& out) {
  if (config.input.empty()) throw UsageError("decompose needs --input FILE");
  Eigen::MatrixXd q = read_matrix(config.input);
  bool orthogonalized = false;
  if (orthogonality_error(q) >= kOrthTolerance) {
    if (std::abs(q.determinant()) < 1e-300) throw DomainError("input matrix is singular");
    q = orthogonalize_positive<double>(q);
    orthogonalized = true;
  }
  const auto d = decompose(q, config.tol.value_or(kPivotFloor));
  out << "Q0 " << d.q0.to_string() << '\n';
  if (orthogonalized) out << "(input orthogonalized by positive QR; the cell is unchanged)\n";
  out << "U1\n" << format_matrix(d.u1) << "U2\n" << format_matrix(d.u2) << "residual " << d.residual << '\n';
  maybe_write_json(config, Json{{"q0", d.q0.to_string()},
                                {"u1", to_json(d.u1)},
                                {"u2", to_json(d.u2)},
                                {"residual", d.residual},
                                {"orthogonalized", orthogonalized}});
  return d.residual < 1e-8 ? kExitOk : kExitVerification;
}

int cmd_chop_verify(const CommandConfig& config, std::ostream& out) {
  const int m = require_m(config);
  const int logs = config.samples.value_or(5);
  std::mt19937_64 rng(config.seed);
  std::vector<SignedPermutation> elements;
  if (m <= 4 || config.force) {
    elements = enumerate_D(m, config.force);
  } else {
    auto all = enumerate_D(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 200; ++i) elements.push_back(all[pick(rng)]);
  }
  int pass = 0;
  Json failures = Json::array();
  for (const auto& q : elements) {
    bool ok = true;
    for (double h : offsets(config)) {
      for (int k = 0; k < logs; ++k) {
        const auto log = k == 0 ? TridiagonalLog::ones(m) : TridiagonalLog::random(m, rng);
        if (germ_cell(q, h, log) != chop_rep(q)) ok = false;
      }
    }
    if (ok) {
      ++pass;
    } else {
      failures.push_back(q.to_string());
    }
  }
  out << pass << "/" << elements.size() << " elements pass (germ cell = Delta(Q) A)\n";
  Json report{{"m", m}, {"seed", config.seed}, {"checked", elements.size()}, {"passed", pass},
              {"failures", failures}};
  bool spin_ok = true;
  if (config.spin) {
    long long spin_pass = 0;
    long long spin_total = 0;
    for (const auto& z : enumerate_tilde_D(m, config.force)) {
      ++spin_total;
      const auto c = chop_spin(z);
      if (pi_signed(c) == chop_rep(*pi_signed(z)) && chop_spin(neg(z)) == neg(c)) ++spin_pass;
    }
    out << spin_pass << "/" << spin_total << " spin elements pass (projection and antipode)\n";
    out << "a = " << format_spin(default_chopper(m).a()) << '\n';
    report["spin_checked"] = spin_total;
    report["spin_passed"] = spin_pass;
    report["a"] = to_json(default_chopper(m).a());
    spin_ok = spin_pass == spin_total;
  }
  maybe_write_json(config, report);
  return pass == static_cast<int>(elements.size()) && spin_ok ? kExitOk : kExitVerification;
}

DiagonalSigns parse_diagonal(const std::string& text) {
  try {
    return DiagonalSigns(Json::parse(text).get<std::vector<int>>());
  } catch (const Json::exception&) {
    throw ParseError("diagonal must look like [1,-1,-1,1]");
  }
}

int cmd_transit(const CommandConfig& config, std::ostream& out) {
  if (!config.d1.empty() || !config.d2.empty()) {
    const auto d1 = parse_diagonal(config.d1);
    const auto d2 = parse_diagonal(config.d2);
    const auto q = transit_witness(d1, d2);
    out << "Q " << q.to_string() << '\n';
    maybe_write_json(config, Json{{"q", q.to_string()}});
    return kExitOk;
  }
  const int m = require_m(config);
  if (m > 7 && !config.force) throw GuardExceeded("transit is limited to m <= 7 without --force");
  const auto diagonals = enumerate_diagonals(m);
  long long pairs = 0;
  long long valid = 0;
  for (const auto& d1 : diagonals) {
    for (const auto& d2 : diagonals) {
      if (d1.trace() != d2.trace()) continue;
      ++pairs;
      try {
        const auto q = transit_witness(d1, d2);
        if (delta(q) == d1 && delta(tr(q)) == d2) ++valid;
      } catch (const Error&) {
      }
    }
  }
  out << valid << "/" << pairs << " same-s diagonal pairs have a validated transit witness\n";
  Json report{{"m", m}, {"pairs", pairs}, {"validated", valid}};
  bool ok = valid == pairs;
  if (config.spin) {
    const JumpGraph graph(m);
    const auto& v = graph.vertices();
    long long chains = 0;
    long long within_three = 0;
    int longest = 0;
    Json two_jump;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        const int s1 = s_spin(v[i]);
        const int s2 = s_spin(v[j]);
        if (s1 != s2 || std::abs(s1) == m) continue;
        ++chains;
        const auto chain = graph.shortest_chain(v[i], v[j]);
        if (!chain) continue;
        const int jumps = static_cast<int>(chain->size()) - 1;
        longest = std::max(longest, jumps);
        if (jumps <= 3) ++within_three;
        if (jumps >= 2 && two_jump.is_null()) two_jump = Json{format_spin(v[i]), format_spin(v[j])};
      }
    }
    const bool antipodes_apart = !graph.shortest_chain(ExactSpinElement::one(m), ExactSpinElement::minus_one(m));
    out << within_three << "/" << chains << " same-s pairs (s != +-m) joined by at most 3 jumps; longest "
        << longest << '\n';
    if (!two_jump.is_null()) {
      out << "pair needing more than one jump: " << two_jump[0].get<std::string>() << " -> "
          << two_jump[1].get<std::string>() << '\n';
    }
    out << "1 and -1 " << (antipodes_apart ? "are not" : "ARE") << " connected by jumps\n";
    report["jump_pairs"] = chains;
    report["jump_within_three"] = within_three;
    report["longest_chain"] = longest;
    report["needs_two_jumps"] = two_jump;
    report["antipodes_apart"] = antipodes_apart;
    ok = ok && within_three == chains && antipodes_apart;
  }
  maybe_write_json(config, report);
  return ok ? kExitOk : kExitVerification;
}

int cmd_curve(const CommandConfig& config, std::ostream& out) {
  if (config.input.empty()) throw UsageError("curve needs --input SPEC.json");
  CurveSpec spec;
  try {
    spec = curve_spec_from_json(Json::parse(read_file(config.input)));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad curve spec JSON: ") + e.what());
  }
  const double fastest = *std::max_element(spec.a().begin(), spec.a().end());
  const int needed = static_cast<int>(std::ceil(fastest / (kLiftStepGuard / 2))) + 1;
  const int samples = std::max(config.samples.value_or(65), needed);
  const FramePath path = frame_path(spec, samples);
  double min_w = std::numeric_limits<double>::infinity();
  for (double t : path.times) min_w = std::min(min_w, wronskian(spec, t));
  const auto cell = decompose(path.frames.back()).q0;
  const SpinNumeric endpoint = spin_endpoint(spec);
  Json spin = nullptr;
  Json sign = nullptr;
  std::string spin_text = "not over D_m";
  try {
    const auto snapped = snap_to_exact(endpoint, config.tol.value_or(1e-6));
    spin = to_json(snapped.element);
    spin_text = format_spin(snapped.element);
    if (snapped.element == ExactSpinElement::one(spec.dimension())) sign = 1;
    if (snapped.element == ExactSpinElement::minus_one(spec.dimension())) sign = -1;
  } catch (const SnapError&) {
  }
  out << "min sampled Wronskian " << min_w << '\n';
  out << "endpoint cell " << cell.to_string() << '\n';
  out << "endpoint spin lift " << spin_text << '\n';
  maybe_write_json(config, Json{{"spec", to_json(spec)},
                                {"path", to_json(path)},
                                {"min_wronskian", min_w},
                                {"endpoint_cell", cell.to_string()},
                                {"endpoint_spin", spin},
                                {"endpoint_sign", sign}});
  return min_w > 0.0 ? kExitOk : kExitVerification;
}

int cmd_selftest(const CommandConfig& config, std::ostream& out) {
  const auto results = run_selftest(config.seed, config.samples.value_or(200));
  long long passed = 0;
  long long total = 0;
  Json suites = Json::array();
  for (const auto& r : results) {
    out << (r.ok() ? "pass " : "FAIL ") << r.module << ": " << r.check << " (" << r.passed << "/" << r.total
        << ")\n";
    suites.push_back(Json{{"module", r.module}, {"check", r.check}, {"passed", r.passed}, {"total", r.total}});
    passed += r.ok() ? 1 : 0;
    ++total;
  }
  out << passed << "/" << total << " suites passed\n";
  maybe_write_json(config, Json{{"seed", config.seed}, {"suites", suites}});
  return passed == total ? kExitOk : kExitVerification;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "enumerate") return cmd_enumerate(config, out);
    if (config.subcommand == "classify") return cmd_classify(config, out);
    if (config.subcommand == "decompose") return cmd_decompose(config, out);
    if (config.subcommand == "chop-verify") return cmd_chop_verify(config, out);
    if (config.subcommand == "transit") return cmd_transit(config, out);
    if (config.subcommand == "curve") return cmd_curve(config, out);
    if (config.subcommand == "selftest") return cmd_selftest(config, out);
    err << "unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "verification error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl group, spin cover and locally convex curve toolkit"};
  app.require_subcommand(1);
  CommandConfig config;
  std::optional<int> n;
  std::optional<int> m;

  const auto add_size = [&](CLI::App* sub) {
    auto* n_opt = sub->add_option("--n", n, "sphere dimension n (m = n + 1)");
    auto* m_opt = sub->add_option("--m", m, "matrix size m");
    n_opt->excludes(m_opt);
    sub->add_flag("--force", config.force, "lift the size guards");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", config.json_path, "write a JSON report");
    sub->add_option("--seed", config.seed, "seed for randomized checks");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list D_m or its double cover");
  add_size(enumerate);
  add_common(enumerate);
  enumerate->add_flag("--spin", config.spin, "enumerate the double cover");

  auto* classify = app.add_subcommand("classify", "classify under TR, AD, chop and Delta");
  add_size(classify);
  add_common(classify);
  classify->add_flag("--spin", config.spin, "classify the double cover");
  classify->add_option("--csv", config.csv_path, "write the class table as CSV");
  classify->add_flag("--timing", config.timing, "report elapsed time");

  auto* decompose = app.add_subcommand("decompose", "Bruhat decomposition of a matrix file");
  add_common(decompose);
  decompose->add_option("--input", config.input, "matrix file (text rows or JSON)")->required();
  decompose->add_option("--tol", config.tol, "pivot floor");

  auto* chop = app.add_subcommand("chop-verify", "check germ cells against Delta(Q) A");
  chop->set_help_flag("--help", "print this help and exit");
  add_size(chop);
  add_common(chop);
  chop->add_flag("--spin", config.spin, "also check chop on the double cover");
  chop->add_option("--samples", config.samples, "tridiagonal logs per element");
  chop->add_option("--h", config.h, "germ offset");

  auto* transit = app.add_subcommand("transit", "transit witnesses and jump chains");
  add_size(transit);
  add_common(transit);
  transit->add_flag("--spin", config.spin, "also search jump chains");
  transit->add_option("--d1", config.d1, "first diagonal, e.g. [1,-1,-1,1]");
  transit->add_option("--d2", config.d2, "second diagonal");

  auto* curve = app.add_subcommand("curve", "sample a spiral curve and its Frenet frames");
  add_common(curve);
  curve->add_option("--input", config.input, "spec JSON {\"n\":..,\"c\":[..],\"a\":[..]}")->required();
  curve->add_option("--samples", config.samples, "time samples");
  curve->add_option("--tol", config.tol, "snap tolerance for the spin endpoint");

  auto* selftest = app.add_subcommand("selftest", "run every module's invariant suite");
  add_common(selftest);
  selftest->add_option("--samples", config.samples, "random cases per sampled suite");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (n) config.m = *n + 1;
  if (m) config.m = *m;
  return run(config, out, err);
}

}  // namespace lcurve::cli
