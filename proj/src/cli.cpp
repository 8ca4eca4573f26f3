#include "pstab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "pstab/bottleneck.hpp"
#include "pstab/instance.hpp"
#include "pstab/interpolation.hpp"
#include "pstab/order.hpp"
#include "pstab/persistence.hpp"
#include "pstab/stability.hpp"

namespace pstab {

namespace {

std::string show(const Rational& r) {
  if (has_terminating_decimal(r)) return to_token(r);
  return to_decimal(r) + " (" + to_fraction(r) + ")";
}

std::string show(const Extended& e) { return e.is_infinite() ? "inf" : show(e.value()); }

const FiltrationFunction& function_of(const InstanceFile& inst, int which) {
  if (which < 0 || static_cast<std::size_t>(which) >= inst.functions.size())
    throw Error(Errc::parse_error, inst.path + " has no function " + std::to_string(which));
  return inst.functions[static_cast<std::size_t>(which)];
}

void require_two(const InstanceFile& inst) {
  if (inst.functions.size() != 2)
    throw Error(Errc::parse_error, inst.path + " must carry two functions per simplex");
}

struct Options {
  std::string file;
  std::string file2;
  int function = 0;
  std::optional<int> dim;
  bool diagonal = false;
  bool show_matching = false;
  bool machine = false;
  bool random = false;
  unsigned trials = 100;
  GeneratorConfig gen;
  std::string output;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const InstanceFile inst = parse_instance_file(o.file);
  out << "valid complex: " << inst.complex.size() << " simplices, dimension "
      << inst.complex.max_dim() << "\n";
  for (std::size_t i = 0; i < inst.functions.size(); ++i) {
    out << "f" << i << ": monotone, "
        << (has_unique_values(inst.functions[i]) ? "unique values" : "has ties") << "\n";
  }
  return exit_ok;
}

int cmd_order(const Options& o, std::ostream& out) {
  const InstanceFile inst = parse_instance_file(o.file);
  const auto& f = function_of(inst, o.function);
  const TotalOrder ord = total_order(inst.complex, f);
  for (std::size_t p = 0; p < ord.size(); ++p) {
    const std::size_t s = ord.simplex_at(p);
    out << p << ' ' << inst.complex[s].to_string() << ' ' << to_token(f[s]) << '\n';
  }
  return exit_ok;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const InstanceFile inst = parse_instance_file(o.file);
  const Diagram d = diagram(inst.complex, function_of(inst, o.function), o.function);
  out << format_diagram(inst.complex, d, o.dim);
  return exit_ok;
}

int cmd_bottleneck(const Options& o, std::ostream& out) {
  const InstanceFile a = parse_instance_file(o.file);
  Diagram d0;
  Diagram d1;
  if (o.file2.empty()) {
    require_two(a);
    d0 = diagram(a.complex, a.functions[0], 0);
    d1 = diagram(a.complex, a.functions[1], 1);
  } else {
    const InstanceFile b = parse_instance_file(o.file2);
    d0 = diagram(a.complex, function_of(a, o.function), 0);
    d1 = diagram(b.complex, function_of(b, o.function), 1);
  }
  const BottleneckResult r = o.diagonal ? bottleneck_diagonal(d0, d1) : bottleneck_bijection(d0, d1);
  out << "distance " << show(r.cost) << '\n';
  if (o.show_matching) {
    for (const auto& [i, j] : r.matching.pairs)
      out << "match " << d0.points[i].dim << ' ' << i << ' ' << j << '\n';
    for (std::size_t i : r.matching.diagonal0)
      out << "diagonal0 " << d0.points[i].dim << ' ' << i << '\n';
    for (std::size_t j : r.matching.diagonal1)
      out << "diagonal1 " << d1.points[j].dim << ' ' << j << '\n';
  }
  return exit_ok;
}

int cmd_crossings(const Options& o, std::ostream& out) {
  const InstanceFile inst = parse_instance_file(o.file);
  require_two(inst);
  const CrossingSchedule s = crossing_times(inst.functions[0], inst.functions[1]);
  out << "breakpoints " << s.size() << '\n';
  for (const auto& c : s.crossings) {
    out << to_fraction(c.t) << ' ' << to_decimal(c.t);
    for (const auto& [i, j] : c.pairs)
      out << " {" << inst.complex[i].to_string() << "}={" << inst.complex[j].to_string() << '}';
    out << '\n';
  }
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.random) {
    const InstanceFile inst = parse_instance_file(o.file);
    require_two(inst);
    const StabilityReport r = verify_stability(inst.complex, inst.functions[0], inst.functions[1]);
    out << format_report(r, o.machine);
    return r.holds ? exit_ok : exit_proof_violation;
  }
  unsigned held = 0;
  for (unsigned i = 0; i < o.trials; ++i) {
    GeneratorConfig cfg = o.gen;
    cfg.seed = o.gen.seed + i;
    cfg.num_functions = 2;
    const InstanceFile inst = generate_instance(cfg);
    const StabilityReport r = verify_stability(inst.complex, inst.functions[0], inst.functions[1]);
    held += r.holds ? 1 : 0;
    out << "trial " << i << " seed " << cfg.seed << " simplices " << inst.complex.size()
        << " breakpoints " << r.schedule.size() << " sup_norm " << to_token(r.sup_norm)
        << " composed " << to_token(r.composed_cost) << " bottleneck "
        << to_token(r.exact_bottleneck) << (r.holds ? " HOLDS" : " FAILS") << '\n';
  }
  out << "holds " << held << '/' << o.trials << '\n';
  return held == o.trials ? exit_ok : exit_proof_violation;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const std::string text = print_instance(generate_instance(o.gen));
  if (o.output.empty()) {
    out << text;
    return exit_ok;
  }
  std::ofstream file(o.output);
  if (!file) throw Error(Errc::parse_error, "cannot write " + o.output);
  file << text;
  return exit_ok;
}

void add_generator_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.gen.seed, "Random seed");
  cmd->add_option("--vertices", o.gen.num_vertices, "Number of vertices");
  cmd->add_option("--prob", o.gen.fill_probability, "Keep probability per candidate simplex")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--max-dim", o.gen.max_dimension, "Maximum simplex dimension")
      ->check(CLI::Range(0, 16));
  cmd->add_option("--min-value", o.gen.value_min, "Smallest integer value drawn");
  cmd->add_option("--max-value", o.gen.value_max, "Largest integer value drawn");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistence diagrams, bottleneck distances and stability certificates", "pstab"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a complex/function file");
  validate->add_option("file", o.file)->required();

  auto* order = app.add_subcommand("order", "Print the total order used by the reduction");
  order->add_option("file", o.file)->required();
  order->add_option("--function", o.function, "Which function (0 or 1)");

  auto* dgm = app.add_subcommand("diagram", "Print the persistence diagram");
  dgm->add_option("file", o.file)->required();
  dgm->add_option("--function", o.function, "Which function (0 or 1)");
  dgm->add_option("--dim", o.dim, "Only points of this homology dimension");

  auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagrams");
  bn->add_option("file", o.file, "Instance with two functions, or first of two instances")
      ->required();
  bn->add_option("file2", o.file2, "Second instance");
  bn->add_option("--function", o.function, "Function used from each file when two are given");
  bn->add_flag("--diagonal", o.diagonal, "Allow matching points to the diagonal");
  bn->add_flag("--matching", o.show_matching, "Print the witness matching");

  auto* cross = app.add_subcommand("crossings", "Breakpoints of the linear interpolation");
  cross->add_option("file", o.file)->required();

  auto* verify = app.add_subcommand("verify", "Certify d_B(Dgm f0, Dgm f1) <= ||f0 - f1||");
  verify->add_option("file", o.file);
  verify->add_flag("--machine", o.machine, "key=value output");
  verify->add_flag("--random", o.random, "Verify generated instances instead of a file");
  verify->add_option("--trials", o.trials, "Number of generated instances");
  add_generator_flags(verify, o);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  add_generator_flags(gen, o);
  gen->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_user_error;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (order->parsed()) return cmd_order(o, out);
    if (dgm->parsed()) return cmd_diagram(o, out);
    if (bn->parsed()) return cmd_bottleneck(o, out);
    if (cross->parsed()) return cmd_crossings(o, out);
    if (verify->parsed()) {
      if (!o.random && o.file.empty()) {
        err << "error: verify needs a file or --random\n";
        return exit_user_error;
      }
      return cmd_verify(o, out);
    }
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.internal() ? exit_proof_violation : exit_user_error;
  }
  return exit_user_error;
}

}  // namespace pstab
