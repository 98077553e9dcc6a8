#include "sgalg/cli.hpp"

#include "sgalg/json_report.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace sgalg {

namespace {

struct Options {
  std::string a, d, b;
  int k = 0;
  std::string format = "text";
  std::optional<long> box_x, box_y, box_sum;
  int mu_bound = kDefaultMuBound;
  bool skip_toric = false;
  bool timings = false;
};

LatticeVector lattice_arg(const std::string& text, const char* flag) {
  auto v = LatticeVector::from(parse_vector(text));
  if (!v) throw Error(std::string(flag) + " must have nonnegative coordinates: " + text);
  return *v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine semigroups <a, a+d, ..., a+kd> in N^2: invariants, ideals, resolutions"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--a", o.a, "first generator a as x,y")->required();
  app.add_option("--d", o.d, "common difference d as x,y")->required();
  app.add_option("--k", o.k, "number of steps k >= 2")->required();
  app.add_option("--b", o.b, "extra generator b as x,y");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--box-x", o.box_x, "verification box width");
  app.add_option("--box-y", o.box_y, "verification box height");
  app.add_option("--box-sum", o.box_sum, "bound on generators used in enumeration");
  app.add_option("--mu-bound", o.mu_bound, "largest multiple of b tried when searching mu")
      ->check(CLI::PositiveNumber);
  app.add_flag("--skip-toric", o.skip_toric, "skip the elimination cross-check");
  app.add_flag("--timings", o.timings, "include per-check timings (output is then not deterministic)");

  const char* commands[][2] = {
      {"analyze", "every invariant plus all checks"},
      {"ideal", "generators of the defining ideal"},
      {"groebner", "reduced Groebner basis and the Groebner claim"},
      {"hilbert", "Hilbert series numerator (k <= 4)"},
      {"resolution", "minimal free resolution (k <= 4)"},
      {"extend", "gluing data for the extension by b"},
      {"verify", "run all checks"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  Command command = parse_command(app.get_subcommands().front()->get_name());
  nlohmann::json report;
  try {
    std::optional<LatticeVector> b;
    if (!o.b.empty()) b = lattice_arg(o.b, "--b");
    SemigroupFamily f = build_family(lattice_arg(o.a, "--a"), lattice_arg(o.d, "--d"), o.k, b, o.mu_bound);

    ReportOptions ro;
    ro.include_toric = !o.skip_toric;
    ro.record_timings = o.timings;
    if (o.box_x || o.box_y || o.box_sum) {
      EnumerationBox box = default_box(f);
      if (o.box_x) box.cap_x = *o.box_x;
      if (o.box_y) box.cap_y = *o.box_y;
      box.cap_sum = o.box_sum;
      if (box.cap_x <= 0 || box.cap_y <= 0 || (box.cap_sum && *box.cap_sum <= 0))
        throw Error("box caps must be positive");
      ro.box = box;
    }
    report = build_report(f, command, ro);
  } catch (const FamilyError& e) {
    err << "invalid family (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (o.format == "json")
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
  return checks_passed(report) ? kExitOk : kExitCheckFailed;
}

}  // namespace sgalg
