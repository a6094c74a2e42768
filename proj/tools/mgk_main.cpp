// mgk: command-line front end for finite multi-group spaces.
//
//   mgk validate gf3.mgs
//   mgk subspace gf3.mgs --set 0 --ops +
//   mgk maximal-series z2z3.mgs --order a,b --json

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mgk/commands.hpp"

namespace {

struct Invocation {
  std::string instance;
  mgk::CommandOptions options;
  std::string set, ops, order;
  std::size_t bound = 0;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Invocation& inv, bool wants_set, bool wants_order) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("instance", inv.instance, "instance file (.mgs)")->required();
  if (wants_set) {
    sub->add_option("--set", inv.set, "comma-separated elements")->required();
    if (name != "span") sub->add_option("--ops", inv.ops, "comma-separated operations to keep");
  }
  if (wants_order) sub->add_option("--order", inv.order, "oriented operation sequence, e.g. a,b");
  sub->add_option("--exhaustive-bound", inv.bound, "size bound for exhaustive searches");
  sub->add_flag("--json", inv.options.json, "emit the report as JSON");
  sub->add_flag("--timing", inv.options.timing, "add wall-clock time to the report");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multi-group space toolkit"};
  app.require_subcommand(1);
  Invocation inv;

  add_command(app, "validate", "check the multi-group space axioms", inv, false, false);
  add_command(app, "classify", "group / body / field / general", inv, false, false);
  add_command(app, "subspace", "subspace criteria (intersection and completeness readings)", inv, true, false);
  add_command(app, "cosets", "coset decomposition of the space by a subspace", inv, true, false);
  add_command(app, "normal", "normality by conjugation and by the intersection criterion", inv, true, false);
  add_command(app, "series", "build one normal series for an operation order", inv, false, true);
  add_command(app, "maximal-series", "enumerate maximal series and check length invariance", inv, false, true);
  add_command(app, "span", "one-step span and closure of a seed set", inv, true, false);
  add_command(app, "generators", "smallest generating set", inv, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto* sub = app.get_subcommands().front();
  auto given = [sub](const char* name) {
    const auto* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--set")) inv.options.set = inv.set;
  if (given("--ops")) inv.options.ops = inv.ops;
  if (given("--order")) inv.options.order = inv.order;
  if (given("--exhaustive-bound")) inv.options.exhaustive_bound = inv.bound;

  auto result = mgk::run_command_on_file(sub->get_name(), inv.instance, inv.options);
  std::cout << result.rendered;
  return static_cast<int>(result.exit);
}
