#include "commands.hpp"

#include "ratecap/error.hpp"

#include <iostream>

#include <CLI11.hpp>

int main(int argc, char** argv) {
  using namespace ratecap::cli;
  CLI::App app{"Screen loan cash flows against interest rate caps"};
  app.require_subcommand(1);
  Options opts;
  std::string mode = "exact";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--loan", opts.loan, "Loan document (JSON)")->required();
    sub->add_option("--cap", opts.cap, "Effective annual cap, e.g. 60%");
    sub->add_option("--floor", opts.floor, "Effective annual floor, e.g. 3%");
    sub->add_option("--config", opts.config, "Jurisdiction config (JSON); flags override it");
    sub->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--json", opts.json, "Print the JSON report");
    sub->add_option("--grid", opts.grid, "Oracle grid points")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    sub->add_option("--s-max", opts.s_max, "Upper end of the oracle scan (log rate)");
  };
  for (const char* name : {"classify", "irr", "joint", "oracle-check"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&opts, name] { opts.command = name; });
  }
  app.get_subcommand("classify")->description("Decide N+, N- and the weak cap; exit 0 legal, 3 usurious, 4 indeterminate");
  app.get_subcommand("irr")->description("Stream class, IRR and both refinements");
  app.get_subcommand("joint")->description("Floor plus ceiling with party at fault");
  app.get_subcommand("oracle-check")->description("Float sign scan and root brackets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "ratecap: " << e.what() << '\n';
    return kInputError;
  }
  opts.float_mode = mode == "float";

  try {
    const Outcome out = run(opts);
    if (opts.json)
      std::cout << out.report.dump(2) << '\n';
    else
      std::cout << render_text(out.report);
    return out.exit_code;
  } catch (const ratecap::Error& e) {
    std::cerr << "ratecap: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "ratecap: " << e.what() << '\n';
    return kInputError;
  }
}
