#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "nodalsplit/errors.hpp"

namespace {

// Exit codes: 0 pass, 1 contradiction, 2 undetermined, 3 bad input,
// 4 internal failure, 64 usage.
constexpr int kInputError = 3;
constexpr int kInternalError = 4;
constexpr int kUsageError = 64;

}  // namespace

int main(int argc, char** argv) {
  using namespace nodalsplit::app;
  CLI::App app{"Splitting types of nodal curves with respect to contact conics"};
  app.require_subcommand(1);
  bool json = false;
  RunOptions opts;
  app.add_flag("--json", json, "machine-readable report");
  app.add_option("--height", opts.height, "height bound for rational points on conics")->check(CLI::PositiveNumber);
  app.add_option("--seed-shear", opts.seed, "first shear index for singular-locus checks")->check(CLI::NonNegativeNumber);

  std::string id, curve, conic, nodes, g2, g3, g4, surface;
  std::optional<std::string> opt_nodes;

  auto* verify = app.add_subcommand("verify-example", "run the checks of a built-in example");
  verify->add_option("id", id, "split6, nonsplit6a, nonsplit6b, split7-33, split7-24 or nonsplit7")->required();

  auto* an = app.add_subcommand("analyze", "contact, nodes and splitting of a plane curve");
  an->add_option("--curve", curve, "form or file")->required();
  an->add_option("--conic", conic, "form or file")->required();
  an->add_option("--nodes", opt_nodes, "node file or JSON text");

  auto* pb = app.add_subcommand("pullback", "pullback along (s:t, u:v) -> (su : tv : sv+tu)");
  pb->add_option("--curve", curve, "form or file")->required();

  auto* st = app.add_subcommand("split-type", "splitting type with evidence");
  st->add_option("--curve", curve, "form or file")->required();
  st->add_option("--conic", conic, "form or file")->required();
  st->add_option("--nodes", nodes, "node file or JSON text")->required();

  auto* pq = app.add_subcommand("project-quartic", "branch sextic and conic of g2*w^2 + 2*g3*w + g4");
  pq->add_option("--g2", g2)->required();
  pq->add_option("--g3", g3)->required();
  pq->add_option("--g4", g4)->required();

  auto* sy = app.add_subcommand("syzygetic", "syzygetic test for a nodal quartic surface");
  sy->add_option("--surface", surface, "form in x, y, z, w or file")->required();
  sy->add_option("--nodes", nodes, "node file or JSON text")->required();

  for (auto* sub : {verify, an, pb, st, pq, sy}) {
    sub->add_flag("--json", json, "machine-readable report");
    sub->add_option("--height", opts.height, "height bound for rational points on conics")->check(CLI::PositiveNumber);
    sub->add_option("--seed-shear", opts.seed, "first shear index")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    Report rep;
    if (*verify)
      rep = verify_example(id, opts);
    else if (*an)
      rep = analyze(curve, conic, opt_nodes, opts);
    else if (*pb)
      rep = pullback(curve, opts);
    else if (*st)
      rep = split_type(curve, conic, nodes, opts);
    else if (*pq)
      rep = project_quartic(g2, g3, g4, opts);
    else
      rep = syzygetic(surface, nodes, opts);
    std::cout << (json ? rep.json() : rep.human());
    return rep.exit_code();
  } catch (const nodalsplit::Error& e) {
    std::cerr << "error [" << nodalsplit::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
