#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "gtensor/congruence.hpp"
#include "gtensor/constraint.hpp"
#include "gtensor/hom_tensor.hpp"
#include "gtensor/io.hpp"
#include "gtensor/product.hpp"
#include "gtensor/suites.hpp"

using namespace gtensor;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kMissingStructure = 3, kBudgetExceeded = 4 };

struct Options {
  std::string process;
  std::string spec;
  std::string order;
  std::string d;
  std::string family;
  std::string congruence;
  std::string homs;
  std::string format = "json";
  std::string suite = "all";
  std::string compare;
  std::string index;
  std::optional<std::uint64_t> budget;
  bool normalize = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SearchBudget budget_of(const Options& o) { return o.budget ? SearchBudget{*o.budget} : SearchBudget::standard(); }

GraphFamily load_family(const Options& o) {
  if (o.family.empty()) throw Error(ErrorKind::ParseError, "--family is required");
  GraphFamily fam = io::family_from_json(io::read_json_file(o.family));
  if (!o.order.empty()) fam = fam.with_order(split_list(o.order));
  if (!o.d.empty()) fam = fam.with_distinguished(split_list(o.d));
  return fam;
}

ProductProcess process_of(const std::string& name) {
  const auto kind = parse_builtin(name);
  if (!kind) throw Error(ErrorKind::UnknownSymbol, "unknown process " + name);
  return ProductProcess::builtin(*kind);
}

ProductProcess load_process(const Options& o) {
  if (!o.process.empty() && !o.spec.empty()) throw Error(ErrorKind::ParseError, "give --process or --spec, not both");
  if (!o.spec.empty()) return ProductProcess::constraints(parse_constraints(o.spec));
  if (o.process.empty()) throw Error(ErrorKind::ParseError, "--process is required");
  return process_of(o.process);
}

void emit_graph(const Graph& g, const Options& o) {
  if (o.format == "dot") {
    std::cout << io::to_dot(g);
  } else {
    std::cout << io::graph_to_json(g).dump(2) << "\n";
  }
}

int cmd_product(const Options& o) {
  const auto fam = load_family(o);
  emit_graph(build_product(load_process(o), fam, budget_of(o)), o);
  return kOk;
}

int cmd_quotient(const Options& o) {
  if (!o.congruence.empty()) {
    emit_graph(quotient(io::congruence_from_json(io::read_json_file(o.congruence))).graph, o);
    return kOk;
  }
  const auto fam = load_family(o);
  if (o.index.empty()) throw Error(ErrorKind::ParseError, "--congruence or --index is required");
  emit_graph(p_of_factor(load_process(o), fam, fam.position_of(o.index), budget_of(o)), o);
  return kOk;
}

int cmd_tensor(const Options& o) {
  if (o.homs.empty()) throw Error(ErrorKind::ParseError, "--homs is required");
  const auto hf = io::hom_family_from_json(io::read_json_file(o.homs));
  const auto proc = load_process(o);
  const auto budget = budget_of(o);
  const VertexMap phi = product_of_homs(proc, hf, budget);
  io::Json map = io::Json::object();
  for (std::size_t v = 0; v < phi.domain.order(); ++v) map[phi.domain.label(v)] = phi.codomain.label(phi.image[v]);
  const auto report = check_hom_preserving(proc, hf, budget);
  io::Json out;
  out["map"] = map;
  out["homomorphism"] = report.homomorphism;
  if (report.homomorphism) {
    out["graph"] = io::graph_to_json(graph_of_hom(phi));
  } else {
    out["witness"] = report.witness;
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto report = suites::run(o.suite, budget_of(o));
  std::cout << suites::format(report);
  std::cout << "summary suite=" << o.suite << " checks=" << report.lines.size() << " failures=" << report.failures()
            << "\n";
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_constraint(const Options& o) {
  const auto spec = parse_constraints(o.spec);
  if (o.normalize || o.family.empty()) {
    std::cout << to_string(spec) << "\n";
    return kOk;
  }
  const auto fam = load_family(o);
  const auto budget = budget_of(o);
  const auto dsl = ProductProcess::constraints(spec);
  const auto vs = product_vertices(fam, budget);
  if (!o.compare.empty()) {
    const auto other = process_of(o.compare);
    for (std::size_t u = 0; u < vs.size(); ++u) {
      for (std::size_t v = u; v < vs.size(); ++v) {
        if (adjacent(dsl, vs[u], vs[v], fam, budget) != adjacent(other, vs[u], vs[v], fam, budget)) {
          std::cout << "differs " << product_label(vs[u], fam) << " " << product_label(vs[v], fam) << "\n";
          return kVerifyFailed;
        }
      }
    }
    std::cout << "equivalent\n";
    return kOk;
  }
  for (std::size_t u = 0; u < vs.size(); ++u) {
    for (std::size_t v = u + 1; v < vs.size(); ++v) {
      std::cout << product_label(vs[u], fam) << " " << product_label(vs[v], fam) << " "
                << (adjacent(dsl, vs[u], vs[v], fam, budget) ? "adjacent" : "not-adjacent") << "\n";
    }
  }
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MissingStructure: return kMissingStructure;
    case ErrorKind::SearchBudgetExceeded: return kBudgetExceeded;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized graph products, quotients and tensor checks"};
  app.require_subcommand(1);
  Options o;

  auto add_process = [&](CLI::App* cmd) {
    cmd->add_option("--process", o.process, "cartesian, direct, strong, lex or d");
    cmd->add_option("--spec", o.spec, "constraint spec used as the process");
    cmd->add_option("--order", o.order, "index order, smallest first: i,j,...");
    cmd->add_option("--D", o.d, "distinguished indices: i,...");
  };
  auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--budget", o.budget, "search budget cap"); };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* product = app.add_subcommand("product", "build a product graph");
  add_process(product);
  product->add_option("--family", o.family, "family JSON file")->required();
  add_format(product);
  add_budget(product);

  auto* quotient = app.add_subcommand("quotient", "quotient by a congruence, or a factor quotient P(G_i)");
  quotient->add_option("--congruence", o.congruence, "congruence JSON file");
  add_process(quotient);
  quotient->add_option("--family", o.family, "family JSON file");
  quotient->add_option("--index", o.index, "index label i");
  add_format(quotient);
  add_budget(quotient);

  auto* tensor = app.add_subcommand("tensor", "tensor product of a homomorphism family");
  add_process(tensor);
  tensor->add_option("--homs", o.homs, "hom family JSON file")->required();
  add_budget(tensor);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_choices = suites::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_choices));
  add_budget(verify);

  auto* constraint = app.add_subcommand("constraint", "parse a constraint spec");
  constraint->add_option("--spec", o.spec, "constraint spec")->required();
  constraint->add_option("--family", o.family, "family JSON file");
  constraint->add_option("--order", o.order, "index order, smallest first: i,j,...");
  constraint->add_option("--D", o.d, "distinguished indices: i,...");
  constraint->add_option("--compare", o.compare, "built-in process to compare against");
  constraint->add_flag("--normalize", o.normalize, "print the canonical spec");
  add_budget(constraint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*product) return cmd_product(o);
    if (*quotient) return cmd_quotient(o);
    if (*tensor) return cmd_tensor(o);
    if (*verify) return cmd_verify(o);
    return cmd_constraint(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}
