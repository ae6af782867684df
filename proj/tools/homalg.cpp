// Command-line surface of the workbench. One subcommand per operation:
//
//   validate, resolve, ext, tor, check-pdc, check-dedualizing,
//   check-dualizing, membership, class-axioms, generator-step, relative-iv,
//   roundtrip
//
// Exit codes: 0 = all pass, 1 = any fail, 2 = window-limited only.

#include <CLI11.hpp>

#include <iostream>

#include "homalg/io.hpp"

using namespace homalg;

namespace {

struct Cli {
  std::string workspace;
  int window = 8;
  std::string field;
  std::string report_path;
  std::uint64_t seed = 0;

  std::string candidate, module_name, complex_name, extension, cls;
  std::vector<std::string> e_list, f_list;
  int degree = 0, l1 = 0, l2 = 0;
  bool injective = false;
};

FieldSpec parse_field_flag(const std::string& s) {
  if (s == "rationals" || s == "Q") return FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return FieldSpec::prime_field(std::stoll(s.substr(3)));
    } catch (const std::exception&) {
      throw SchemaError("--field fp:P needs a prime P, got '" + s + "'");
    }
  }
  throw SchemaError("--field must be 'rationals' or 'fp:P' for a prime P");
}

void print_summary(const Json& rep) {
  std::string op = rep.value("op", std::string("task"));
  std::cout << op << ": ";
  if (rep.value("refused", false)) {
    std::cout << "refused (" << rep.value("refusal", std::string()) << ")";
  } else if (rep.contains("verdict")) {
    std::cout << rep["verdict"].get<std::string>();
    if (rep.contains("witness-degree")) std::cout << " (witness degree " << rep["witness-degree"] << ")";
  } else if (rep.contains("dimension")) {
    std::cout << "dimension " << rep["dimension"];
  } else if (rep.contains("terminated")) {
    std::cout << (rep["terminated"].get<bool>() ? "terminated" : "window exhausted");
  } else {
    std::cout << "ok";
  }
  std::cout << "\n";
  if (rep.contains("checks"))
    for (const auto& c : rep["checks"]) {
      std::cout << "  " << c["name"].get<std::string>() << ": "
                << c["verdict"].get<std::string>();
      if (c.contains("detail")) std::cout << " -- " << c["detail"].get<std::string>();
      std::cout << "\n";
    }
  if (rep.contains("base-change"))
    std::cout << "  base-change agreement: "
              << (rep["base-change"]["agree"].get<bool>() ? "agree" : "disagree") << "\n";
}

template <class K>
int run(const Cli& c, const Task& task) {
  Workspace<K> ws = load_workspace<K>(c.workspace);
  ResolutionWindow w{c.window};
  Json reports = Json::array();
  int code = 0;
  TaskOutcome first = run_task(ws, task, w, c.seed);
  reports.push_back(std::move(first.report));
  code = first.exit;
  if (task.op == "validate") {
    auto [task_reports, task_code] = run_tasks(ws, w, c.seed);
    for (auto& r : task_reports) reports.push_back(std::move(r));
    code = combine_exit(code, task_code);
  }
  Json out;
  out["workspace"] = c.workspace;
  out["reports"] = std::move(reports);
  if (!audit_certificates(out)) {
    std::cerr << "error: report contains a pass-exact verdict without a certificate\n";
    code = 1;
  }
  for (const auto& r : out["reports"]) print_summary(r);
  if (!c.report_path.empty()) save_report(out, c.report_path);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological-algebra workbench for finite-dimensional algebras"};
  app.require_subcommand(1);
  Cli c;
  Task task;

  auto make_sub = [&](const std::string& name, const std::string& desc,
                      const std::function<void(CLI::App*)>& extra) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("workspace", c.workspace, "workspace JSON file")->required();
    sub->add_option("--window", c.window, "resolution window depth")->capture_default_str();
    sub->add_option("--field", c.field, "scalar field: 'rationals' or 'fp:P'");
    sub->add_option("--report", c.report_path, "write the full JSON report to this path");
    sub->add_option("--seed", c.seed, "seed for generated test sweeps");
    extra(sub);
    sub->callback([&c, &task, sub, name] {
      task.op = name;
      auto has = [&](const char* o) {
        const CLI::Option* op = sub->get_option_no_throw(o);
        return op != nullptr && op->count() > 0;
      };
      if (has("--candidate")) task.args["candidate"] = c.candidate;
      if (has("--module")) task.args["module"] = c.module_name;
      if (has("--complex")) task.args["complex"] = c.complex_name;
      if (has("--extension")) task.args["extension"] = c.extension;
      if (has("--class")) task.args["class"] = c.cls;
      if (has("--degree")) task.args["degree"] = c.degree;
      if (has("--l1")) task.args["l1"] = c.l1;
      if (has("--l2")) task.args["l2"] = c.l2;
      if (has("--e")) task.args["e"] = c.e_list;
      if (has("--f")) task.args["f"] = c.f_list;
      if (has("--injective")) task.args["injective"] = true;
    });
    return sub;
  };

  make_sub("validate", "load a workspace, re-verify every invariant, run its task list",
           [](CLI::App*) {});
  make_sub("resolve", "projective resolution (or injective coresolution) of a module or complex",
           [&](CLI::App* s) {
             s->add_option("--module", c.module_name, "module to resolve");
             s->add_option("--complex", c.complex_name, "complex to resolve");
             s->add_flag("--injective", c.injective, "build an injective coresolution instead");
           });
  auto derived_opts = [&](CLI::App* s) {
    s->add_option("--candidate", c.candidate, "pseudo-dualizing candidate")->required();
    s->add_option("--module", c.module_name, "second argument as a one-term complex");
    s->add_option("--complex", c.complex_name, "second argument complex");
    s->add_option("--degree", c.degree, "degree to compute")->required();
  };
  make_sub("ext", "Ext in one degree, strategy-checked", derived_opts);
  make_sub("tor", "Tor in one degree, strategy-checked", derived_opts);
  auto cand_only = [&](CLI::App* s) {
    s->add_option("--candidate", c.candidate, "pseudo-dualizing candidate")->required();
  };
  make_sub("check-pdc", "homothety and self-Ext conditions on a candidate", cand_only);
  make_sub("check-dedualizing", "finite projective resolutions on both sides", cand_only);
  make_sub("check-dualizing", "finite injective coresolutions on both sides", cand_only);
  make_sub("membership", "Bass / Auslander class membership of one module", [&](CLI::App* s) {
    cand_only(s);
    s->add_option("--module", c.module_name, "module to test")->required();
    s->add_option("--class", c.cls, "'bass' or 'auslander'")->required();
    s->add_option("--l1", c.l1, "vanishing bound (default: candidate support bound)");
  });
  auto class_opts = [&](CLI::App* s) {
    cand_only(s);
    s->add_option("--e", c.e_list, "Bass-class sample (module names)")->required();
    s->add_option("--f", c.f_list, "Auslander-class sample (module names)")->required();
    s->add_option("--l2", c.l2, "representability bound (default: candidate support bound)");
  };
  make_sub("class-axioms", "conditions (I)-(IV) on class samples", [&](CLI::App* s) {
    class_opts(s);
    s->add_option("--l1", c.l1, "vanishing bound (default: candidate support bound)");
  });
  make_sub("generator-step", "one step of the minimal-class generation process", class_opts);
  make_sub("relative-iv", "base-change condition for an algebra extension", [&](CLI::App* s) {
    s->add_option("--extension", c.extension, "extension entry")->required();
    s->add_option("--module", c.module_name, "also test membership base change on this module");
    s->add_option("--l1", c.l1, "vanishing bound (default: candidate support bound)");
  });
  make_sub("roundtrip", "bounded adjunction round trip on a complex", [&](CLI::App* s) {
    cand_only(s);
    s->add_option("--module", c.module_name, "complex given as a one-term module");
    s->add_option("--complex", c.complex_name, "complex to round-trip");
    s->add_option("--class", c.cls, "'bass' (default) or 'auslander'");
    s->add_option("--l1", c.l1, "vanishing bound (default: candidate support bound)");
  });

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<FieldSpec> file_field = peek_field(c.workspace);
    std::optional<FieldSpec> flag_field;
    if (!c.field.empty()) flag_field = parse_field_flag(c.field);
    if (flag_field && file_field &&
        (flag_field->kind != file_field->kind ||
         flag_field->characteristic != file_field->characteristic))
      throw SchemaError("--field disagrees with the workspace field declaration");
    FieldSpec fs = flag_field   ? *flag_field
                   : file_field ? *file_field
                                : FieldSpec::rationals();
    if (fs.kind == FieldSpec::Kind::PrimeField) {
      Fp::set_modulus(fs.characteristic);
      return run<Fp>(c, task);
    }
    return run<Rational>(c, task);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
