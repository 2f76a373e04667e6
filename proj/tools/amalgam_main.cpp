// Command-line front end; talks to the engine exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "amalgam/c_api.h"

namespace {

constexpr const char* kD8C4Spec = "central(D(8), C(4); r^2 = y^2)";

int exit_code(amg_status status) { return int(status); }

int fail(amg_status status) {
  std::fprintf(stderr, "error [%s]: %s\n", amg_status_name(status), amg_last_error());
  return exit_code(status);
}

struct LimitFlags {
  unsigned max_order = 0;
  unsigned max_enum = 0;

  void attach(CLI::App* cmd) {
    auto env_default = [](const char* name) -> unsigned {
      const char* v = std::getenv(name);
      return v ? unsigned(std::strtoul(v, nullptr, 10)) : 0;
    };
    max_order = env_default("AMALGAM_MAX_ORDER");
    max_enum = env_default("AMALGAM_MAX_ENUM");
    cmd->add_option("--max-order", max_order,
                    "largest constructible group order (default 4096; env AMALGAM_MAX_ORDER)");
    cmd->add_option("--max-enum", max_enum,
                    "subgroup enumeration cap (default 128; env AMALGAM_MAX_ENUM)");
  }
  amg_limits get() const { return {max_order, max_enum}; }
};

int run_classify(const std::string& spec, const LimitFlags& limits, bool json, bool text) {
  amg_group* group = nullptr;
  amg_limits lim = limits.get();
  amg_status st = amg_group_create(spec.c_str(), &lim, &group);
  if (st != AMG_OK) return fail(st);

  amg_report* report = nullptr;
  st = amg_group_classify(group, &report);
  if (st != AMG_OK) {
    amg_group_free(group);
    return fail(st);
  }

  if (text || !json) {
    char* out = nullptr;
    st = amg_report_render_text(report, &out);
    if (st == AMG_OK) std::fputs(out, stdout);
    amg_string_free(out);
  }
  if (st == AMG_OK && json) {
    char* out = nullptr;
    st = amg_report_render_json(report, &out);
    if (st == AMG_OK) std::fputs(out, stdout);
    amg_string_free(out);
  }
  amg_report_free(report);
  amg_group_free(group);
  return st == AMG_OK ? 0 : fail(st);
}

int run_check(const std::string& spec, const LimitFlags& limits, const std::string& subgroup,
              const std::string& property, const std::string& method) {
  amg_group* group = nullptr;
  amg_limits lim = limits.get();
  amg_status st = amg_group_create(spec.c_str(), &lim, &group);
  if (st != AMG_OK) return fail(st);

  char* out = nullptr;
  st = amg_group_check(group, subgroup.c_str(), property.c_str(), method.c_str(), &out);
  if (out) {
    std::fputs(out, stdout);
    amg_string_free(out);
  }
  amg_group_free(group);
  if (st == AMG_OK) return 0;
  if (st == AMG_HYPOTHESIS_NOT_MET) {
    std::fprintf(stderr, "note: %s\n", amg_last_error());
    return exit_code(st);
  }
  return fail(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group engine for central products: construction, classification and "
               "embedding-property checks"};
  app.set_version_flag("--version", amg_version());
  app.require_subcommand(1);
  app.footer("exit codes: 0 ok, 1 internal, 2 parse, 3 validation, 4 budget, 5 method "
             "disagreement, 6 hypothesis not met");

  std::string spec, subgroup, property, method = "all";
  bool json = false, text = false;

  auto* classify = app.add_subcommand("classify", "enumerate and classify every subgroup");
  classify->add_option("spec", spec, "group spec, e.g. \"central(D(8), C(4); r^2 = y^2)\"")
      ->required();
  classify->add_flag("--json", json, "emit the machine-readable document");
  classify->add_flag("--text", text, "emit the text table (default)");
  LimitFlags classify_limits;
  classify_limits.attach(classify);

  auto* check = app.add_subcommand("check", "decide one embedding property for one subgroup");
  check->add_option("spec", spec, "group spec")->required();
  check->add_option("--subgroup", subgroup, "comma-separated generator words, or \"diag\"")
      ->required();
  check->add_option("--property", property, "normal | subnormal | abnormal")->required();
  check->add_option("--method", method, "def | char | preimage | all (default all)");
  LimitFlags check_limits;
  check_limits.attach(check);

  auto* table = app.add_subcommand("table-d8c4", "classify the order-16 central product D8∘C4");
  table->add_flag("--json", json, "emit the machine-readable document");
  table->add_flag("--text", text, "emit the text table (default)");
  LimitFlags table_limits;
  table_limits.attach(table);

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) return run_classify(spec, classify_limits, json, text);
  if (check->parsed()) return run_check(spec, check_limits, subgroup, property, method);
  if (table->parsed()) return run_classify(kD8C4Spec, table_limits, json, text);
  return 0;
}
