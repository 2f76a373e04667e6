#include "amalgam/c_api.h"

#include <chrono>
#include <cstring>
#include <string>

#include "amalgam/embedding.hpp"
#include "amalgam/report.hpp"
#include "amalgam/specdsl.hpp"
#include "amalgam/version.hpp"
#include "amalgam/words.hpp"

using namespace amalgam;

struct amg_group {
  EvaluatedSpec spec;
  Limits limits;
};

struct amg_report {
  ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

amg_status status_of(const error& e) {
  switch (e.kind()) {
    case errc::parse: return AMG_ERR_PARSE;
    case errc::validation: return AMG_ERR_VALIDATION;
    case errc::budget: return AMG_ERR_BUDGET;
    case errc::disagreement: return AMG_ERR_DISAGREEMENT;
    case errc::hypothesis_not_met: return AMG_HYPOTHESIS_NOT_MET;
    case errc::internal: return AMG_ERR_INTERNAL;
  }
  return AMG_ERR_INTERNAL;
}

template <typename Fn>
amg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AMG_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Limits limits_from(const amg_limits* raw) {
  Limits lim;
  if (raw) {
    if (raw->max_order) lim.max_order = raw->max_order;
    if (raw->max_enum) lim.max_enum = raw->max_enum;
  }
  return lim;
}

Subgroup resolve_subgroup(const amg_group& g, const char* subgroup) {
  std::string text = subgroup ? subgroup : "";
  if (text == "diag") return diagonal_subgroup(g.spec);
  auto gens = parse_word_list(*g.spec.cp.group, text);
  return Subgroup::generated(g.spec.cp.group,
                             std::span<const elem_t>(gens.data(), gens.size()));
}

std::string run_check(const amg_group& g, const Subgroup& h, const std::string& property,
                      const std::string& method, amg_status& status) {
  const CentralProduct& cp = g.spec.cp;
  SubgroupProperty prop;
  if (property == "normal")
    prop = SubgroupProperty::normal;
  else if (property == "subnormal")
    prop = SubgroupProperty::subnormal;
  else if (property == "abnormal")
    prop = SubgroupProperty::abnormal;
  else
    throw validation_error("unknown property '" + property + "'");

  auto run = [&](Method m) -> EmbeddingVerdict {
    switch (prop) {
      case SubgroupProperty::normal:
        switch (m) {
          case Method::definition: return is_normal_definition(h);
          case Method::characterization: return is_normal_characterization(cp, h);
          case Method::preimage: return is_normal_preimage(cp, h);
        }
        break;
      case SubgroupProperty::subnormal:
        switch (m) {
          case Method::definition: return subnormal_defect_oracle(h);
          case Method::characterization: return subnormal_characterization_scan(cp, h);
          case Method::preimage: return is_subnormal_preimage(cp, h);
        }
        break;
      case SubgroupProperty::abnormal:
        switch (m) {
          case Method::definition: return is_abnormal_definition(h);
          case Method::characterization: return is_abnormal_central(cp, h);
          case Method::preimage: return is_abnormal_preimage(cp, h);
        }
        break;
    }
    throw internal_error("unreachable method dispatch");
  };

  std::vector<Method> methods;
  if (method == "def" || method == "definition")
    methods = {Method::definition};
  else if (method == "char" || method == "characterization")
    methods = {Method::characterization};
  else if (method == "preimage")
    methods = {Method::preimage};
  else if (method == "all" || method.empty())
    methods = {Method::definition, Method::characterization, Method::preimage};
  else
    throw validation_error("unknown method '" + method + "'");

  std::string out = "subgroup " + h.word() + " of order " + std::to_string(h.order()) + "\n";
  std::vector<EmbeddingVerdict> verdicts;
  for (Method m : methods) {
    verdicts.push_back(run(m));
    out += verdicts.back().describe() + "\n";
  }

  const EmbeddingVerdict* reference = nullptr;
  for (const auto& v : verdicts)
    if (v.state != VerdictState::hypothesis_not_met) {
      reference = &v;
      break;
    }
  if (reference) {
    for (const auto& v : verdicts) {
      if (v.state == VerdictState::hypothesis_not_met) continue;
      bool same = v.state == reference->state;
      if (same && prop == SubgroupProperty::subnormal && v.holds())
        same = v.defect == reference->defect;
      if (!same)
        throw disagreement_error("methods disagree on " + h.word() + ": " +
                                 reference->describe() + " vs " + v.describe());
    }
    if (methods.size() > 1) out += "agreement: ok\n";
    status = AMG_OK;
  } else {
    status = AMG_HYPOTHESIS_NOT_MET;
  }
  return out;
}

}  // namespace

extern "C" {

const char* amg_version(void) { return kVersion; }

const char* amg_status_name(amg_status status) {
  switch (status) {
    case AMG_OK: return "ok";
    case AMG_ERR_INTERNAL: return "internal error";
    case AMG_ERR_PARSE: return "parse error";
    case AMG_ERR_VALIDATION: return "validation error";
    case AMG_ERR_BUDGET: return "budget exceeded";
    case AMG_ERR_DISAGREEMENT: return "method disagreement";
    case AMG_HYPOTHESIS_NOT_MET: return "hypothesis not met";
    case AMG_ERR_ARGUMENT: return "bad argument";
  }
  return "unknown";
}

const char* amg_last_error(void) { return g_last_error.c_str(); }

amg_status amg_group_create(const char* spec_text, const amg_limits* limits, amg_group** out) {
  if (!spec_text || !out) {
    g_last_error = "spec_text and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> amg_status {
    Limits lim = limits_from(limits);
    SpecAST ast = parse_spec(spec_text);
    auto* g = new amg_group{evaluate_spec(ast, lim), lim};
    *out = g;
    return AMG_OK;
  });
}

void amg_group_free(amg_group* group) { delete group; }

uint32_t amg_group_order(const amg_group* group) {
  return group ? group->spec.cp.group->order() : 0;
}

amg_status amg_group_generators(const amg_group* group, char** out) {
  if (!group || !out) {
    g_last_error = "group and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  return guarded([&]() -> amg_status {
    std::string names;
    for (const auto& [n, idx] : group->spec.cp.group->generators()) {
      if (!names.empty()) names += ",";
      names += n;
    }
    *out = copy_string(names);
    return AMG_OK;
  });
}

amg_status amg_group_classify(const amg_group* group, amg_report** out) {
  if (!group || !out) {
    g_last_error = "group and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> amg_status {
    auto start = std::chrono::steady_clock::now();
    ClassificationReport rep = classify_subgroups(group->spec.cp, group->limits);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::vector<std::string> gen_names;
    for (const auto& [n, idx] : group->spec.cp.group->generators()) gen_names.push_back(n);
    *out = new amg_report{
        make_report(rep, group->spec.echo, std::move(gen_names), std::uint64_t(ms))};
    return AMG_OK;
  });
}

void amg_report_free(amg_report* report) { delete report; }

amg_status amg_report_render_text(const amg_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "report and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  return guarded([&]() -> amg_status {
    *out = copy_string(render_text(report->doc));
    return AMG_OK;
  });
}

amg_status amg_report_render_json(const amg_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "report and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  return guarded([&]() -> amg_status {
    *out = copy_string(render_json(report->doc));
    return AMG_OK;
  });
}

amg_status amg_group_check(const amg_group* group, const char* subgroup, const char* property,
                           const char* method, char** out) {
  if (!group || !subgroup || !property || !out) {
    g_last_error = "group, subgroup, property and out must be non-null";
    return AMG_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> amg_status {
    Subgroup h = resolve_subgroup(*group, subgroup);
    amg_status status = AMG_OK;
    std::string text = run_check(*group, h, property, method ? method : "all", status);
    *out = copy_string(text);
    if (status == AMG_HYPOTHESIS_NOT_MET)
      g_last_error = "the characterization hypothesis is not met (no solvable factor)";
    return status;
  });
}

void amg_string_free(char* s) { delete[] s; }

}  // extern "C"
