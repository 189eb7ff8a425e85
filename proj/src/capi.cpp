#include "invtree/invtree.h"

#include "invtree/bijections.hpp"
#include "invtree/error.hpp"
#include "invtree/gentree.hpp"
#include "invtree/growth.hpp"
#include "invtree/patterns.hpp"
#include "invtree/series.hpp"
#include "invtree/verify.hpp"

#include "json.hpp"

#include <new>
#include <string>

struct invtree_context {
  std::string output;
  std::string error;
  int jobs = 1;
  bool timing = false;
  invtree_progress_fn progress = nullptr;
  void* progress_user = nullptr;
};

namespace {

using namespace invtree;

invtree_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return INVTREE_INVALID_ARGUMENT;
    case ErrorCode::Parse: return INVTREE_PARSE_ERROR;
    case ErrorCode::LimitExceeded: return INVTREE_LIMIT_EXCEEDED;
    case ErrorCode::Precondition: return INVTREE_PRECONDITION_FAILED;
    case ErrorCode::Internal: return INVTREE_INTERNAL_ERROR;
  }
  return INVTREE_INTERNAL_ERROR;
}

// Runs body, which fills ctx->output and returns a status, translating
// exceptions into status codes.
template <class Body>
invtree_status guarded(invtree_context* ctx, Body body) {
  if (!ctx) return INVTREE_INVALID_ARGUMENT;
  ctx->output.clear();
  ctx->error.clear();
  try {
    return body();
  } catch (const Error& e) {
    ctx->output.clear();
    ctx->error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->output.clear();
    ctx->error = "out of memory";
    return INVTREE_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    ctx->output.clear();
    ctx->error = e.what();
    return INVTREE_INTERNAL_ERROR;
  }
}

std::string str(const char* s, const char* what) {
  if (!s) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return s;
}

void require_format(invtree_format f) {
  if (f != INVTREE_FORMAT_TEXT && f != INVTREE_FORMAT_JSON && f != INVTREE_FORMAT_CSV) {
    throw Error(ErrorCode::InvalidArgument, "unknown output format");
  }
}

std::string sequence_out(const std::vector<BigInt>& v, invtree_format f) {
  if (f == INVTREE_FORMAT_JSON) return sequence_json(v);
  if (f == INVTREE_FORMAT_CSV) return sequence_csv(v);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + '\n';
}

VerifyOptions options_of(invtree_context* ctx) {
  VerifyOptions o;
  o.jobs = ctx->jobs;
  if (ctx->progress) {
    o.on_check = [ctx](const CheckResult& c) {
      const std::string line = (c.passed ? "PASS " : "FAIL ") + c.name;
      ctx->progress(line.c_str(), ctx->progress_user);
    };
  }
  return o;
}

std::string report_out(const VerificationReport& r, invtree_format f, bool timing) {
  if (f == INVTREE_FORMAT_JSON) return report_json(r, timing);
  if (f == INVTREE_FORMAT_CSV) return report_csv(r);
  return report_text(r, timing);
}

std::string label_json_key(const Label& l) { return to_text(l); }

}  // namespace

extern "C" {

const char* invtree_version(void) { return "1.0.0"; }

const char* invtree_status_name(invtree_status status) {
  switch (status) {
    case INVTREE_OK: return "ok";
    case INVTREE_INVALID_ARGUMENT: return "invalid argument";
    case INVTREE_PARSE_ERROR: return "parse error";
    case INVTREE_LIMIT_EXCEEDED: return "limit exceeded";
    case INVTREE_PRECONDITION_FAILED: return "precondition failed";
    case INVTREE_CHECK_FAILED: return "check failed";
    case INVTREE_INTERNAL_ERROR: return "internal error";
    case INVTREE_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

invtree_status invtree_context_create(invtree_context** out) {
  if (!out) return INVTREE_INVALID_ARGUMENT;
  *out = new (std::nothrow) invtree_context();
  return *out ? INVTREE_OK : INVTREE_OUT_OF_MEMORY;
}

void invtree_context_destroy(invtree_context* ctx) { delete ctx; }

const char* invtree_last_error(const invtree_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }
const char* invtree_output(const invtree_context* ctx) { return ctx ? ctx->output.c_str() : ""; }
size_t invtree_output_size(const invtree_context* ctx) { return ctx ? ctx->output.size() : 0; }

invtree_status invtree_set_jobs(invtree_context* ctx, int jobs) {
  return guarded(ctx, [&] {
    if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
    ctx->jobs = jobs;
    return INVTREE_OK;
  });
}

void invtree_set_progress(invtree_context* ctx, invtree_progress_fn fn, void* user) {
  if (!ctx) return;
  ctx->progress = fn;
  ctx->progress_user = user;
}

void invtree_set_timing(invtree_context* ctx, int enabled) {
  if (ctx) ctx->timing = enabled != 0;
}

invtree_status invtree_count(invtree_context* ctx, const char* class_spec, int n) {
  return guarded(ctx, [&] {
    ctx->output = std::to_string(count_class(parse_class_spec(str(class_spec, "class spec")), n)) + '\n';
    return INVTREE_OK;
  });
}

invtree_status invtree_enumerate(invtree_context* ctx, const char* class_spec, int n) {
  return guarded(ctx, [&] {
    for (const auto& s : enumerate_class(parse_class_spec(str(class_spec, "class spec")), n)) ctx->output += s + '\n';
    return INVTREE_OK;
  });
}

invtree_status invtree_validate(invtree_context* ctx, const char* kind, const char* text) {
  return guarded(ctx, [&] {
    const std::string k = str(kind, "kind");
    const std::string t = str(text, "input");
    ValidityReport report;
    if (k == "invseq") {
      report = validate(parse_inversion_sequence(t));
    } else if (k == "perm") {
      report = validate(parse_permutation(t));
    } else if (k == "tree") {
      report = validate(parse_tree(t), true);
    } else {
      report = validate(parse_path(t, parse_path_kind(k)));
    }
    if (report.ok()) {
      ctx->output = "ok\n";
      return INVTREE_OK;
    }
    for (const auto& v : report.violations) {
      ctx->output += v.invariant + ' ' + std::to_string(v.position) + ' ' + v.detail + '\n';
    }
    return INVTREE_CHECK_FAILED;
  });
}

invtree_status invtree_levels(invtree_context* ctx, const char* rule, int depth, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    ctx->output = sequence_out(level_counts(parse_rule(str(rule, "rule")), depth), format);
    return INVTREE_OK;
  });
}

invtree_status invtree_labels(invtree_context* ctx, const char* rule, int depth, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    const auto dist = label_distribution(parse_rule(str(rule, "rule")), depth);
    if (format == INVTREE_FORMAT_JSON) {
      nlohmann::json levels = nlohmann::json::array();
      for (const auto& level : dist) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [label, count] : level) j[label_json_key(label)] = count.str();
        levels.push_back(std::move(j));
      }
      ctx->output = levels.dump() + '\n';
    } else {
      for (std::size_t n = 0; n < dist.size(); ++n) {
        for (const auto& [label, count] : dist[n]) {
          const std::string l = to_text(label);
          ctx->output += std::to_string(n + 1) + ',' + (format == INVTREE_FORMAT_CSV ? '"' + l + '"' : l) + ',' + count.str() + '\n';
        }
      }
    }
    return INVTREE_OK;
  });
}

invtree_status invtree_triangle(invtree_context* ctx, int n, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    const auto tri = callan_triangle(n);
    ctx->output = format == INVTREE_FORMAT_JSON ? triangle_json(tri) : triangle_csv(tri);
    return INVTREE_OK;
  });
}

invtree_status invtree_grow(invtree_context* ctx, const char* family, const char* input, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    const auto fam = make_family(str(family, "family"));
    const std::string object = str(input, "input");
    if (!fam->is_member(object)) throw PreconditionError("'" + object + "' is not a member of family " + fam->name());
    const auto children = fam->children(object);
    if (format == INVTREE_FORMAT_JSON) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& [child, label] : children) j.push_back({{"child", child}, {"label", to_text(label)}});
      ctx->output = nlohmann::json{{"family", fam->name()}, {"label", to_text(fam->label(object))}, {"object", object},
                                   {"children", j}}
                        .dump(2) +
                    '\n';
    } else {
      for (const auto& [child, label] : children) {
        if (format == INVTREE_FORMAT_CSV) {
          ctx->output += '"' + child + "\",\"" + to_text(label) + "\"\n";
        } else {
          ctx->output += child + ' ' + to_text(label) + '\n';
        }
      }
    }
    return INVTREE_OK;
  });
}

invtree_status invtree_map(invtree_context* ctx, const char* name, const char* input) {
  return guarded(ctx, [&] {
    ctx->output = apply_map(str(name, "map name"), str(input, "input")) + '\n';
    return INVTREE_OK;
  });
}

invtree_status invtree_verify(invtree_context* ctx, const char* suite, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    const auto report = run_suite(str(suite, "suite"), options_of(ctx));
    ctx->output = report_out(report, format, ctx->timing);
    return report.passed() ? INVTREE_OK : INVTREE_CHECK_FAILED;
  });
}

invtree_status invtree_conjecture(invtree_context* ctx, int n_max, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    ctx->output = report_out(conjecture_23_1_4_report(n_max, options_of(ctx)), format, ctx->timing);
    return INVTREE_OK;
  });
}

invtree_status invtree_series(invtree_context* ctx, const char* name, int n, invtree_format format) {
  return guarded(ctx, [&] {
    require_format(format);
    const std::string s = str(name, "series name");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    if (s == "triangle") {
      const auto tri = callan_triangle(n);
      ctx->output = format == INVTREE_FORMAT_JSON ? triangle_json(tri) : triangle_csv(tri);
    } else if (s == "e3") {
      auto e = e3_sequence(n);
      ctx->output = sequence_out({e.begin() + 1, e.end()}, format);
    } else if (s == "kernel-a11") {
      ctx->output = sequence_out(kernel_A11(n), format);
    } else if (s == "kernel-w") {
      const auto w = kernel_W(n);
      if (format == INVTREE_FORMAT_JSON) {
        nlohmann::json j = nlohmann::json::array();
        for (int i = 0; i <= n; ++i) j.push_back(w[i].text());
        ctx->output = j.dump() + '\n';
      } else {
        for (int i = 0; i <= n; ++i) ctx->output += std::to_string(i) + ',' + w[i].text() + '\n';
      }
    } else if (s == "residual") {
      const auto r = functional_equation_residual(n);
      if (format == INVTREE_FORMAT_JSON) {
        ctx->output = nlohmann::json{{"order", n}, {"zero", r.zero}, {"divisions_exact", r.divisions_exact},
                                     {"first_nonzero", r.first_nonzero}}
                          .dump() +
                      '\n';
      } else if (format == INVTREE_FORMAT_CSV) {
        ctx->output = std::to_string(n) + ',' + (r.zero ? "0" : r.first_nonzero) + ',' + (r.divisions_exact ? "exact" : "inexact") + '\n';
      } else {
        ctx->output = r.zero && r.divisions_exact ? "0\n" : "nonzero: " + r.first_nonzero + (r.divisions_exact ? "" : " (inexact division)") + '\n';
      }
      return r.zero && r.divisions_exact ? INVTREE_OK : INVTREE_CHECK_FAILED;
    } else {
      ctx->output = sequence_out(reference_sequence(s, n), format);
    }
    return INVTREE_OK;
  });
}

}  // extern "C"
