// Command-line front end over the C API.

#include "invtree/invtree.h"

#include "CLI11.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <string>

namespace {

struct ContextDeleter {
  void operator()(invtree_context* ctx) const { invtree_context_destroy(ctx); }
};
using Context = std::unique_ptr<invtree_context, ContextDeleter>;

int exit_code(invtree_status s) {
  switch (s) {
    case INVTREE_OK: return 0;
    case INVTREE_CHECK_FAILED:
    case INVTREE_INTERNAL_ERROR:
    case INVTREE_OUT_OF_MEMORY: return 1;
    default: return 2;
  }
}

void print_progress(const char* line, void*) {
  std::fprintf(stderr, "%s\n", line);
  std::fflush(stderr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating trees, pattern-avoiding inversion sequences and their bijections"};
  app.set_version_flag("--version", invtree_version());
  app.require_subcommand(1);

  std::string format = "text";
  int jobs = 1;
  bool quiet = false;
  bool timing = false;
  const std::map<std::string, invtree_format> formats{
      {"text", INVTREE_FORMAT_TEXT}, {"json", INVTREE_FORMAT_JSON}, {"csv", INVTREE_FORMAT_CSV}};
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads for verify and conjecture")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "No progress lines on stderr");
  app.add_flag("--timing", timing, "Include elapsed times in reports");

  std::string family, rule, name, input, suite = "all", series_name;
  int n = 0, depth = 0;
  bool list = false, labels = false;

  auto* count = app.add_subcommand("count", "Count (or list) a class of objects of size n");
  count->add_option("--family", family, "Class: geq,dash,geq | avoid:110,210 | perm:1-23-4 | classical:123 | path:steady | tree")
      ->required();
  count->add_option("--n", n, "Size")->required();
  count->add_flag("--list", list, "Print the members instead of their number");

  auto* levels = app.add_subcommand("levels", "Level counts of a succession rule");
  levels->add_option("--rule", rule, "cat, cat2, i-geq3, bax, semi, pcat, p1234, steady")->required();
  levels->add_option("--depth", depth, "Number of levels")->required();
  levels->add_flag("--labels", labels, "Print the label distribution of every level");

  auto* triangle = app.add_subcommand("triangle", "Rows 0..n of c(n,k) as n,k,value");
  triangle->add_option("--n", n, "Last row")->required();

  auto* grow = app.add_subcommand("grow", "One growth step: children with their labels");
  grow->add_option("--family", family, "cat, cat:dyck, cat2, i-geq3, bax, semi, pcat, pcat:vmdyck, pcat:tree, p1234, steady")
      ->required();
  grow->add_option("--input", input, "Object in canonical text form")->required();

  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--name", name, "tinv, tinv-inv, cat-perm, cat-perm-inv, steady-perm, steady-perm-inv, phi, theta, phi-star, theta-star")
      ->required();
  map->add_option("--input", input, "Object in canonical text form")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "characterizations, growths, bijections, series, all")
      ->check(CLI::IsMember({"characterizations", "growths", "bijections", "series", "all"}));
  verify->add_flag("--n-small", "Desk-scale sizes (the default and only scale)");

  auto* conjecture = app.add_subcommand("conjecture", "RTL-minima evidence for AV(23-1-4) against c(n,k)");
  n = 9;
  conjecture->add_option("--n", n, "Largest size")->capture_default_str();

  auto* series = app.add_subcommand("series", "Exact sequences and series checks");
  series->add_option("name", series_name, "catalan, a108307, baxter, semibaxter, pcat, e3, triangle, kernel-a11, kernel-w, residual")
      ->required();
  series->add_option("--n", n, "Number of terms or order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  invtree_context* raw = nullptr;
  if (invtree_context_create(&raw) != INVTREE_OK) {
    std::fprintf(stderr, "error: cannot create context\n");
    return 1;
  }
  Context ctx(raw);
  invtree_set_jobs(ctx.get(), jobs);
  invtree_set_timing(ctx.get(), timing ? 1 : 0);
  if (!quiet) invtree_set_progress(ctx.get(), print_progress, nullptr);
  const invtree_format fmt = formats.at(format);

  invtree_status status = INVTREE_OK;
  if (*count) {
    status = list ? invtree_enumerate(ctx.get(), family.c_str(), n) : invtree_count(ctx.get(), family.c_str(), n);
  } else if (*levels) {
    status = labels ? invtree_labels(ctx.get(), rule.c_str(), depth, fmt) : invtree_levels(ctx.get(), rule.c_str(), depth, fmt);
  } else if (*triangle) {
    status = invtree_triangle(ctx.get(), n, fmt);
  } else if (*grow) {
    status = invtree_grow(ctx.get(), family.c_str(), input.c_str(), fmt);
  } else if (*map) {
    status = invtree_map(ctx.get(), name.c_str(), input.c_str());
  } else if (*verify) {
    status = invtree_verify(ctx.get(), suite.c_str(), fmt);
  } else if (*conjecture) {
    status = invtree_conjecture(ctx.get(), n, fmt);
  } else if (*series) {
    status = invtree_series(ctx.get(), series_name.c_str(), n, fmt);
  }

  std::fwrite(invtree_output(ctx.get()), 1, invtree_output_size(ctx.get()), stdout);
  if (status != INVTREE_OK && status != INVTREE_CHECK_FAILED) {
    std::fprintf(stderr, "error (%s): %s\n", invtree_status_name(status), invtree_last_error(ctx.get()));
  }
  return exit_code(status);
}
