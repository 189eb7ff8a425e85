#include "doctest.h"

#include "invtree/invtree.h"

#include <algorithm>
#include <string>
#include <vector>

namespace {

struct Ctx {
  invtree_context* ctx = nullptr;
  Ctx() { REQUIRE(invtree_context_create(&ctx) == INVTREE_OK); }
  ~Ctx() { invtree_context_destroy(ctx); }
  std::string out() const { return {invtree_output(ctx), invtree_output_size(ctx)}; }
};

void collect(const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); }

}  // namespace

TEST_CASE("counts and levels") {
  Ctx c;
  REQUIRE(invtree_count(c.ctx, "geq,dash,geq", 5) == INVTREE_OK);
  CHECK(c.out() == "42\n");
  CHECK(std::string(invtree_last_error(c.ctx)).empty());
  REQUIRE(invtree_count(c.ctx, "avoid:000,100,101,110,201,210", 5) == INVTREE_OK);
  CHECK(c.out() == "42\n");
  REQUIRE(invtree_levels(c.ctx, "pcat", 5, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "1,2,6,23,105\n");
  REQUIRE(invtree_levels(c.ctx, "pcat", 3, INVTREE_FORMAT_JSON) == INVTREE_OK);
  CHECK(c.out() == "[1,2,6]\n");
  REQUIRE(invtree_labels(c.ctx, "pcat", 2, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "1,(1),1\n2,(1),1\n2,(2),1\n");
  REQUIRE(invtree_enumerate(c.ctx, "path:steady", 2) == INVTREE_OK);
  CHECK(c.out() == "UDUD\nUUDD\n");
}

TEST_CASE("errors map to status codes") {
  Ctx c;
  CHECK(invtree_count(c.ctx, "geq,what,geq", 3) == INVTREE_INVALID_ARGUMENT);
  CHECK_FALSE(std::string(invtree_last_error(c.ctx)).empty());
  CHECK(c.out().empty());
  CHECK(invtree_count(c.ctx, "geq,dash,geq", 12) == INVTREE_LIMIT_EXCEEDED);
  CHECK(invtree_map(c.ctx, "tinv", "1,x") == INVTREE_PARSE_ERROR);
  CHECK(invtree_map(c.ctx, "phi", "UUDD") == INVTREE_PRECONDITION_FAILED);
  CHECK(invtree_levels(c.ctx, "nope", 3, INVTREE_FORMAT_TEXT) == INVTREE_INVALID_ARGUMENT);
  CHECK(invtree_levels(c.ctx, "cat", 3, static_cast<invtree_format>(9)) == INVTREE_INVALID_ARGUMENT);
  CHECK(invtree_count(c.ctx, nullptr, 3) == INVTREE_INVALID_ARGUMENT);
  CHECK(invtree_count(nullptr, "tree", 3) == INVTREE_INVALID_ARGUMENT);
  CHECK(invtree_set_jobs(c.ctx, 0) == INVTREE_INVALID_ARGUMENT);
  CHECK(std::string(invtree_status_name(INVTREE_CHECK_FAILED)) == "check failed");
  // A later success clears the error.
  CHECK(invtree_count(c.ctx, "tree", 3) == INVTREE_OK);
  CHECK(std::string(invtree_last_error(c.ctx)).empty());
}

TEST_CASE("validation") {
  Ctx c;
  CHECK(invtree_validate(c.ctx, "steady", "UUDUWUDDDD") == INVTREE_OK);
  CHECK(c.out() == "ok\n");
  CHECK(invtree_validate(c.ctx, "steady", "UUDDUUUWUDDDDD") == INVTREE_CHECK_FAILED);
  CHECK(c.out().rfind("S1 ", 0) == 0);
  CHECK(invtree_validate(c.ctx, "invseq", "0,2") == INVTREE_CHECK_FAILED);
  CHECK(invtree_validate(c.ctx, "tree", "0(1(3)2)") == INVTREE_CHECK_FAILED);
  CHECK(invtree_validate(c.ctx, "zigzag", "UD") == INVTREE_INVALID_ARGUMENT);
}

TEST_CASE("maps and growth") {
  Ctx c;
  REQUIRE(invtree_map(c.ctx, "phi-star", "UUDUWUDDDD") == INVTREE_OK);
  CHECK(c.out() == "UUUDUDDD;marks=1\n");
  REQUIRE(invtree_grow(c.ctx, "steady", "UD", INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "UDUD (1,2)\nUUDD (0,3)\n");
  REQUIRE(invtree_grow(c.ctx, "pcat", "0", INVTREE_FORMAT_CSV) == INVTREE_OK);
  CHECK(c.out().find("\"0,0\",\"(2)\"\n") != std::string::npos);
  REQUIRE(invtree_grow(c.ctx, "p1234", "1", INVTREE_FORMAT_JSON) == INVTREE_OK);
  CHECK(c.out().find("\"label\": \"(1,1)\"") != std::string::npos);
  CHECK(invtree_grow(c.ctx, "cat", "0,1,0,1,4,2,3,5", INVTREE_FORMAT_TEXT) == INVTREE_PRECONDITION_FAILED);
}

TEST_CASE("series and triangles") {
  Ctx c;
  REQUIRE(invtree_triangle(c.ctx, 4, INVTREE_FORMAT_CSV) == INVTREE_OK);
  const std::string tri = c.out();
  CHECK(std::count(tri.begin(), tri.end(), '\n') == 15);
  REQUIRE(invtree_series(c.ctx, "triangle", 4, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == tri);
  REQUIRE(invtree_series(c.ctx, "kernel-a11", 6, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "1,2,5,15,51,191\n");
  REQUIRE(invtree_series(c.ctx, "e3", 4, INVTREE_FORMAT_JSON) == INVTREE_OK);
  CHECK(c.out() == "[1,2,5,15]\n");
  REQUIRE(invtree_series(c.ctx, "baxter", 3, INVTREE_FORMAT_CSV) == INVTREE_OK);
  CHECK(c.out() == "1,1\n2,2\n3,6\n");
  REQUIRE(invtree_series(c.ctx, "residual", 5, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "0\n");
  REQUIRE(invtree_series(c.ctx, "kernel-w", 1, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out() == "0,0\n1,1+2*a+a^2\n");
  CHECK(invtree_series(c.ctx, "baxter", 20, INVTREE_FORMAT_TEXT) == INVTREE_LIMIT_EXCEEDED);
}

TEST_CASE("verify and conjecture") {
  Ctx c;
  std::vector<std::string> lines;
  invtree_set_progress(c.ctx, collect, &lines);
  REQUIRE(invtree_set_jobs(c.ctx, 2) == INVTREE_OK);
  REQUIRE(invtree_verify(c.ctx, "series", INVTREE_FORMAT_JSON) == INVTREE_OK);
  const std::string report = c.out();
  CHECK(report.find("\"suite\": \"series\"") != std::string::npos);
  CHECK(report.find("\"checks\"") != std::string::npos);
  CHECK(report.find("elapsed_ms") == std::string::npos);
  CHECK_FALSE(lines.empty());
  invtree_set_progress(c.ctx, nullptr, nullptr);
  REQUIRE(invtree_verify(c.ctx, "series", INVTREE_FORMAT_JSON) == INVTREE_OK);
  CHECK(c.out() == report);
  CHECK(invtree_verify(c.ctx, "everything", INVTREE_FORMAT_TEXT) == INVTREE_INVALID_ARGUMENT);

  REQUIRE(invtree_conjecture(c.ctx, 4, INVTREE_FORMAT_TEXT) == INVTREE_OK);
  CHECK(c.out().find("conjecture evidence") != std::string::npos);
}
