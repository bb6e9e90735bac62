#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "rigidkit/rigidkit.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rk_string_free(s);
  return out;
}

struct FrameworkHandle {
  rk_framework* f = nullptr;
  ~FrameworkHandle() { rk_framework_free(f); }
};

const char* kTriangle = R"({"dim": 2,
  "vertices": [{"id": 1, "coords": ["0", "0"]}, {"id": 2, "coords": ["1", "0"]}, {"id": 3, "coords": ["0", "1"]}],
  "edges": [[1, 2], [1, 3], [2, 3]]})";

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(rk_version(), "0.1.0");
  EXPECT_STREQ(rk_status_name(RK_OK), "OK");
  EXPECT_STREQ(rk_status_name(RK_ERROR_PARSE), "ParseError");
  EXPECT_GE(rk_max_dim(), 2);
}

TEST(CApi, ParseAndInspect) {
  FrameworkHandle h;
  ASSERT_EQ(rk_framework_parse(kTriangle, &h.f), RK_OK);
  int dim = 0;
  size_t n = 0, m = 0;
  EXPECT_EQ(rk_framework_dim(h.f, &dim), RK_OK);
  EXPECT_EQ(rk_framework_vertex_count(h.f, &n), RK_OK);
  EXPECT_EQ(rk_framework_edge_count(h.f, &m), RK_OK);
  EXPECT_EQ(dim, 2);
  EXPECT_EQ(n, 3U);
  EXPECT_EQ(m, 3U);
  char* d = nullptr;
  ASSERT_EQ(rk_framework_squared_distance(h.f, 2, 3, &d), RK_OK);
  EXPECT_EQ(take(d), "2");
  EXPECT_EQ(rk_framework_squared_distance(h.f, 2, 9, &d), RK_ERROR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorsAreReported) {
  rk_framework* f = nullptr;
  EXPECT_EQ(rk_framework_parse("{", &f), RK_ERROR_PARSE);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::string(rk_last_error()), "");
  EXPECT_EQ(rk_framework_parse(nullptr, &f), RK_ERROR_INVALID_ARGUMENT);
  EXPECT_EQ(rk_framework_generate(1, 'p', 0, &f), RK_ERROR_OUT_OF_RANGE);
  EXPECT_EQ(rk_framework_generate(2, 'x', 0, &f), RK_ERROR_INVALID_ARGUMENT);
  EXPECT_EQ(rk_framework_generate(2, 'r', 1, &f), RK_ERROR_INVALID_ARGUMENT);
}

TEST(CApi, CounterexampleRoundTrip) {
  FrameworkHandle p, q, ap;
  ASSERT_EQ(rk_framework_generate(2, 'p', 0, &p.f), RK_OK);
  ASSERT_EQ(rk_framework_generate(2, 'q', 0, &q.f), RK_OK);
  ASSERT_EQ(rk_framework_generate(2, 'p', 1, &ap.f), RK_OK);

  int equivalent = -1, congruent = -1;
  EXPECT_EQ(rk_is_equivalent(p.f, q.f, &equivalent), RK_OK);
  EXPECT_EQ(rk_is_congruent(p.f, q.f, &congruent), RK_OK);
  EXPECT_EQ(equivalent, 1);
  EXPECT_EQ(congruent, 0);

  rk_verdict verdict = RK_FLEXIBLE;
  FrameworkHandle witness;
  ASSERT_EQ(rk_decide_global_rigidity(p.f, nullptr, 0, &verdict, &witness.f), RK_OK);
  EXPECT_EQ(verdict, RK_NOT_GLOBALLY_RIGID);
  ASSERT_NE(witness.f, nullptr);
  EXPECT_EQ(rk_is_equivalent(p.f, witness.f, &equivalent), RK_OK);
  EXPECT_EQ(equivalent, 1);

  const uint32_t base[] = {1, 4, 5};
  rk_framework* none = nullptr;
  ASSERT_EQ(rk_decide_global_rigidity(ap.f, base, 3, &verdict, &none), RK_OK);
  EXPECT_EQ(verdict, RK_GLOBALLY_RIGID);
  EXPECT_EQ(none, nullptr);

  int certified = 0;
  EXPECT_EQ(rk_generic_global_rigidity(p.f, 32, 20190309, &certified), RK_OK);
  EXPECT_EQ(certified, 1);

  char* json = nullptr;
  ASSERT_EQ(rk_framework_to_json(p.f, &json), RK_OK);
  FrameworkHandle back;
  ASSERT_EQ(rk_framework_parse(json, &back.f), RK_OK);
  rk_string_free(json);
  EXPECT_EQ(rk_is_congruent(p.f, back.f, &congruent), RK_OK);
  EXPECT_EQ(congruent, 1);
}

TEST(CApi, Commands) {
  char* report = nullptr;
  int exit_code = -1;
  ASSERT_EQ(rk_paper_verify(2, 12, RK_FORMAT_TEXT, &report, &exit_code), RK_OK);
  EXPECT_EQ(exit_code, 0);
  EXPECT_NE(take(report).find("status: PASS"), std::string::npos);
  ASSERT_EQ(rk_paper_verify(1, 12, RK_FORMAT_TEXT, &report, &exit_code), RK_OK);
  EXPECT_EQ(exit_code, 2);
  rk_string_free(report);

  FrameworkHandle tri;
  ASSERT_EQ(rk_framework_parse(kTriangle, &tri.f), RK_OK);
  int rigid = 0;
  EXPECT_EQ(rk_is_infinitesimally_rigid(tri.f, &rigid), RK_OK);
  EXPECT_EQ(rigid, 1);

  rk_framework* witness = nullptr;
  ASSERT_EQ(rk_analyze(tri.f, nullptr, nullptr, 0, "infinitesimal,decide", 8, 1, RK_FORMAT_TEXT, &report, &witness,
                       &exit_code),
            RK_OK);
  EXPECT_EQ(exit_code, 1);
  EXPECT_EQ(witness, nullptr);
  rk_string_free(report);
  EXPECT_EQ(rk_analyze(tri.f, nullptr, nullptr, 0, "nope", 8, 1, RK_FORMAT_TEXT, &report, nullptr, &exit_code),
            RK_ERROR_INVALID_ARGUMENT);

  char* svg = nullptr;
  ASSERT_EQ(rk_render_svg(tri.f, 1, 2, &svg), RK_OK);
  EXPECT_NE(take(svg).find("<svg"), std::string::npos);
  EXPECT_EQ(rk_render_svg(tri.f, 1, 1, &svg), RK_ERROR_INVALID_ARGUMENT);
}
