#include <gtest/gtest.h>

#include "rigidkit/constructions.hpp"
#include "rigidkit/enumeration.hpp"
#include "rigidkit/error.hpp"

using namespace rigidkit;

namespace {

Point pt(std::initializer_list<const char*> coords) {
  Point p;
  for (const char* c : coords) p.push_back(Rational::parse(c));
  return p;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected rigidkit::Error";
  return ErrorCode::InvalidArgument;
}

Framework family(int d, PaperConfig label, bool contract, bool reduced) {
  const FamilyInstance fi = family_instance(d);
  Configuration c = paper_configuration(d, label);
  if (contract) c = apply_affine(paper_affine_map(d), c);
  return Framework(reduced ? fi.reduced : fi.full, c);
}

}  // namespace

TEST(DetectPendantStructure, PlanarFamily) {
  const std::vector<VertexId> base{1, 4, 5};
  const PendantStructure ps = detect_pendant_structure(family(2, PaperConfig::P, false, false), base);
  EXPECT_EQ(ps.pendants, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(ps.filter_edges, (std::set<Edge>{Edge(2, 3)}));
  EXPECT_EQ(ps.attachments(2), (std::vector<VertexId>{1, 4}));
}

TEST(DetectPendantStructure, ThreeDimensionalFamily) {
  const std::vector<VertexId> base{1, 4, 5, 6, 7};
  const PendantStructure ps = detect_pendant_structure(family(3, PaperConfig::P, false, false), base);
  EXPECT_EQ(ps.pendants, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(ps.filter_edges, (std::set<Edge>{Edge(2, 3)}));
  EXPECT_EQ(ps.attachments(3), (std::vector<VertexId>{1, 5, 7}));
}

TEST(DetectPendantStructure, Errors) {
  const Framework k4(Graph::complete({1, 2, 3, 4}),
                     Configuration(2, {{1, pt({"0", "0"})}, {2, pt({"1", "0"})}, {3, pt({"0", "1"})},
                                       {4, pt({"1", "1"})}}));
  const std::vector<VertexId> all{1, 2, 3, 4};
  EXPECT_EQ(code_of([&] { detect_pendant_structure(k4, all); }), ErrorCode::EmptyPendants);

  const Framework g = family(2, PaperConfig::P, false, false);
  const std::vector<VertexId> not_complete{1, 2, 5};
  EXPECT_EQ(code_of([&] { detect_pendant_structure(g, not_complete); }), ErrorCode::BaseNotComplete);
  const std::vector<VertexId> unknown{1, 4, 9};
  EXPECT_EQ(code_of([&] { detect_pendant_structure(g, unknown); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { detect_pendant_structure(g, std::vector<VertexId>{}); }), ErrorCode::InvalidArgument);

  // vertex 6 hangs off pendant 2 only
  const Framework chain(Graph({1, 2, 3, 6}, {Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(2, 6)}),
                        Configuration(2, {{1, pt({"0", "0"})}, {2, pt({"1", "0"})}, {3, pt({"0", "1"})},
                                          {6, pt({"2", "2"})}}));
  const std::vector<VertexId> base{1, 3};
  EXPECT_EQ(code_of([&] { detect_pendant_structure(chain, base); }), ErrorCode::PendantAttachedOutsideBase);
}

TEST(EnumerateRealizations, ContractedPlanarFamilyMatchesTheFourCases) {
  const std::vector<VertexId> base{1, 4, 5};
  const PendantStructure ps = detect_pendant_structure(family(2, PaperConfig::P, true, true), base);
  const auto classes = enumerate_realizations(ps);
  ASSERT_EQ(classes.size(), 4U);
  const Point a2 = pt({"-1/4", "1/4"});
  const Point a3 = pt({"21/20", "9/20"});
  const Point x2 = pt({"-3/4", "3/4"});
  const Point x3 = pt({"11/20", "-1/20"});
  const std::vector<std::pair<Point, Point>> expected{{a2, a3}, {a2, x3}, {x2, a3}, {x2, x3}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(classes[i].config.at(2), expected[i].first) << i;
    EXPECT_EQ(classes[i].config.at(3), expected[i].second) << i;
    EXPECT_EQ(classes[i].reflection_mask, (std::vector<bool>{i >= 2, i % 2 == 1}));
  }
}

TEST(EnumerateRealizations, ThreeDimensionalFamilyHasFourClasses) {
  const std::vector<VertexId> base{1, 4, 5, 6, 7};
  const PendantStructure ps = detect_pendant_structure(family(3, PaperConfig::P, false, true), base);
  EXPECT_EQ(enumerate_realizations(ps).size(), 4U);
}

TEST(EnumerateRealizations, FullySpanningAttachmentsGiveOnePosition) {
  // Pendant 4 on the triangle 1,2,3 in the plane.
  const Framework f(Graph({1, 2, 3, 4}, {Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(4, 1), Edge(4, 2), Edge(4, 3)}),
                    Configuration(2, {{1, pt({"0", "0"})}, {2, pt({"2", "0"})}, {3, pt({"0", "3"})},
                                      {4, pt({"1/2", "5/7"})}}));
  const std::vector<VertexId> base{1, 2, 3};
  const auto classes = enumerate_realizations(detect_pendant_structure(f, base));
  ASSERT_EQ(classes.size(), 1U);
  EXPECT_EQ(classes[0].reflection_mask, std::vector<bool>{false});
}

TEST(EnumerateRealizations, PendantOnItsMirrorHasOnePosition) {
  const Framework f(Graph({1, 2, 3}, {Edge(1, 2), Edge(3, 1), Edge(3, 2)}),
                    Configuration(2, {{1, pt({"0", "0"})}, {2, pt({"2", "0"})}, {3, pt({"5", "0"})}}));
  const std::vector<VertexId> base{1, 2};
  EXPECT_EQ(enumerate_realizations(detect_pendant_structure(f, base)).size(), 1U);
}

TEST(EnumerateRealizations, TooFewAttachmentsIsAContinuum) {
  // In R^3 a pendant on two joints can spin.
  const Framework f(Graph({1, 2, 3}, {Edge(1, 2), Edge(3, 1), Edge(3, 2)}),
                    Configuration(3, {{1, pt({"0", "0", "0"})}, {2, pt({"1", "0", "0"})}, {3, pt({"0", "1", "0"})}}));
  const std::vector<VertexId> base{1, 2};
  const PendantStructure ps = detect_pendant_structure(f, base);
  EXPECT_EQ(code_of([&] { enumerate_realizations(ps); }), ErrorCode::ContinuumOfRealizations);
  const RigidityVerdict v = decide_global_rigidity(ps);
  EXPECT_EQ(v.status, RigidityStatus::Flexible);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(DecideGlobalRigidity, PlanarFamily) {
  const std::vector<VertexId> base{1, 4, 5};
  const RigidityVerdict vp = decide_global_rigidity(detect_pendant_structure(family(2, PaperConfig::P, false, false), base));
  ASSERT_EQ(vp.status, RigidityStatus::NotGloballyRigid);
  ASSERT_TRUE(vp.witness.has_value());
  EXPECT_TRUE(is_congruent(*vp.witness, paper_configuration(2, PaperConfig::Q)));
  EXPECT_EQ(squared_distance(vp.witness->at(2), vp.witness->at(3)), Rational::parse("185/100"));

  const RigidityVerdict va = decide_global_rigidity(detect_pendant_structure(family(2, PaperConfig::P, true, false), base));
  EXPECT_EQ(va.status, RigidityStatus::GloballyRigid);
  EXPECT_FALSE(va.witness.has_value());
}

TEST(DecideGlobalRigidity, FamilyInvariantsUpToDimensionEight) {
  for (int d = 2; d <= 8; ++d) {
    const FamilyInstance fi = family_instance(d);
    for (bool contract : {false, true}) {
      const Framework full = family(d, PaperConfig::P, contract, false);
      const PendantStructure ps = detect_pendant_structure(full, fi.base);
      const Graph reduced = ps.reduced_graph();
      ASSERT_EQ(reduced, fi.reduced);

      const auto classes = enumerate_realizations(ps);
      ASSERT_EQ(classes.size(), 4U);
      EXPECT_EQ(classes.front().config, full.config());  // all-false mask
      for (const RealizationClass& rc : classes) {
        EXPECT_TRUE(is_equivalent(Framework(reduced, full.config()), Framework(reduced, rc.config)));
      }

      const RigidityVerdict v = decide_global_rigidity(ps);
      if (!contract) {
        EXPECT_EQ(v.status, RigidityStatus::NotGloballyRigid) << d;
        EXPECT_EQ(v.survivors.size(), 2U) << d;
        ASSERT_TRUE(v.witness.has_value());
        const Framework w(fi.full, *v.witness);
        EXPECT_TRUE(is_equivalent(full, w));
        EXPECT_FALSE(is_congruent(full, w));
        EXPECT_TRUE(is_congruent(*v.witness, paper_configuration(d, PaperConfig::Q)));
      } else {
        EXPECT_EQ(v.status, RigidityStatus::GloballyRigid) << d;
        EXPECT_EQ(v.survivors.size(), 1U) << d;
      }
    }
  }
}

TEST(DecideGlobalRigidity, NoFilterEdgesMeansEveryMirrorSurvives) {
  const std::vector<VertexId> base{1, 4, 5};
  const RigidityVerdict v = decide_global_rigidity(detect_pendant_structure(family(2, PaperConfig::P, true, true), base));
  EXPECT_EQ(v.status, RigidityStatus::NotGloballyRigid);
  EXPECT_EQ(v.survivors.size(), 4U);
}
