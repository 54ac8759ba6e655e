#include "support.hpp"

#include <gtest/gtest.h>

using namespace z4z2;
using namespace testing_support;

TEST(Pipeline, ColorableGraphsStopAtTheCorollaryMap) {
  for (const NamedGraph& n : controls()) {
    PipelineReport r = run_pipeline(n.graph);
    EXPECT_EQ(r.verdict, "colorable") << n.name;
    EXPECT_EQ(r.stage, Stage::CorollaryMap);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(check_certificate(*r.certificate).valid());
  }
}

TEST(Pipeline, SnarksAreColoredByStructuralStages) {
  for (const CubicGraph& g : {petersen(), blanusa(1), blanusa(2), flower(5)}) {
    PipelineReport r = run_pipeline(g);
    ASSERT_EQ(r.verdict, "colorable");
    EXPECT_TRUE(r.stage == Stage::ThetaFastPath || r.stage == Stage::OddIncidenceCorrection) << to_string(*r.stage);
    EXPECT_EQ(r.outcomes.front().outcome, "failed");
    EXPECT_TRUE(verify(g, *r.coloring).all());
    EXPECT_TRUE(check_certificate(*r.certificate).valid());
  }
}

TEST(Pipeline, OddIncidenceStageAloneColorsSnarks) {
  PipelineConfig cfg;
  cfg.stages = {Stage::OddIncidenceCorrection};
  for (const CubicGraph& g : {petersen(), blanusa(1), flower(5)}) {
    PipelineReport r = run_pipeline(g, cfg);
    EXPECT_EQ(r.verdict, "colorable");
    EXPECT_EQ(r.stage, Stage::OddIncidenceCorrection);
  }
}

TEST(Pipeline, TinyBudgetsGiveUnknownNotAFalseVerdict) {
  PipelineConfig cfg;
  cfg.stages = {Stage::CorollaryMap, Stage::ExhaustiveCharacterization, Stage::OracleOnly};
  cfg.oracle_nodes = 5;
  cfg.search_nodes = 5;
  PipelineReport r = run_pipeline(flower(5), cfg);
  EXPECT_EQ(r.verdict, "unknown");
  EXPECT_FALSE(r.certificate);
  EXPECT_EQ(r.budgets_hit.size(), 3u);
  for (const StageOutcome& o : r.outcomes) EXPECT_EQ(o.outcome, "budget-exhausted");
}

TEST(Pipeline, ReportIsDeterministicWithoutTiming) {
  SplitMix rng(88);
  for (int i = 0; i < 10; ++i) {
    CubicGraph g = random_bridgeless(10 + 2 * rng.below(4), rng);
    EXPECT_EQ(run_pipeline(g).to_json("x", false).dump(), run_pipeline(g).to_json("x", false).dump());
    EXPECT_EQ(run_pipeline(g).certificate->dump(), run_pipeline(g).certificate->dump());
  }
}

TEST(Pipeline, EveryRandomGraphIsColored) {
  SplitMix rng(404);
  for (int i = 0; i < 40; ++i) {
    CubicGraph g = random_bridgeless(6 + 2 * rng.below(8), rng);
    PipelineReport r = run_pipeline(g);
    ASSERT_EQ(r.verdict, "colorable") << to_graph6(g);
    EXPECT_TRUE(verify(g, *r.coloring).all());
  }
}
