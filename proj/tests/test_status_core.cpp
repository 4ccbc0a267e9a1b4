#include "doctest.h"

#include "approx.hpp"

#include "csf/baselines.hpp"
#include "csf/rng.hpp"
#include "csf/status.hpp"
#include "csf/table.hpp"

using namespace csf;

TEST_CASE("normalize basics") {
  CHECK(normalize({1, 1, 1}).vec().isApprox(StatusVector(1.0 / 3, 1.0 / 3, 1.0 / 3)));
  CHECK(normalize({0, 0, 2}).vec() == StatusVector(0, 0, 1));
  CHECK(normalize({0.2, 0.3, 0.5}).vec().isApprox(StatusVector(0.2, 0.3, 0.5)));
  CHECK_THROWS_AS(normalize({0, 0, 0}), AllZeroWeights);
  CHECK_THROWS_AS(normalize({-0.1, 0.5, 0.6}), ValidationError);
}

TEST_CASE("normalize is scale invariant") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    StatusVector w(rng.next_below(1000) + 1.0, rng.next_below(1000) / 3.0,
                   rng.next_below(1000) / 7.0);
    const double k = (rng.next_below(999) + 1) / 100.0;
    const StatusVector a = normalize(w).vec();
    const StatusVector b = normalize(StatusVector(k * w)).vec();
    for (int c = 0; c < 3; ++c) CHECK(a[c] == csf::testing::Abs{b[c], 1e-12});
    CHECK(a.sum() == csf::testing::Abs{1.0, 1e-9});
  }
}

TEST_CASE("argmax ties break toward the lower GH status") {
  CHECK(argmax_status(StatusDistribution(0.6, 0.3, 0.1)) == CognitiveStatus::InFocus);
  CHECK(argmax_status(StatusDistribution(1.0 / 3, 1.0 / 3, 1.0 / 3)) ==
        CognitiveStatus::Familiar);
  CHECK(argmax_status(StatusDistribution(0.45, 0.45, 0.10)) == CognitiveStatus::Activated);
  CHECK(argmax_status(StatusDistribution(0.10, 0.45, 0.45)) == CognitiveStatus::Familiar);
  // Deterministic: equal inputs, equal outputs.
  const StatusDistribution d(0.25, 0.5, 0.25);
  CHECK(argmax_status(d) == argmax_status(StatusDistribution(0.25, 0.5, 0.25)));
}

TEST_CASE("distribution invariants enforced on construction") {
  CHECK_THROWS_AS(StatusDistribution(0.5, 0.5, 0.5), ValidationError);
  CHECK_THROWS_AS(StatusDistribution(-0.2, 0.6, 0.6), ValidationError);
  // 1e-9 tolerance on the sum
  CHECK_NOTHROW(StatusDistribution(0.3, 0.3, 0.4 + 5e-10));
}

TEST_CASE("table row lookup") {
  TableMatrix m = TableMatrix::Constant(1.0 / 3);
  m.row(row_index(CognitiveStatus::InFocus, LinguisticStatus::NotMentioned)) << 0.1, 0.7, 0.2;
  const ConditionalStatusTable t(m);
  const StatusDistribution row =
      table_row(t, CognitiveStatus::InFocus, LinguisticStatus::NotMentioned);
  CHECK(row.vec().isApprox(StatusVector(0.1, 0.7, 0.2)));

  const ConditionalStatusTable uniform;
  CHECK(table_row(uniform, CognitiveStatus::Activated, LinguisticStatus::MentionedTopic)
            .vec()
            .isApprox(StatusVector(1.0 / 3, 1.0 / 3, 1.0 / 3)));

  // One-hot table built from the declared FSM transitions
  const ConditionalStatusTable fsm = FsmTransitionTable(DecayPolicy::DecayOne).as_one_hot_table();
  CHECK(table_row(fsm, CognitiveStatus::Familiar, LinguisticStatus::MentionedTopic).vec() ==
        StatusVector(1, 0, 0));
}

TEST_CASE("table rejects invalid rows") {
  TableMatrix m = TableMatrix::Constant(1.0 / 3);
  m(0, 0) = 0.5;
  CHECK_THROWS_AS(ConditionalStatusTable{m}, RowSumError);
  TableMatrix neg = TableMatrix::Constant(1.0 / 3);
  neg.row(3) << -0.1, 0.6, 0.5;
  CHECK_THROWS_AS(ConditionalStatusTable{neg}, ValidationError);
}

TEST_CASE("canonical row order") {
  CHECK(row_index(CognitiveStatus::InFocus, LinguisticStatus::NotMentioned) == 0);
  CHECK(row_index(CognitiveStatus::InFocus, LinguisticStatus::MentionedTopic) == 2);
  CHECK(row_index(CognitiveStatus::Activated, LinguisticStatus::NotMentioned) == 3);
  CHECK(row_index(CognitiveStatus::Familiar, LinguisticStatus::MentionedTopic) == 8);
}
