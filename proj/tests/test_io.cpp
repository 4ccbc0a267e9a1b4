#include "doctest.h"

#include "csf/io.hpp"
#include "csf/train.hpp"
#include "synthetic.hpp"

using namespace csf;

namespace {

const char* kMinimalCorpus = R"({
  "format_version": 1,
  "objects": ["o1"],
  "dialogues": [
    {"id": "M1", "utterances": [{"index": 1, "text": "hello", "mentions": []}]}
  ]
})";

}  // namespace

TEST_CASE("minimal corpus: absent mention means NotMentioned") {
  const DialogueCorpus corpus = io::parse_corpus(kMinimalCorpus);
  CHECK(corpus.linguistic_status("o1", "M1", 1) == LinguisticStatus::NotMentioned);
}

TEST_CASE("mention roles map to linguistic statuses") {
  const std::string bytes = R"({
    "format_version": 1,
    "objects": ["o1", "o2"],
    "dialogues": [
      {"id": "M1", "utterances": [{"index": 1, "text": "t", "mentions": [
        {"object": "o1", "role": "topic"},
        {"object": "o2", "role": "nontopic", "annotator_votes": 2}
      ]}]}
    ]
  })";
  const DialogueCorpus corpus = io::parse_corpus(bytes);
  CHECK(corpus.linguistic_status("o1", "M1", 1) == LinguisticStatus::MentionedTopic);
  CHECK(corpus.linguistic_status("o2", "M1", 1) == LinguisticStatus::MentionedNonTopic);
}

TEST_CASE("corpus parse rejections") {
  CHECK_THROWS_AS(io::parse_corpus("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_corpus(R"({"format_version": 2, "objects": [], "dialogues": []})"),
                  SchemaError);
  CHECK_THROWS_AS(io::parse_corpus(R"({"objects": [], "dialogues": []})"), SchemaError);
  // Mention of an unknown object
  CHECK_THROWS_AS(io::parse_corpus(R"({
    "format_version": 1, "objects": ["o1"],
    "dialogues": [{"id": "M1", "utterances": [{"index": 1, "text": "t",
      "mentions": [{"object": "ghost", "role": "topic"}]}]}]
  })"),
                  DanglingReference);
  // Duplicate object in one mention list
  CHECK_THROWS_AS(io::parse_corpus(R"({
    "format_version": 1, "objects": ["o1"],
    "dialogues": [{"id": "M1", "utterances": [{"index": 1, "text": "t",
      "mentions": [{"object": "o1", "role": "topic"}, {"object": "o1", "role": "nontopic"}]}]}]
  })"),
                  DuplicateMention);
  // Non-contiguous utterance indices
  CHECK_THROWS_AS(io::parse_corpus(R"({
    "format_version": 1, "objects": ["o1"],
    "dialogues": [{"id": "M1", "utterances": [{"index": 2, "text": "t", "mentions": []}]}]
  })"),
                  ValidationError);
}

TEST_CASE("responses parsing and validation") {
  const DialogueCorpus corpus = io::parse_corpus(kMinimalCorpus);

  SUBCASE("empty q2 is valid") {
    const auto rs = io::parse_responses(R"({
      "format_version": 1,
      "responses": [{"participant": "p1", "dialogue": "M1", "prefix_len": 1,
                     "q1": "o1", "q2": [], "passed_check": true}]
    })",
                                        corpus);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].q2.empty());
  }
  SUBCASE("prefix beyond dialogue length") {
    CHECK_THROWS_AS(io::parse_responses(R"({
      "format_version": 1,
      "responses": [{"participant": "p1", "dialogue": "M1", "prefix_len": 5,
                     "q1": "o1", "q2": [], "passed_check": true}]
    })",
                                        corpus),
                    PrefixOutOfRange);
  }
  SUBCASE("unknown q1 object") {
    CHECK_THROWS_AS(io::parse_responses(R"({
      "format_version": 1,
      "responses": [{"participant": "p1", "dialogue": "M1", "prefix_len": 1,
                     "q1": "ghost", "q2": [], "passed_check": true}]
    })",
                                        corpus),
                    DanglingReference);
  }
  SUBCASE("failed checks are retained but flagged") {
    const auto rs = io::parse_responses(R"({
      "format_version": 1,
      "responses": [{"participant": "p1", "dialogue": "M1", "prefix_len": 1,
                     "q1": "o1", "q2": [], "passed_check": false}]
    })",
                                        corpus);
    REQUIRE(rs.size() == 1);
    CHECK_FALSE(rs[0].passed_check);
  }
}

TEST_CASE("table round-trip") {
  SUBCASE("uniform") {
    const ConditionalStatusTable t;
    const ConditionalStatusTable back = io::read_table(io::write_table(t));
    CHECK(back.probs() == t.probs());
  }
  SUBCASE("trained table round-trips to identical bytes") {
    testing::SyntheticSpec spec;
    spec.seed = 8;
    const DialogueCorpus corpus = testing::make_corpus(spec);
    const ConditionalStatusTable t =
        train(corpus, testing::make_responses(corpus, spec), {}, 0.5);
    const std::string bytes = io::write_table(t);
    const ConditionalStatusTable back = io::read_table(bytes);
    CHECK(back.probs() == t.probs());
    CHECK(back.counts() == t.counts());
    CHECK(io::write_table(back) == bytes);
  }
  SUBCASE("row sum off by more than 1e-6 is rejected") {
    const std::string bad = R"({
      "format_version": 1,
      "rows": [
        {"prev": "I", "ling": "N", "p": [0.4, 0.3, 0.2]},
        {"prev": "I", "ling": "M", "p": [1, 0, 0]},
        {"prev": "I", "ling": "T", "p": [1, 0, 0]},
        {"prev": "A", "ling": "N", "p": [1, 0, 0]},
        {"prev": "A", "ling": "M", "p": [1, 0, 0]},
        {"prev": "A", "ling": "T", "p": [1, 0, 0]},
        {"prev": "F", "ling": "N", "p": [1, 0, 0]},
        {"prev": "F", "ling": "M", "p": [1, 0, 0]},
        {"prev": "F", "ling": "T", "p": [1, 0, 0]}
      ]
    })";
    CHECK_THROWS_AS(io::read_table(bad), RowSumError);
  }
}

TEST_CASE("serialization is deterministic") {
  testing::SyntheticSpec spec;
  spec.seed = 21;
  const DialogueCorpus corpus = testing::make_corpus(spec);
  const auto responses = testing::make_responses(corpus, spec);
  CHECK(io::write_corpus(corpus) == io::write_corpus(corpus));
  CHECK(io::write_responses(responses) == io::write_responses(responses));

  const DialogueCorpus corpus2 = io::parse_corpus(io::write_corpus(corpus));
  CHECK(io::write_corpus(corpus2) == io::write_corpus(corpus));
  const auto responses2 = io::parse_responses(io::write_responses(responses), corpus);
  CHECK(io::write_responses(responses2) == io::write_responses(responses));
}

TEST_CASE("report round-trip") {
  testing::SyntheticSpec spec;
  spec.seed = 34;
  spec.n_objects = 3;
  spec.n_dialogues = 2;
  const DialogueCorpus corpus = testing::make_corpus(spec);
  const auto responses = testing::make_responses(corpus, spec);
  RunConfig config;
  config.seed = 99;
  const EvalReport report = evaluate(
      corpus, responses,
      {ModelKind::UniformCsf, ModelKind::InformedCsf, ModelKind::Fsm, ModelKind::Random},
      config);
  const std::string bytes = io::write_report(report);
  const EvalReport back = io::read_report(bytes);
  CHECK(io::write_report(back) == bytes);
}

TEST_CASE("p-value display threshold") {
  CHECK(io::format_p_value(0.8551) == "0.8551");
  CHECK(io::format_p_value(5e-5) == "<0.0001");
  CHECK(io::format_p_value(1.0) == "1.0000");
}
