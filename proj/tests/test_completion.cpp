#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ontogen/ontogen.hpp"

using namespace ontogen;

namespace {

const std::string kData = ONTOGEN_DATA_DIR;
const std::string kKin = "http://example.org/kin/";

EmbeddingModel unit_model(double hr, double hi, double rr, double ri, double tr, double ti) {
  auto m = make_model({"h", "t"}, {"r"}, 1);
  m.entity_re = {hr, tr};
  m.entity_im = {hi, ti};
  m.relation_re = {rr};
  m.relation_im = {ri};
  return m;
}

std::vector<LabeledTriple> random_batch(std::mt19937_64& rng, const EmbeddingModel& m, std::size_t n) {
  std::vector<LabeledTriple> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({rng() % m.num_entities(), rng() % m.num_relations(), rng() % m.num_entities(),
                   rng() % 2 ? 1.0 : -1.0});
  }
  return out;
}

struct Kinship {
  std::vector<Triple> train, test, all;
};

const Kinship& kinship() {
  static const Kinship k = [] {
    Kinship out;
    out.train = parse_tsv_triples(read_file(kData + "/kinship/train.tsv"));
    out.test = parse_tsv_triples(read_file(kData + "/kinship/test.tsv"));
    out.all = out.train;
    out.all.insert(out.all.end(), out.test.begin(), out.test.end());
    return out;
  }();
  return k;
}

}  // namespace

TEST(Score, UnitDimensionCases) {
  // h = i, r = i, t = 1: f(h,r,t) = Re(i * i * 1) = -1, f(t,r,h) = Re(i * 1 * -i) = 1.
  auto m = unit_model(0, 1, 0, 1, 1, 0);
  EXPECT_DOUBLE_EQ(score(m, 0, 0, 1), -1.0);
  EXPECT_DOUBLE_EQ(score(m, 1, 0, 0), 1.0);

  auto identity = unit_model(0.6, 0.8, 1, 0, 0.6, 0.8);
  EXPECT_DOUBLE_EQ(score(identity, 0, 0, 1), 1.0);

  auto zero = unit_model(0.3, -0.7, 0, 0, 1.5, 2.0);
  EXPECT_EQ(score(zero, 0, 0, 1), 0.0);
}

TEST(Score, MatchesComplexArithmetic) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto m = oracle::random_model(rng, 1 + rng() % 10, 1 + rng() % 4, 1 + rng() % 16);
    std::size_t h = rng() % m.num_entities(), r = rng() % m.num_relations(), t = rng() % m.num_entities();
    EXPECT_NEAR(score(m, h, r, t), oracle::complex_score(m, h, r, t), 1e-9);
  }
}

TEST(Score, ConjugatingTheRelationSwapsDirection) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto m = oracle::random_model(rng, 5, 1, 6);
    double forward = score(m, 1, 0, 3);
    for (auto& x : m.relation_im) x = -x;
    EXPECT_NEAR(score(m, 3, 0, 1), forward, 1e-12);
  }
}

TEST(Score, RealRelationsAreSymmetric) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto m = oracle::random_model(rng, 6, 2, 1 + rng() % 8);
    std::fill(m.relation_im.begin(), m.relation_im.end(), 0.0);
    std::size_t h = rng() % 6, t = rng() % 6, r = rng() % 2;
    EXPECT_NEAR(score(m, h, r, t), score(m, t, r, h), 1e-12);
  }
}

TEST(Score, FastRowScoresMatchSingleScores) {
  std::mt19937_64 rng(4);
  auto m = oracle::random_model(rng, 12, 3, 7);
  for (std::size_t r = 0; r < 3; ++r) {
    auto tails = tail_scores(m, 4, r);
    auto heads = head_scores(m, r, 9);
    for (std::size_t e = 0; e < 12; ++e) {
      EXPECT_NEAR(tails[e], score(m, 4, r, e), 1e-12);
      EXPECT_NEAR(heads[e], score(m, e, r, 9), 1e-12);
    }
  }
}

TEST(Score, UnknownNamesThrow) {
  auto m = make_model({"a"}, {"r"}, 2);
  EXPECT_THROW(score(m, "a", "r", "b"), UnknownNameError);
  EXPECT_THROW(score(m, "a", "q", "a"), UnknownNameError);
}

TEST(Loss, ZeroModelGivesLogTwoPerExample) {
  auto m = make_model({"a", "b", "c"}, {"r"}, 4);
  std::vector<LabeledTriple> batch{{0, 0, 1, 1.0}, {1, 0, 2, -1.0}, {2, 0, 0, 1.0}};
  auto lg = loss_and_gradient(m, batch, 0.5);
  EXPECT_NEAR(lg.loss, 3 * std::log(2.0), 1e-12);
  EXPECT_EQ(lg.regularization, 0.0);
}

TEST(Loss, RegularizationScalesWithLambda) {
  std::mt19937_64 rng(5);
  auto m = oracle::random_model(rng, 6, 2, 4, 0.3);
  auto batch = random_batch(rng, m, 8);
  auto a = loss_and_gradient(m, batch, 0.01);
  auto b = loss_and_gradient(m, batch, 0.02);
  auto none = loss_and_gradient(m, batch, 0.0);
  EXPECT_NEAR(b.regularization, 2 * a.regularization, 1e-12);
  EXPECT_NEAR(a.loss - a.regularization, none.loss, 1e-12);
}

TEST(Loss, LogisticGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_model(rng, 2 + rng() % 9, 1 + rng() % 3, 1 + rng() % 8, 0.5);
    auto batch = random_batch(rng, m, 1 + rng() % 6);
    batch.push_back({0, 0, 0, 1.0});  // head == tail
    const double l2 = 0.01 * static_cast<double>(rng() % 3);
    auto lg = loss_and_gradient(m, batch, l2);
    auto err = oracle::gradient_error(m, lg.gradients,
                                      [&](const EmbeddingModel& x) { return loss_and_gradient(x, batch, l2).loss; });
    EXPECT_LT(err, 1e-4);
  }
}

TEST(Loss, RealRelationGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(7);
  auto m = oracle::random_model(rng, 5, 2, 4, 0.5);
  std::fill(m.relation_im.begin(), m.relation_im.end(), 0.0);
  auto batch = random_batch(rng, m, 6);
  auto lg = loss_and_gradient(m, batch, 0.01, true);
  for (const auto& [_, row] : lg.gradients.relation) {
    for (std::size_t i = 4; i < 8; ++i) EXPECT_EQ(row[i], 0.0);
  }
  auto err = oracle::gradient_error(
      m, lg.gradients, [&](const EmbeddingModel& x) { return loss_and_gradient(x, batch, 0.01, true).loss; }, true);
  EXPECT_LT(err, 1e-4);
}

TEST(Loss, MarginGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = oracle::random_model(rng, 6, 2, 5, 0.5);
    std::vector<RankingPair> pairs;
    for (int i = 0; i < 5; ++i) {
      LabeledTriple pos{rng() % 6, rng() % 2, rng() % 6, 1.0};
      LabeledTriple neg{pos.head, pos.relation, rng() % 6, -1.0};
      pairs.emplace_back(pos, neg);
    }
    // A large margin keeps every pair active, away from the hinge kink.
    auto lg = margin_loss_and_gradient(m, pairs, 50.0, 0.01);
    auto err = oracle::gradient_error(m, lg.gradients, [&](const EmbeddingModel& x) {
      return margin_loss_and_gradient(x, pairs, 50.0, 0.01).loss;
    });
    EXPECT_LT(err, 1e-4);
  }
}

TEST(Train, ConfigValidation) {
  TrainConfig cfg;
  cfg.dimension = 0;
  EXPECT_THROW(validate(cfg), Error);
  cfg = {};
  cfg.learning_rate = -1;
  EXPECT_THROW(validate(cfg), Error);
  EXPECT_THROW(train({}, TrainConfig{}), Error);
}

TEST(Train, SameSeedSameModel) {
  TrainConfig cfg;
  cfg.epochs = 20;
  auto a = train(kinship().train, cfg);
  auto b = train(kinship().train, cfg);
  EXPECT_EQ(save_model(a.model), save_model(b.model));
  EXPECT_EQ(a.epoch_loss, b.epoch_loss);
  cfg.seed = 43;
  EXPECT_NE(save_model(train(kinship().train, cfg).model), save_model(a.model));
}

TEST(Train, ThreadedTrainingIsReproducible) {
  TrainConfig cfg;
  cfg.epochs = 20;
  cfg.threads = 4;
  auto a = train(kinship().train, cfg);
  auto b = train(kinship().train, cfg);
  EXPECT_EQ(save_model(a.model), save_model(b.model));
}

TEST(Train, LossCurveDecreases) {
  auto r = train(kinship().train, TrainConfig{});
  const auto& loss = r.epoch_loss;
  ASSERT_EQ(loss.size(), 200u);
  ASSERT_EQ(r.batch_loss.size(), 200u);
  EXPECT_NEAR(r.batch_loss.front(), std::log(2.0), 0.05);
  std::vector<double> avg;
  for (std::size_t i = 0; i + 10 <= loss.size(); i += 10) {
    double s = 0;
    for (std::size_t j = i; j < i + 10; ++j) s += loss[j];
    avg.push_back(s / 10);
  }
  for (std::size_t i = 1; i < avg.size(); ++i) EXPECT_LE(avg[i], avg[i - 1] + 1e-9) << "window " << i;
  EXPECT_LT(loss.back(), 0.5 * loss.front());
}

TEST(Train, RealRelationsStayReal) {
  TrainConfig cfg;
  cfg.epochs = 5;
  cfg.real_relations = true;
  auto m = train(kinship().train, cfg).model;
  for (double x : m.relation_im) EXPECT_EQ(x, 0.0);
}

TEST(Train, MarginLossAlsoLearns) {
  TrainConfig cfg;
  cfg.loss = LossKind::kMarginRanking;
  auto r = train(kinship().train, cfg);
  EXPECT_LT(r.epoch_loss.back(), r.epoch_loss.front());
  EXPECT_GT(evaluate(r.model, kinship().test, kinship().all).mrr, 0.3);
}

TEST(Train, KinshipStructureIsLearned) {
  const auto& k = kinship();
  auto m = train(k.train, TrainConfig{}).model;
  std::size_t married = 0, married_ok = 0, parent = 0, parent_ok = 0;
  for (const auto& t : k.all) {
    double fwd = score(m, t.subject.value, t.predicate.value, t.object.value);
    double bwd = score(m, t.object.value, t.predicate.value, t.subject.value);
    if (t.predicate.value == kKin + "marriedTo") {
      ++married;
      married_ok += std::abs(fwd - bwd) < 0.25 * std::max(std::abs(fwd), 1.0);
    } else if (t.predicate.value == kKin + "parentOf") {
      ++parent;
      parent_ok += fwd > bwd;
    }
  }
  EXPECT_GE(static_cast<double>(married_ok) / static_cast<double>(married), 0.8);
  EXPECT_GE(static_cast<double>(parent_ok) / static_cast<double>(parent), 0.8);
}

TEST(Evaluate, HandComputedRanks) {
  // Three entities on the real line; r = 1 so f(h, r, t) = h * t.
  auto m = make_model({"a", "b", "c"}, {"r"}, 1);
  m.entity_re = {1.0, 2.0, 3.0};
  m.relation_re = {1.0};
  Triple test = make_triple("a", "r", "b");
  // Tail query (a, r, ?): scores 1, 2, 3 -> b ranks 2. Head query (?, r, b):
  // scores 2, 4, 6 -> a ranks 3.
  auto r = evaluate(m, {test}, {test});
  EXPECT_NEAR(r.mrr, (1.0 / 2 + 1.0 / 3) / 2, 1e-12);
  EXPECT_EQ(r.hits_at[1], 0.0);
  EXPECT_EQ(r.hits_at[3], 1.0);

  // Filtering (a, r, c) lifts b to rank 1 for the tail query.
  auto f = evaluate(m, {test}, {test, make_triple("a", "r", "c")});
  EXPECT_NEAR(f.mrr, (1.0 + 1.0 / 3) / 2, 1e-12);
}

TEST(Evaluate, TiesArePessimistic) {
  auto m = make_model({"a", "b", "c", "d"}, {"r"}, 1);
  auto r = evaluate(m, {make_triple("a", "r", "b")}, {});
  EXPECT_NEAR(r.mrr, 0.25, 1e-12);
}

TEST(Evaluate, PerfectModelScoresOne) {
  // Each entity i is e^{i theta_i}; r = 1. Diagonal scores dominate.
  const std::size_t n = 20, d = 20;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  auto m = make_model(names, {"same"}, d);
  for (std::size_t i = 0; i < n; ++i) m.entity_re[i * d + i] = 1.0;
  for (std::size_t i = 0; i < d; ++i) m.relation_re[i] = 1.0;
  std::vector<Triple> test;
  for (const auto& e : names) test.push_back(make_triple(e, "same", e));
  auto r = evaluate(m, test, test);
  EXPECT_EQ(r.mrr, 1.0);
  EXPECT_EQ(r.hits_at[1], 1.0);
}

TEST(Evaluate, RandomModelIsPoor) {
  std::mt19937_64 rng(9);
  auto m = oracle::random_model(rng, 100, 1, 10);
  std::vector<Triple> test;
  for (int i = 0; i < 200; ++i) {
    test.push_back(make_triple("http://e/" + std::to_string(rng() % 100), "http://r/0",
                               "http://e/" + std::to_string(rng() % 100)));
  }
  EXPECT_LT(evaluate(m, test, test).mrr, 0.2);
}

TEST(Evaluate, UnknownTestEntityThrows) {
  auto m = make_model({"a"}, {"r"}, 1);
  EXPECT_THROW(evaluate(m, {make_triple("a", "r", "zzz")}, {}), UnknownNameError);
}

TEST(Predict, ThresholdOneYieldsNothing) {
  auto kg = load_graph(kData + "/fortune/kg.jsonl").graph;
  TrainConfig cfg;
  cfg.epochs = 5;
  auto m = train(training_triples(kg), cfg).model;
  EXPECT_TRUE(predict_missing(m, kg, {"http://example.org/fortune/business"}, 1.0, 1).empty());
}

TEST(Predict, EveryEligibleSubjectGetsOnePrediction) {
  auto kg = load_graph(kData + "/fortune/kg.jsonl").graph;
  TrainConfig cfg;
  cfg.epochs = 20;
  auto m = train(training_triples(kg), cfg).model;
  const std::string business = "http://example.org/fortune/business";
  auto out = predict_missing(m, kg, {business}, 0.0, 1);
  EXPECT_EQ(out.size(), 430u);
  std::set<Term> subjects;
  for (const auto& st : out) {
    EXPECT_TRUE(st.predicted);
    EXPECT_FALSE(kg.contains(st.triple));
    EXPECT_EQ(st.triple.object.value.rfind("http://example.org/fortune/sector/", 0), 0u);
    EXPECT_TRUE(subjects.insert(st.triple.subject).second);
  }
}

TEST(Predict, TopKBoundsPredictionsPerSubject) {
  const auto& k = kinship();
  auto kg = graph_from(k.train);
  auto m = train(k.train, TrainConfig{}).model;
  auto out = predict_missing(m, kg, {kKin + "marriedTo"}, 0.0, 2);
  std::map<Term, int> per;
  for (const auto& st : out) ++per[st.triple.subject];
  for (const auto& [_, n] : per) EXPECT_LE(n, 2);
}

// Drop every parentOf edge of a fifth of the parents, retrain, and check that
// the single best prediction for each such parent is one of its children.
TEST(Predict, HeldOutParentsRecoveredAtRankOne) {
  const auto& k = kinship();
  const std::string parent_of = kKin + "parentOf";
  std::vector<std::string> parents;
  for (const auto& t : k.all) {
    if (t.predicate.value == parent_of) parents.push_back(t.subject.value);
  }
  std::sort(parents.begin(), parents.end());
  parents.erase(std::unique(parents.begin(), parents.end()), parents.end());

  for (std::uint64_t seed : {1, 2, 3}) {
    auto order = parents;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::string> removed(order.begin(), order.begin() + (order.size() + 4) / 5);

    std::vector<Triple> kept;
    std::set<Triple> held;
    for (const auto& t : k.all) {
      if (t.predicate.value == parent_of && removed.count(t.subject.value)) {
        held.insert(t);
      } else {
        kept.push_back(t);
      }
    }
    auto m = train(kept, TrainConfig{}).model;
    std::size_t hits = 0;
    for (const auto& st : predict_missing(m, graph_from(kept), {parent_of}, 0.0, 1)) {
      hits += held.count(st.triple);
    }
    EXPECT_GE(static_cast<double>(hits) / static_cast<double>(removed.size()), 0.6) << "seed " << seed;
  }
}

TEST(Agreement, CountsCaseInsensitiveMatches) {
  std::vector<std::string> old_labels, new_labels;
  for (int i = 0; i < 70; ++i) {
    old_labels.push_back("Sector" + std::to_string(i % 10));
    new_labels.push_back(i < 7 ? "Elsewhere" : "sector" + std::to_string(i % 10));
  }
  EXPECT_NEAR(agreement_check(old_labels, new_labels, 0.8), 0.9, 1e-12);
  EXPECT_EQ(agreement_check({"Technology"}, {"technology"}, 1.0), 1.0);
  EXPECT_EQ(agreement_check({}, {}, 0.8), 1.0);
  EXPECT_THROW(agreement_check({"a"}, {}, 0.8), Error);
}

TEST(ModelFile, RoundTripIsExact) {
  std::mt19937_64 rng(10);
  auto m = oracle::random_model(rng, 7, 3, 5);
  auto back = load_model(save_model(m));
  EXPECT_TRUE(back == m);
}

TEST(ModelFile, MalformedInputIsRejected) {
  EXPECT_THROW(load_model(""), ParseError);
  EXPECT_THROW(load_model("XXXX 1 1 1 1\n"), ParseError);
  EXPECT_THROW(load_model("OGCX 1 1 0 2\nE\ta\t1 2\n"), ParseError);
  EXPECT_THROW(load_model("OGCX 1 2 0 1\nE\ta\t1 2\n"), ParseError);
}
