#include "rogers/analytics.hpp"
#include "rogers/engine.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

namespace rogers {
namespace {

SimParams short_run(LearningMode mode, std::size_t steps = 20'000) {
  SimParams p;
  p.learning_mode = mode;
  p.t_total = steps;
  p.equilibrium_window = steps / 2;
  return p;
}

PopulationState adapted_population(std::size_t n) {
  PopulationState s;
  s.agents.assign(n, Agent{Strategy::Individual, true, 0.5, 1.0});
  s.snapshot.assign(n, 1);
  return s;
}

TEST(StepEnvironment, NeverChangesAtZero) {
  Rng rng(1);
  auto state = adapted_population(50);
  AiNode ai{0.7};
  for (int i = 0; i < 1000; ++i) ASSERT_FALSE(step_environment(state, ai, 0.0, rng));
  EXPECT_EQ(ai.level, 0.7);
  EXPECT_TRUE(std::all_of(state.agents.begin(), state.agents.end(), [](const Agent& a) { return a.adapted; }));
}

TEST(StepEnvironment, AlwaysChangesAtOne) {
  Rng rng(2);
  auto state = adapted_population(50);
  AiNode ai{0.7};
  EXPECT_TRUE(step_environment(state, ai, 1.0, rng));
  EXPECT_EQ(ai.level, 0.0);
  EXPECT_TRUE(std::none_of(state.agents.begin(), state.agents.end(), [](const Agent& a) { return a.adapted; }));
  EXPECT_TRUE(std::all_of(state.snapshot.begin(), state.snapshot.end(), [](auto f) { return f == 0; }));
}

TEST(StepEnvironment, ChangeCountOverFullRunIsBinomial) {
  SimParams p;
  p.n_agents = 10;
  p.s_ok = p.s_not_ok = 1.0;
  p.t_total = 200'000;
  p.equilibrium_window = 50'000;
  const auto ts = run_simulation(p);
  const auto changes = std::count_if(ts.steps.begin(), ts.steps.end(), [](const StepStats& s) { return s.env_changed; });
  EXPECT_NEAR(static_cast<double>(changes), 2000.0, 3.0 * std::sqrt(200'000 * 0.01 * 0.99));
}

TEST(SurvivalPhase, CertainSurvivalAndDeath) {
  Rng rng(3);
  auto agents = adapted_population(100).agents;
  agents[3].ai_propensity = 0.25;
  EXPECT_EQ(survival_phase(agents, 1.0, 1.0, rng), 100u);
  EXPECT_EQ(agents[3].ai_propensity, 0.25);
  EXPECT_EQ(survival_phase(agents, 0.0, 0.0, rng), 0u);
  EXPECT_TRUE(agents.empty());
}

TEST(SurvivalPhase, PreservesOrder) {
  Rng rng(4);
  std::vector<Agent> agents(200);
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i].ai_propensity = static_cast<double>(i) / 200.0;
  survival_phase(agents, 0.5, 0.5, rng);
  EXPECT_TRUE(std::is_sorted(agents.begin(), agents.end(),
                             [](const Agent& a, const Agent& b) { return a.ai_propensity < b.ai_propensity; }));
}

TEST(SurvivalPhase, AdaptedSurvivorCountIsBinomial) {
  Rng rng(5);
  constexpr int reps = 200;
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < reps; ++r) {
    auto agents = adapted_population(1000).agents;
    const double k = static_cast<double>(survival_phase(agents, 0.93, 0.85, rng));
    sum += k;
    sum2 += k * k;
  }
  const double mean = sum / reps;
  const double sd = std::sqrt(sum2 / reps - mean * mean);
  const double sigma = std::sqrt(1000 * 0.93 * 0.07);
  EXPECT_NEAR(mean, 930.0, 3.0 * sigma / std::sqrt(reps));
  EXPECT_NEAR(sd, sigma, 0.2 * sigma);
}

TEST(Replenish, RestoresPopulationSize) {
  Rng rng(6);
  SimParams p;
  std::vector<Agent> agents(600);
  replenish(agents, p, rng);
  EXPECT_EQ(agents.size(), 1000u);
}

TEST(Replenish, NewbornsStartFreshAndInherit) {
  Rng rng(7);
  SimParams p;
  p.learning_mode = LearningMode::AiSocial;
  p.strategy_mutation_p = 0.0;
  p.propensity_mutation_p = 0.0;
  std::vector<Agent> agents(10, Agent{Strategy::Social, true, 0.3, 0.2});
  replenish(agents, p, rng);
  for (std::size_t i = 10; i < agents.size(); ++i) {
    EXPECT_EQ(agents[i].strategy, Strategy::Social);
    EXPECT_FALSE(agents[i].adapted);
    EXPECT_EQ(agents[i].kappa, 1.0);
    EXPECT_EQ(agents[i].ai_propensity, 0.3);
  }
}

TEST(Replenish, CertainMutationFlipsEveryNewborn) {
  Rng rng(8);
  SimParams p;
  p.learning_mode = LearningMode::HumanSocial;
  p.strategy_mutation_p = 1.0;
  std::vector<Agent> agents(5, Agent{Strategy::Individual, false, 0.5, 1.0});
  replenish(agents, p, rng);
  for (std::size_t i = 5; i < agents.size(); ++i) EXPECT_EQ(agents[i].strategy, Strategy::Social);
}

TEST(Replenish, PropensityMutationStaysInRange) {
  Rng rng(9);
  SimParams p;
  p.propensity_mutation_p = 1.0;
  p.propensity_mutation_sigma = 2.0;
  std::vector<Agent> agents(3, Agent{Strategy::Social, false, 0.9, 1.0});
  replenish(agents, p, rng);
  bool moved = false;
  for (const auto& a : agents) {
    ASSERT_GE(a.ai_propensity, 0.0);
    ASSERT_LE(a.ai_propensity, 1.0);
    moved |= a.ai_propensity != 0.9;
  }
  EXPECT_TRUE(moved);
}

TEST(Replenish, EmptySurvivorsIsExtinction) {
  Rng rng(10);
  std::vector<Agent> agents;
  try {
    replenish(agents, SimParams{}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Extinction);
  }
}

TEST(RunSimulation, DeterministicForFixedSeed) {
  const auto p = short_run(LearningMode::AiAndHumanCritical, 3000);
  EXPECT_EQ(run_simulation(p), run_simulation(p));
  auto q = p;
  q.seed = p.seed + 1;
  EXPECT_NE(run_simulation(p).steps, run_simulation(q).steps);
}

TEST(RunSimulation, StepInvariantsHoldInEveryMode) {
  for (const auto mode : kAllLearningModes) {
    auto p = short_run(mode, 2000);
    p.feedback_decay = 0.9;
    Simulation sim(p);
    while (!sim.done()) {
      ASSERT_EQ(sim.state().agents.size(), p.n_agents);
      const auto& s = sim.step();
      for (const double f : {s.q_ok, s.frac_individual, s.mean_ai_propensity, s.ai_level, s.mean_kappa}) {
        ASSERT_GE(f, 0.0);
        ASSERT_LE(f, 1.0);
      }
    }
    const auto& ts = sim.series();
    ASSERT_EQ(ts.steps.size(), p.t_total);
    for (std::size_t t = 0; t < ts.steps.size(); ++t) ASSERT_EQ(ts.steps[t].t, t);
  }
}

TEST(RunSimulation, IndividualOnlyKeepsEveryoneIndividual) {
  const auto ts = run_simulation(short_run(LearningMode::IndividualOnly, 2000));
  for (const auto& s : ts.steps) ASSERT_EQ(s.frac_individual, 1.0);
}

// With a static world and adaptation-blind survival, the measured fraction is
// the learning success rate times the common survival probability.
TEST(RunSimulation, StaticWorldBlindSurvivalMatchesLearningRate) {
  auto p = short_run(LearningMode::IndividualOnly);
  p.u = 0.0;
  p.s_ok = p.s_not_ok = 0.9;
  const auto eq = estimate_equilibrium(run_simulation(p), p.equilibrium_window);
  EXPECT_NEAR(eq.mean, p.p_individual() * 0.9, 3.0 * eq.std_error);

  p.s_ok = p.s_not_ok = 1.0;
  const auto eq1 = estimate_equilibrium(run_simulation(p), p.equilibrium_window);
  EXPECT_NEAR(eq1.mean, p.p_individual(), 3.0 * eq1.std_error);
}

TEST(RunSimulation, ExtinctionCarriesTruncatedSeries) {
  auto p = short_run(LearningMode::IndividualOnly, 100);
  p.s_ok = p.s_not_ok = 0.0;
  try {
    run_simulation(p);
    FAIL();
  } catch (const ExtinctionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Extinction);
    EXPECT_EQ(e.step(), 0u);
    ASSERT_EQ(e.partial().steps.size(), 1u);
    EXPECT_EQ(e.partial().steps[0].q_ok, 0.0);
  }
}

TEST(RunSimulation, AiLearnersLoseSkill) {
  auto p = short_run(LearningMode::AiCritical, 500);
  p.feedback_decay = 0.9;
  const auto ts = run_simulation(p);
  EXPECT_LT(ts.steps.back().mean_kappa, 0.9);
  p.feedback_decay = 1.0;
  for (const auto& s : run_simulation(p).steps) ASSERT_EQ(s.mean_kappa, 1.0);
}

TEST(RunSimulation, ScheduledNeverUpdatingStaysUninformed) {
  auto p = short_run(LearningMode::AiCritical, 5000);
  p.ai_policy.mode = AiMode::ScheduledSocial;
  p.ai_policy.social_update_cost = 1.0;
  for (const auto& s : run_simulation(p).steps) ASSERT_EQ(s.ai_level, 0.0);
}

TEST(RunSimulation, ScheduledAtZeroCostMatchesSnapToMean) {
  std::vector<Equilibrium> snap, sched;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto p = short_run(LearningMode::AiCritical);
    p.seed = seed;
    snap.push_back(estimate_equilibrium(run_simulation(p), p.equilibrium_window));
    p.ai_policy.mode = AiMode::ScheduledSocial;
    p.ai_policy.social_update_cost = 0.0;
    sched.push_back(estimate_equilibrium(run_simulation(p), p.equilibrium_window));
  }
  const auto a = pool(snap), b = pool(sched);
  EXPECT_NEAR(a.mean, b.mean, 3.0 * std::hypot(a.std_error, b.std_error));
}

TEST(RunSimulation, MixedPolicyDecisionsAreAudited) {
  auto p = short_run(LearningMode::AiSocial, 3000);
  p.ai_policy = {.individual_update_cost = 0.1, .z_ai = 0.7, .mode = AiMode::Mixed};
  const auto ts = run_simulation(p);
  ASSERT_EQ(ts.ai_decisions.size(), ts.steps.size());
  std::size_t individual = 0;
  for (std::size_t t = 0; t < ts.steps.size(); ++t) {
    const auto& d = ts.ai_decisions[t];
    ASSERT_GE(d.individual ? d.expected_individual : d.expected_social,
              d.individual ? d.expected_social : d.expected_individual);
    ASSERT_EQ(d.expected_social, ts.steps[t].q_ok);
    individual += d.individual;
    if (!d.individual) ASSERT_EQ(ts.steps[t].ai_level, ts.steps[t].q_ok);
  }
  EXPECT_GT(individual, 0u);
}

}  // namespace
}  // namespace rogers
