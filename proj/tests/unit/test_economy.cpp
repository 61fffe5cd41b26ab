#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "ubisim/core/decision.hpp"
#include "ubisim/economy/economy.hpp"
#include "ubisim/economy/settlement.hpp"
#include "ubisim/simulation/simulation.hpp"

using namespace ubisim;

namespace {

ModelParams with(double phi, double need) {
  ModelParams p;
  p.acceptance_ratio = phi;
  p.necessity_total = need;
  return p;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("distribute_ubi credits D only") {
  ModelParams p;
  p.ubi_amount = 0.0;
  CHECK(distribute_ubi({1.0, 0.0, 0.0}, p).d_balance == 0.0);
  p.ubi_amount = 50.0;
  const AgentState after = distribute_ubi({1.0, 5.0, 7.0}, p);
  CHECK(after.d_balance == 55.0);
  CHECK(after.y_balance == 7.0);
}

TEST_CASE("apply_decay shrinks carried D") {
  ModelParams p;
  p.decay_rate = 0.0;
  CHECK(apply_decay({1.0, 100.0, 3.0}, p).d_balance == 100.0);
  p.decay_rate = 1.0;
  CHECK(apply_decay({1.0, 100.0, 3.0}, p).d_balance == 0.0);
  p.decay_rate = 0.1;
  const AgentState after = apply_decay({1.0, 100.0, 3.0}, p);
  CHECK(after.d_balance == doctest::Approx(90.0).epsilon(1e-15));
  CHECK(after.y_balance == 3.0);
}

TEST_CASE("settle_necessities: worked examples") {
  SUBCASE("ample D, full acceptance") {
    const auto s = settle_necessities(100.0, 0.0, with(1.0, 10.0));
    CHECK(s.d_spent == 10.0);
    CHECK(s.y_spent == 0.0);
    CHECK(s.satisfied_necessities == 10.0);
    CHECK_FALSE(s.unmet);
    CHECK(s.post_d == 90.0);
  }
  SUBCASE("D not accepted, no Y") {
    const auto s = settle_necessities(100.0, 0.0, with(0.0, 10.0));
    CHECK(s.d_spent == 0.0);
    CHECK(s.y_spent == 0.0);
    CHECK(s.satisfied_necessities == 0.0);
    CHECK(s.unmet);
  }
  SUBCASE("D runs short, Y covers part of both portions") {
    const auto s = settle_necessities(3.0, 6.0, with(0.5, 10.0));
    CHECK(s.d_spent == 3.0);
    CHECK(s.y_spent == 6.0);
    CHECK(s.satisfied_necessities == 9.0);
    CHECK(s.unmet);
    CHECK(s.post_d == 0.0);
    CHECK(s.post_y == 0.0);
  }
}

TEST_CASE("settle_necessities invariants on random balances") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const ModelParams p = with(unit(gen), 1.0 + 200.0 * unit(gen));
    const double d = 300.0 * unit(gen) * unit(gen);
    const double y = 300.0 * unit(gen) * unit(gen);
    const auto s = settle_necessities(d, y, p);
    CHECK(s.d_spent >= 0.0);
    CHECK(s.y_spent >= 0.0);
    CHECK(s.d_spent <= d);
    CHECK(s.y_spent <= y);
    CHECK(s.d_spent <= p.acceptance_ratio * p.necessity_total);
    CHECK(s.post_d == d - s.d_spent);
    CHECK(s.post_y == y - s.y_spent);
    CHECK(s.post_d >= 0.0);
    CHECK(s.post_y >= 0.0);
    CHECK(s.satisfied_necessities == doctest::Approx(s.d_spent + s.y_spent).epsilon(1e-12));
    CHECK(s.unmet == (s.satisfied_necessities < p.necessity_total));
  }
}

TEST_CASE("settlement matches exhaustive enumeration on an integer money grid") {
  // Money in cents; phi dyadic so phi * need is exact.
  std::mt19937_64 gen(99);
  for (int i = 0; i < 600; ++i) {
    const std::int64_t need = 64 * std::uniform_int_distribution<std::int64_t>(1, 3)(gen);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, 64)(gen);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(0, 250)(gen);
    const std::int64_t y = std::uniform_int_distribution<std::int64_t>(0, 250)(gen);
    const double phi = static_cast<double>(k) / 64.0;
    const auto brute = oracle::brute_force_settlement(d, y, need, k * need / 64);
    const auto s = settle_necessities(static_cast<double>(d), static_cast<double>(y),
                                      with(phi, static_cast<double>(need)));
    REQUIRE(s.satisfied_necessities == static_cast<double>(brute.satisfied));
    REQUIRE(s.post_y == static_cast<double>(brute.post_y));
    REQUIRE(s.d_spent == static_cast<double>(brute.d_spent));
  }
}

TEST_CASE("step_period: single idle agent lives on UBI") {
  ModelParams p;
  p.population_size = 1;
  p.alpha_min = p.alpha_max = 1e6;
  p.acceptance_ratio = 1.0;
  p.ubi_amount = p.necessity_total;
  Population pop = init_population(p, 1);
  const PeriodOutcome out = step_period(pop, p);
  CHECK(out.actions.at(0) == Action::NonWork);
  CHECK(out.metrics.unmet_count == 0);
  CHECK(out.metrics.share_0 == 1.0);
}

TEST_CASE("step_period: without D acceptance nobody idles in period 1") {
  ModelParams p;
  p.acceptance_ratio = 0.0;
  p.wage_essential = 150.0;
  p.wage_nonessential = 110.0;
  p.unmet_penalty = 100.0;
  p.population_size = 500;
  Population pop = init_population(p, 42);
  const PeriodOutcome out = step_period(pop, p);
  CHECK(out.metrics.nonwork_count == 0);
  CHECK(out.metrics.unmet_count == 0);
}

TEST_CASE("step_period keeps the books balanced") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    ModelParams p;
    p.population_size = 257;
    p.acceptance_ratio = unit(gen);
    p.decay_rate = unit(gen);
    p.ubi_amount = 200.0 * unit(gen);
    Population pop = init_population(p, static_cast<std::uint64_t>(trial));
    for (int t = 0; t < 30; ++t) {
      const double d_before = sum(pop.d_balance);
      const double y_before = sum(pop.y_balance);
      const Population snapshot = pop;
      const PeriodOutcome out = step_period(pop, p);
      const PeriodLedger& l = out.ledger;

      const double d_expect = (d_before + l.ubi_issued - l.d_spent) * (1.0 - p.decay_rate);
      CHECK(sum(pop.d_balance) == doctest::Approx(d_expect).epsilon(1e-12).scale(1.0));
      CHECK(sum(pop.y_balance) ==
            doctest::Approx(y_before + l.wages_paid - l.y_spent).epsilon(1e-12).scale(1.0));
      CHECK(l.ubi_issued >= 0.0);
      CHECK(l.wages_paid >= 0.0);
      CHECK(l.d_decayed >= 0.0);
      CHECK(l.d_spent >= 0.0);
      CHECK(l.y_spent >= 0.0);
      CHECK(out.metrics.essential_count + out.metrics.nonessential_count +
                out.metrics.nonwork_count ==
            p.population_size);

      for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(pop.d_balance[i] >= 0.0);
        CHECK(pop.y_balance[i] >= 0.0);
        CHECK(pop.alpha[i] == snapshot.alpha[i]);
        // Y only moves by the wage earned and what was paid out of it.
        CHECK(pop.y_balance[i] <= snapshot.y_balance[i] + p.wage(out.actions[i]));
      }
    }
  }
}

TEST_CASE("D never turns into Y") {
  ModelParams p;
  p.population_size = 16;
  p.ubi_amount = 1e6;
  p.acceptance_ratio = 1.0;
  p.alpha_min = p.alpha_max = 1e6;  // nobody works
  Population pop = init_population(p, 3);
  for (int t = 0; t < 5; ++t) {
    const PeriodOutcome out = step_period(pop, p);
    CHECK(out.ledger.wages_paid == 0.0);
    CHECK(out.ledger.y_spent == 0.0);
    for (double y : pop.y_balance) CHECK(y == 0.0);
  }
}

TEST_CASE("essential capacity rations by utility margin") {
  ModelParams p;
  p.population_size = 200;
  p.acceptance_ratio = 0.0;  // everyone wants essential work
  Population base = init_population(p, 5);

  Population free_pop = base;
  const auto unlimited = step_period(free_pop, p);
  REQUIRE(unlimited.metrics.essential_count == 200);

  for (std::int64_t cap : {0, 1, 37, 200, 500}) {
    ModelParams q = p;
    q.essential_capacity = cap;
    Population pop = base;
    const auto out = step_period(pop, q);
    CHECK(out.metrics.essential_count == std::min<std::int64_t>(cap, 200));
    CHECK(out.metrics.essential_count + out.metrics.nonessential_count + out.metrics.nonwork_count ==
          200);

    // Kept slots go to the largest margins.
    std::vector<double> margins;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Population one = base;
      margins.push_back(choose_action(distribute_ubi(one.agent(i), q), q).essential_margin());
    }
    double min_kept = 1e300, max_dropped = -1e300;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (out.actions[i] == Action::Essential) {
        min_kept = std::min(min_kept, margins[i]);
      } else {
        max_dropped = std::max(max_dropped, margins[i]);
        const Choice c = choose_action(distribute_ubi(base.agent(i), q), q);
        CHECK(out.actions[i] == c.best_non_essential());
      }
    }
    if (cap > 0 && cap < 200) CHECK(min_kept >= max_dropped);
  }
}
