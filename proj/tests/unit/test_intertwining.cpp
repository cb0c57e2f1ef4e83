#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sot/intertwining.hpp"

using namespace sot;

namespace {

ProblemInstance log_unit(int n) { return ProblemInstance::unit(n, Kernel::log()); }

ProblemInstance gap_instance() {
  const FieldFunction j({0.0, 2.0 / 3.0, 1.0}, {NegInfPiece{}, ConstantPiece{0.0}},
                        {ExtReal::neg_inf(), ExtReal::finite(0.0), ExtReal::finite(0.0)});
  return ProblemInstance({1.0}, Kernel::log(), j);
}

bool is_majorization(Relation r) { return r == Relation::x_majorizes_y || r == Relation::y_majorizes_x; }

MaximaVector vec(std::initializer_list<double> v) {
  MaximaVector mv;
  for (double x : v) {
    mv.m.push_back(std::isinf(x) ? ExtReal::neg_inf() : ExtReal::finite(x));
    mv.argmax.emplace_back();
  }
  return mv;
}

}  // namespace

TEST(Compare, GapFieldMajorization) {
  const auto c = compare_maxima(gap_instance(), NodeSystem{1.0 / 3.0}, NodeSystem{2.0 / 3.0}, 1e-9);
  EXPECT_EQ(c.relation, Relation::x_majorizes_y);
  EXPECT_EQ(c.witness_up, 1u);
  EXPECT_FALSE(c.witness_down.has_value());
  EXPECT_EQ(c.margins[0], 0.0);
  EXPECT_NEAR(c.margins[1], std::log(2.0), 1e-12);
}

TEST(Compare, IdenticalSystemsAreEqual) {
  const NodeSystem y{0.2, 0.5};
  EXPECT_EQ(compare_maxima(log_unit(2), y, y, 0.0).relation, Relation::equal);
}

TEST(Compare, OneNodeIntertwines) {
  const auto c = compare_maxima(log_unit(1), NodeSystem{0.3}, NodeSystem{0.5}, 1e-9);
  EXPECT_EQ(c.relation, Relation::intertwines);
  EXPECT_EQ(c.witness_up, 1u);
  EXPECT_EQ(c.witness_down, 0u);
  EXPECT_NEAR(c.margins[0], std::log(0.3) - std::log(0.5), 1e-12);
  EXPECT_NEAR(c.margins[1], std::log(0.7) - std::log(0.5), 1e-12);
}

TEST(Compare, NegInfSemantics) {
  const double ninf = -std::numeric_limits<double>::infinity();
  const auto c = compare_vectors(vec({0.0, ninf, ninf}), vec({0.0, -1.0, ninf}), 1e-9);
  EXPECT_EQ(c.relation, Relation::y_majorizes_x);
  EXPECT_EQ(c.margins[1], ninf);
  EXPECT_EQ(c.margins[2], 0.0);
  EXPECT_EQ(compare_vectors(vec({1.0, ninf}), vec({0.0, 2.0}), 0.0).relation, Relation::intertwines);
  EXPECT_EQ(compare_vectors(vec({0.0, 1e-10}), vec({0.0, 0.0}), 1e-9).relation, Relation::equal);
  EXPECT_THROW(compare_vectors(vec({0.0}), vec({0.0, 0.0}), 0.0), std::invalid_argument);
}

TEST(Margin, NegInfAware) {
  const double ninf = -std::numeric_limits<double>::infinity();
  EXPECT_DOUBLE_EQ(majorization_margin(vec({ninf, -1.0}), vec({ninf, -0.5})), 0.5);
  EXPECT_EQ(majorization_margin(vec({0.0, -1.0}), vec({ninf, 0.0})), ninf);
  EXPECT_DOUBLE_EQ(majorization_margin(vec({ninf, -1.0}), vec({3.0, -1.5})), -0.5);
}

TEST(Compare, Antisymmetry) {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const auto inst = support::random_instance(rng, n, support::random_kernel(rng, false));
    const NodeSystem x = random_node_system(rng, static_cast<std::size_t>(n));
    const NodeSystem y = random_node_system(rng, static_cast<std::size_t>(n));
    const auto xy = compare_maxima(inst, x, y, 1e-9);
    const auto yx = compare_maxima(inst, y, x, 1e-9);
    EXPECT_EQ(xy.relation == Relation::intertwines, yx.relation == Relation::intertwines);
    EXPECT_EQ(xy.relation == Relation::x_majorizes_y, yx.relation == Relation::y_majorizes_x);
    EXPECT_EQ(xy.relation == Relation::equal, yx.relation == Relation::equal);
    if (xy.relation == Relation::intertwines) EXPECT_TRUE(xy.witness_up && xy.witness_down);
  }
}

// Regular pairs never majorize for strictly concave, strictly monotone
// kernels and usc fields.
TEST(Intertwining, RandomRegularPairs) {
  Rng rng(2);
  for (const auto& k : support::strict_kernels()) {
    for (const auto& f : support::fixture_fields()) {
      for (int n = 1; n <= 3; ++n) {
        const ProblemInstance inst(std::vector<double>(static_cast<std::size_t>(n), 1.0), k.kernel, f.field);
        for (int i = 0; i < 100; ++i) {
          const auto x = random_regular_node_system(inst, rng);
          const auto y = random_regular_node_system(inst, rng);
          ASSERT_TRUE(x && y);
          const auto c = compare_maxima(inst, *x, *y, 1e-9);
          EXPECT_FALSE(is_majorization(c.relation)) << k.name << "/" << f.name << " n=" << n;
          if (x->distance(*y) > 1e-6) EXPECT_EQ(c.relation, Relation::intertwines);
        }
      }
    }
  }
}

// Coordinatewise ordered regular pairs x <= y, x != y intertwine.
TEST(Intertwining, OrderedPairsIntertwine) {
  Rng rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : support::strict_kernels()) {
      for (const auto& f : support::fixture_fields()) {
        const ProblemInstance inst(std::vector<double>(static_cast<std::size_t>(n), 1.0), k.kernel, f.field);
        for (int i = 0; i < 40; ++i) {
          const auto x = random_regular_node_system(inst, rng);
          ASSERT_TRUE(x);
          std::vector<double> v(x->values().begin(), x->values().end());
          for (double& c : v) {
            if (rng.below(2) == 0) c = std::min(1.0, c + rng.uniform(1e-3, 0.3));
          }
          const NodeSystem y = NodeSystem::project(v);
          if (!is_regular(inst, y) || x->distance(y) < 1e-3) continue;
          for (std::size_t j = 0; j < y.size(); ++j) ASSERT_LE((*x)[j], y[j]);
          EXPECT_EQ(compare_maxima(inst, *x, y, 1e-9).relation, Relation::intertwines)
              << k.name << "/" << f.name << " n=" << n;
        }
      }
    }
  }
}

TEST(Search, ZeroBudget) {
  SearchOptions o;
  const auto rep = search_majorization(log_unit(3), o);
  EXPECT_EQ(rep.verdict, SearchVerdict::no_majorization_found);
  EXPECT_EQ(rep.pairs_evaluated, 0);
  EXPECT_FALSE(rep.best_x.has_value());
}

TEST(Search, NonregularSeedPairIsFlagged) {
  SearchOptions o;
  o.budget = 50;
  o.admit_nonregular = true;
  o.seed_pairs = {{NodeSystem{1.0 / 3.0}, NodeSystem{2.0 / 3.0}}};
  const auto rep = search_majorization(gap_instance(), o);
  EXPECT_EQ(rep.verdict, SearchVerdict::candidate_found);
  EXPECT_TRUE(rep.out_of_hypothesis);
  EXPECT_FALSE(rep.best_pair_regular);
  ASSERT_TRUE(rep.reverified_margin.has_value());
  EXPECT_GT(*rep.reverified_margin, 1e-9);
  // Dominated system first.
  EXPECT_GT(rep.best_x->distance(*rep.best_y), 1e-9);
}

TEST(Search, RegularOnlyOnGapField) {
  SearchOptions o;
  o.budget = 2000;
  o.seed = 4;
  const auto rep = search_majorization(gap_instance(), o);
  EXPECT_EQ(rep.verdict, SearchVerdict::no_majorization_found);
  EXPECT_EQ(rep.pairs_evaluated, 2000);
  EXPECT_TRUE(rep.best_pair_regular);
}

TEST(Search, StrictModeFindsNothingForMonotoneKernels) {
  for (const auto strategy : {SearchStrategy::random_pairs, SearchStrategy::hill_climb}) {
    for (int n = 4; n <= 6; ++n) {
      SearchOptions o;
      o.budget = 3000;
      o.seed = static_cast<std::uint64_t>(n);
      o.strategy = strategy;
      const auto rep = search_majorization(ProblemInstance::unit(n, Kernel::log_shifted(0.05)), o);
      EXPECT_EQ(rep.verdict, SearchVerdict::no_majorization_found) << to_string(strategy) << " n=" << n;
      EXPECT_EQ(rep.pairs_evaluated, 3000);
      EXPECT_LE(rep.best_margin, 1e-9);
    }
  }
}

TEST(Search, DeterministicAcrossRunsAndThreads) {
  SearchOptions o;
  o.budget = 1500;
  o.seed = 77;
  o.workers = 3;
  o.strategy = SearchStrategy::hill_climb;
  o.trace_all = true;
  const auto inst = ProblemInstance::unit(4, Kernel::power(0.5));
  const auto a = search_majorization(inst, o);
  const auto b = search_majorization(inst, o);
  EXPECT_EQ(a.pairs_evaluated, 1500);
  EXPECT_EQ(a.best_margin, b.best_margin);
  EXPECT_EQ(a.best_x, b.best_x);
  ASSERT_EQ(a.records.size(), b.records.size());
  EXPECT_EQ(a.records.size(), 1500u);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].x, b.records[i].x);
    EXPECT_EQ(a.records[i].margin, b.records[i].margin);
  }
}

TEST(Search, WeakModeUsesTies) {
  // Weak mode accepts ties on all but one coordinate; the gap pair qualifies.
  SearchOptions o;
  o.budget = 10;
  o.admit_nonregular = true;
  o.mode = MajorizationMode::weak;
  o.seed_pairs = {{NodeSystem{1.0 / 3.0}, NodeSystem{2.0 / 3.0}}};
  EXPECT_EQ(search_majorization(gap_instance(), o).verdict, SearchVerdict::candidate_found);
}

TEST(Search, RejectsBadOptions) {
  SearchOptions o;
  o.budget = -1;
  EXPECT_THROW(search_majorization(log_unit(1), o), std::invalid_argument);
  o.budget = 1;
  o.workers = 0;
  EXPECT_THROW(search_majorization(log_unit(1), o), std::invalid_argument);
}

TEST(Reflection, SymmetricFixedPoint) {
  const auto r = reflect_instance(log_unit(1), NodeSystem{0.5});
  EXPECT_EQ(r.nodes, NodeSystem{0.5});
  EXPECT_EQ(r.instance.weights(), log_unit(1).weights());
  EXPECT_EQ(r.instance.field(), log_unit(1).field());
  for (double t : {0.0, 0.2, 0.7, 1.0})
    EXPECT_EQ(eval_weighted(r.instance, r.nodes, t), eval_weighted(log_unit(1), NodeSystem{0.5}, t));
}

TEST(Reflection, Involution) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto inst = support::random_instance(rng, n, support::random_kernel(rng, false));
    const NodeSystem y = random_node_system(rng, static_cast<std::size_t>(n));
    const auto once = reflect_instance(inst, y);
    const auto twice = reflect_instance(once.instance, once.nodes);
    EXPECT_EQ(twice.instance.weights(), inst.weights());
    EXPECT_EQ(twice.instance.kernel(), inst.kernel());
    EXPECT_LE(twice.nodes.distance(y), 1e-15);
    for (std::size_t k = 0; k < inst.field().breakpoints().size(); ++k)
      EXPECT_NEAR(twice.instance.field().breakpoints()[k], inst.field().breakpoints()[k], 1e-15);
  }
}

TEST(Reflection, WeightedExample) {
  const ProblemInstance inst({1.0, 2.0}, Kernel::log(), FieldFunction::constant(0.0));
  const auto r = reflect_instance(inst, NodeSystem{0.2, 0.6});
  EXPECT_EQ(r.instance.weights(), (std::vector<double>{2.0, 1.0}));
  EXPECT_NEAR(r.nodes[0], 0.4, 1e-15);
  EXPECT_NEAR(r.nodes[1], 0.8, 1e-15);
  const double expect = std::log(0.7) + 2.0 * std::log(0.3);
  EXPECT_NEAR(eval_weighted(inst, NodeSystem{0.2, 0.6}, 0.9).value(), expect, 1e-12);
  EXPECT_NEAR(eval_weighted(r.instance, r.nodes, 0.1).value(), expect, 1e-12);
}

TEST(Reflection, MaximaConjugacy) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto inst = support::random_instance(rng, n, support::random_kernel(rng, false));
    const NodeSystem y = random_node_system(rng, static_cast<std::size_t>(n));
    const auto r = reflect_instance(inst, y);
    const auto m = interval_maxima(inst, y);
    const auto ms = interval_maxima(r.instance, r.nodes);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
      const ExtReal a = ms.m[j], b = m.m[static_cast<std::size_t>(n) - j];
      ASSERT_EQ(a.is_finite(), b.is_finite());
      if (a.is_finite()) EXPECT_NEAR(a.value(), b.value(), 1e-9);
    }
  }
}

TEST(Absorb, TwoLogNodesFirstIndex) {
  const auto a = absorb_node(log_unit(2), NodeSystem{0.3, 0.7}, 1);
  EXPECT_EQ(a.instance.n(), 1);
  EXPECT_EQ(a.nodes, NodeSystem{0.7});
  ASSERT_EQ(a.instance.field().translates().size(), 1u);
  EXPECT_EQ(a.instance.field().translates()[0].center, 0.3);
  const auto m = interval_maxima(a.instance, a.nodes);
  EXPECT_NEAR(m.m[0].value(), std::log(0.21), 1e-12);
  EXPECT_NEAR(m.m[1].value(), std::log(0.21), 1e-12);
  EXPECT_TRUE(a.verified);
  const auto merged = a.merge.apply(interval_maxima(log_unit(2), NodeSystem{0.3, 0.7}));
  EXPECT_NEAR(merged[0].value(), std::log(0.21), 1e-12);
  EXPECT_NEAR(merged[1].value(), std::log(0.21), 1e-12);
  const auto g = support::dense_grid_maxima(a.instance, a.nodes, 200000);
  EXPECT_NEAR(g.m[0], std::log(0.21), 1e-9);
}

TEST(Absorb, IndexErrors) {
  EXPECT_THROW(absorb_node(log_unit(2), NodeSystem{0.3, 0.7}, 0), std::out_of_range);
  EXPECT_THROW(absorb_node(log_unit(2), NodeSystem{0.3, 0.7}, 3), std::out_of_range);
  EXPECT_THROW(absorb_node(log_unit(1), NodeSystem{0.5}, 1), std::invalid_argument);
}

TEST(Absorb, MergeMapShape) {
  const auto a = absorb_node(log_unit(4), NodeSystem{0.1, 0.3, 0.6, 0.8}, 3);
  using V = std::vector<std::size_t>;
  ASSERT_EQ(a.merge.sources.size(), 4u);
  EXPECT_EQ(a.merge.sources[0], V{0});
  EXPECT_EQ(a.merge.sources[1], V{1});
  EXPECT_EQ(a.merge.sources[2], (V{2, 3}));
  EXPECT_EQ(a.merge.sources[3], V{4});
}

TEST(Absorb, MergeMapMatchesReducedMaxima) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const auto inst = support::random_instance(rng, n, support::random_kernel(rng, false));
    const NodeSystem x = random_node_system(rng, static_cast<std::size_t>(n));
    const std::size_t idx = 1 + rng.below(static_cast<std::uint64_t>(n));
    const auto a = absorb_node(inst, x, idx);
    EXPECT_TRUE(a.verified) << "discrepancy " << a.max_discrepancy;
  }
}
