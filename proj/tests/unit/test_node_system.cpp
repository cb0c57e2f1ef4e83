#include <gtest/gtest.h>

#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"
#include "sot/random.hpp"

using namespace sot;

TEST(NodeSystem, ValidatesOrderAndRange) {
  EXPECT_THROW(NodeSystem({0.6, 0.4}), std::invalid_argument);
  EXPECT_THROW(NodeSystem({-0.1}), std::invalid_argument);
  EXPECT_THROW(NodeSystem({1.1}), std::invalid_argument);
  EXPECT_NO_THROW(NodeSystem({0.0, 0.0, 1.0}));
}

TEST(NodeSystem, VirtualEndpointsAndIntervals) {
  const NodeSystem y{0.3, 0.7};
  EXPECT_EQ(y.node(0), 0.0);
  EXPECT_EQ(y.node(3), 1.0);
  EXPECT_EQ(y.interval(1), std::make_pair(0.3, 0.7));
  EXPECT_EQ(y.interval(2), std::make_pair(0.7, 1.0));
}

TEST(NodeSystem, OpenSimplexMembership) {
  EXPECT_TRUE(NodeSystem({0.3, 0.7}).in_open_simplex());
  EXPECT_FALSE(NodeSystem({0.5, 0.5}).in_open_simplex());
  EXPECT_FALSE(NodeSystem({0.0, 0.5}).in_open_simplex());
  EXPECT_TRUE(NodeSystem({0.5, 0.5}).is_degenerate());
}

TEST(NodeSystem, ProjectionSortsThenClamps) {
  EXPECT_EQ(NodeSystem::project({0.8, -0.2, 1.4}), NodeSystem({0.0, 0.8, 1.0}));
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> v(4);
    for (double& x : v) x = rng.uniform(-0.5, 1.5);
    EXPECT_NO_THROW(NodeSystem::project(v));
  }
}

TEST(NodeSystem, UniformAndDistance) {
  EXPECT_EQ(NodeSystem::uniform(3), NodeSystem({0.25, 0.5, 0.75}));
  EXPECT_DOUBLE_EQ(NodeSystem({0.1, 0.5}).distance(NodeSystem({0.2, 0.45})), 0.1);
  EXPECT_THROW(NodeSystem({0.1}).distance(NodeSystem({0.1, 0.2})), std::invalid_argument);
}

TEST(ProblemInstance, RejectsNonpositiveWeights) {
  EXPECT_THROW(ProblemInstance({1.0, 0.0}, Kernel::log(), FieldFunction::constant(0.0)), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({}, Kernel::log(), FieldFunction::constant(0.0)), std::invalid_argument);
}

TEST(ProblemInstance, RejectsFieldWithTooFewFinitePoints) {
  const FieldFunction f({0.0, 1.0}, {NegInfPiece{}}, {ExtReal::finite(0.0), ExtReal::finite(0.0)});
  EXPECT_THROW(ProblemInstance({1.0}, Kernel::log(), f), std::invalid_argument);
}

TEST(ProblemInstance, UnitWeights) {
  const auto inst = ProblemInstance::unit(3, Kernel::log());
  EXPECT_EQ(inst.n(), 3);
  EXPECT_EQ(inst.weights(), std::vector<double>(3, 1.0));
}
