#include <set>

#include <gtest/gtest.h>

#include "lkg/oracle.hpp"
#include "lkg/parser.hpp"
#include "lkg/render.hpp"
#include "support/brute.hpp"

using lkg::Formula;

namespace {

lkg::Sequent S(const char* text) { return lkg::parse_sequent(text); }

lkg::Sequent many_atoms(std::size_t n) {
  lkg::Sequent s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(Formula::atom("x" + std::to_string(i)));
  return s;
}

// Number of NNF formulas with exactly c connectives over `leaves` leaves.
std::vector<std::size_t> formula_counts(std::size_t leaves, std::size_t max) {
  std::vector<std::size_t> a(max + 1, 0);
  a[0] = leaves;
  for (std::size_t c = 1; c <= max; ++c)
    for (std::size_t l = 0; l < c; ++l) a[c] += 2 * a[l] * a[c - 1 - l];
  return a;
}

}  // namespace

TEST(TtValid, Examples) {
  EXPECT_TRUE(lkg::tt_valid(S("~p | p")));
  EXPECT_TRUE(lkg::tt_valid(S("p(a)&p(b), ~p(a)|~p(b)")));
  ASSERT_FALSE(brute::valid(S("p&q, ~p")));
  EXPECT_FALSE(lkg::tt_valid(S("p&q, ~p")));
  EXPECT_FALSE(lkg::tt_valid(lkg::Sequent{}));
  EXPECT_TRUE(lkg::tt_valid(S("T")));
  EXPECT_FALSE(lkg::tt_valid(S("F")));
}

TEST(TtCountermodel, Examples) {
  EXPECT_EQ(lkg::tt_countermodel(S("p")), (lkg::Assignment{{"p", false}}));
  EXPECT_FALSE(lkg::tt_countermodel(S("~p | p")).has_value());
  // Rows in order (p,q) = FF, FT, TF: the first falsifier is TF.
  EXPECT_EQ(lkg::tt_countermodel(S("p&q, ~p")), (lkg::Assignment{{"p", true}, {"q", false}}));
  EXPECT_EQ(lkg::tt_countermodel(lkg::Sequent{}), lkg::Assignment{});
}

TEST(TtCountermodel, WideTablesCrossWordBoundaries) {
  // Falsified only by the last row: all eight atoms true.
  lkg::Sequent s;
  for (int i = 0; i < 8; ++i) s.push_back(Formula::neg_atom("v" + std::to_string(i)));
  auto cm = lkg::tt_countermodel(s);
  ASSERT_TRUE(cm.has_value());
  for (const auto& [name, value] : *cm) EXPECT_TRUE(value) << name;

  // Falsified only when v0 (most significant) is false and the rest true.
  s.push_back(Formula::atom("v0"));
  s = lkg::Sequent(std::vector<Formula>(s.begin() + 1, s.end()));
  cm = lkg::tt_countermodel(s);
  ASSERT_TRUE(cm.has_value());
  EXPECT_FALSE(cm->at("v0"));
  EXPECT_TRUE(cm->at("v7"));
}

TEST(TtValid, AtomLimit) {
  EXPECT_NO_THROW(lkg::tt_valid(many_atoms(3), 3));
  EXPECT_THROW(lkg::tt_valid(many_atoms(4), 3), lkg::AtomLimitExceeded);
  EXPECT_THROW(lkg::tt_countermodel(many_atoms(25)), lkg::AtomLimitExceeded);
  try {
    lkg::tt_valid(many_atoms(25));
  } catch (const lkg::AtomLimitExceeded& e) {
    EXPECT_EQ(e.atoms(), 25u);
    EXPECT_EQ(e.limit(), lkg::kDefaultAtomLimit);
  }
}

TEST(TtValid, AgreesWithBruteForceAndCountermodels) {
  lkg::GenParams params;
  params.atom_pool = {"a", "b", "c", "d", "e", "f", "g"};
  params.max_connectives = 20;
  params.seed = 1234;
  lkg::FormulaGenerator gen(params);
  for (int i = 0; i < 1500; ++i) {
    lkg::Sequent s{lkg::to_nnf(gen.next()), lkg::to_nnf(gen.next())};
    auto cm = lkg::tt_countermodel(s);
    ASSERT_EQ(lkg::tt_valid(s), !cm.has_value());
    ASSERT_EQ(lkg::tt_valid(s), brute::valid(s)) << lkg::render(s);
    if (cm) {
      ASSERT_FALSE(brute::truth(s, *cm)) << lkg::render(s);
    }
  }
}

TEST(Generator, ZeroBudgetGivesLeaves) {
  lkg::GenParams params;
  params.max_connectives = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    params.seed = seed;
    EXPECT_EQ(lkg::gen_random_formula(params).connectives(), 0u);
  }
}

TEST(Generator, DeterministicAndBounded) {
  lkg::GenParams params;
  params.max_connectives = 40;
  params.seed = 77;
  lkg::FormulaGenerator a(params), b(params);
  std::set<std::string> distinct;
  for (int i = 0; i < 500; ++i) {
    auto f = a.next();
    ASSERT_EQ(f, b.next());
    ASSERT_LE(f.connectives(), 40u);
    distinct.insert(lkg::render(f));
  }
  EXPECT_GT(distinct.size(), 400u);
  params.exact_size = true;
  lkg::FormulaGenerator exact(params);
  for (int i = 0; i < 50; ++i) ASSERT_EQ(exact.next().connectives(), 40u);
}

TEST(Generator, NeighbouringSeedsDiffer) {
  lkg::GenParams params;
  params.max_connectives = 30;
  params.exact_size = true;
  params.seed = 5;
  auto f = lkg::gen_random_formula(params);
  params.seed = 6;
  EXPECT_FALSE(f == lkg::gen_random_formula(params));
}

TEST(Generator, RespectsWeights) {
  lkg::GenParams params;
  params.max_connectives = 30;
  params.weight_or = params.weight_not = params.weight_implies = 0;
  params.constant_probability = 0;
  lkg::FormulaGenerator gen(params);
  for (int i = 0; i < 100; ++i) {
    auto f = gen.next();
    ASSERT_EQ(lkg::render(f).find_first_of("|~-TF"), std::string::npos) << lkg::render(f);
  }
}

TEST(Generator, RejectsBadWeights) {
  lkg::GenParams params;
  params.weight_and = params.weight_or = params.weight_not = params.weight_implies = 0;
  EXPECT_THROW(lkg::FormulaGenerator{params}, std::invalid_argument);
  params.weight_and = -1;
  EXPECT_THROW(lkg::FormulaGenerator{params}, std::invalid_argument);
}

TEST(Enumerate, LeavesOnly) {
  auto fs = lkg::enumerate_formulas({"p"}, 0);
  EXPECT_EQ(fs, (std::vector<Formula>{Formula::atom("p"), Formula::neg_atom("p"), Formula::top(), Formula::bottom()}));
}

TEST(Enumerate, OneConnectiveOverOneAtom) {
  auto expected = formula_counts(4, 1);
  ASSERT_EQ(expected[0] + expected[1], 36u);
  EXPECT_EQ(lkg::enumerate_formulas({"p"}, 1).size(), 36u);
}

TEST(Enumerate, CountsAndUniquenessOverTwoAtoms) {
  auto fs = lkg::enumerate_formulas({"p", "q"}, 3);
  auto counts = formula_counts(6, 3);
  EXPECT_EQ(counts, (std::vector<std::size_t>{6, 72, 1728, 51840}));
  EXPECT_EQ(fs.size(), 6u + 72u + 1728u + 51840u);

  std::set<std::string> rendered;
  for (const auto& f : fs) rendered.insert(lkg::render(f));
  EXPECT_EQ(rendered.size(), fs.size());
  // Non-decreasing connective count.
  for (std::size_t i = 1; i < fs.size(); ++i) ASSERT_LE(fs[i - 1].connectives(), fs[i].connectives());
}
