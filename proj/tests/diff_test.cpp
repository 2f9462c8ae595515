#include <gtest/gtest.h>

#include "lkg/diff.hpp"
#include "lkg/parser.hpp"

TEST(Diff, StandardEnginesAgree) {
  lkg::GenParams params;
  params.atom_pool = {"p", "q", "r", "s", "t", "u"};
  params.max_connectives = 30;
  params.seed = 42;
  auto report = lkg::run_diff(params, 1500, lkg::DiffEngines::standard());
  EXPECT_EQ(report.checked, 1500u);
  EXPECT_TRUE(report.ok()) << report.disagreements.front().line();
}

TEST(Diff, EmptyRun) {
  auto report = lkg::run_diff(lkg::GenParams{}, 0, lkg::DiffEngines::standard());
  EXPECT_EQ(report.checked, 0u);
  EXPECT_TRUE(report.ok());
}

TEST(Diff, BrokenEngineIsCaughtAndReproducible) {
  auto engines = lkg::DiffEngines::standard();
  engines.pv = [](const lkg::Sequent&) { return lkg::EngineAnswer{true, {}}; };
  lkg::GenParams params;
  params.max_connectives = 12;
  params.seed = 3;
  auto report = lkg::run_diff(params, 300, engines);
  ASSERT_FALSE(report.ok());
  for (const auto& d : report.disagreements) {
    auto line = d.line();
    auto cut = line.find(" :: ");
    ASSERT_NE(cut, std::string::npos);
    EXPECT_EQ(line.substr(0, cut), "pv=valid oracle=invalid");
    auto again = lkg::parse_sequent(line.substr(cut + 4));
    ASSERT_EQ(again.items(), d.sequent.items());
    EXPECT_TRUE(lkg::compare_engines(again, engines).has_value());
  }
}

TEST(Diff, SatisfyingCountermodelIsFlagged) {
  auto engines = lkg::DiffEngines::standard();
  engines.full = [](const lkg::Sequent& s) {
    lkg::Assignment all_true;
    for (const auto& name : lkg::atoms_of(s)) all_true[name] = true;
    return lkg::EngineAnswer{false, all_true};
  };
  auto d = lkg::compare_engines(lkg::parse_sequent("p, q"), engines);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->detail, "full-countermodel-satisfies oracle=invalid");
  EXPECT_FALSE(lkg::compare_engines(lkg::parse_sequent("~p, ~q"), engines).has_value());
}
