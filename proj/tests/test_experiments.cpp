#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "beurling/grid.hpp"
#include "experiments/config.hpp"
#include "experiments/experiments.hpp"
#include "experiments/table.hpp"

using namespace beurling;
using namespace beurling::experiments;

TEST(Config, ParsesKeyValueLines) {
  const Config c = Config::parse("# comment\nexperiment = isometry\n\n  seed=7  # trailing\npowers = 1, 2,4\n");
  EXPECT_EQ(c.get_string("experiment"), "isometry");
  EXPECT_EQ(c.get_u64("seed"), 7u);
  EXPECT_EQ(c.get_ints("powers"), (std::vector<int>{1, 2, 4}));
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(Config::parse("novalue\n"), ConfigError);
  EXPECT_THROW(Config::parse("a = 1\na = 2\n"), ConfigError);
  EXPECT_THROW(Config::parse(" = 3\n"), ConfigError);
  const Config c = Config::parse("x = abc\ny = 1.5\n");
  EXPECT_THROW(c.get_double("x"), ConfigError);
  EXPECT_THROW(c.get_int("y"), ConfigError);
  EXPECT_THROW(c.get_string("missing"), ConfigError);
}

TEST(Config, ResolveAppliesDefaultsAndRejectsUnknownKeys) {
  const std::vector<ParamSpec> schema{{"a", "1", ""}, {"b", "x", ""}};
  const Config r = resolve(schema, Config::parse("a = 5\n"));
  EXPECT_EQ(r.get_int("a"), 5);
  EXPECT_EQ(r.get_string("b"), "x");
  EXPECT_THROW(resolve(schema, Config::parse("c = 1\n")), ConfigError);
  EXPECT_EQ(r.dump(), "a = 5\nb = x\n");
}

TEST(Table, CsvFormatting) {
  Table t;
  t.columns = {"name", "n", "v"};
  t.add({std::string("a,b"), std::int64_t{3}, 0.1});
  t.add({std::string("say \"hi\""), std::int64_t{-1}, -0.0});
  t.add({std::string("x"), std::int64_t{0}, 1.0 / 3.0});
  EXPECT_EQ(to_csv(t), "name,n,v\n\"a,b\",3,0.1\n\"say \"\"hi\"\"\",-1,0\nx,0,0.333333333333\n");
}

TEST(Table, EmptyTableIsHeaderOnly) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_EQ(to_csv(t), "a,b\n");
}

TEST(Table, NonFiniteValuesAreRejected) {
  Table t;
  t.columns = {"v"};
  t.add({std::numeric_limits<double>::quiet_NaN()});
  EXPECT_THROW(to_csv(t), NumericalError);
  const auto path = std::filesystem::temp_directory_path() / "beurling_nan_table.csv";
  std::filesystem::remove(path);
  EXPECT_THROW(write_csv(t, path.string()), NumericalError);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Table, RowWidthMustMatchHeader) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add({std::int64_t{1}}), std::invalid_argument);
}

TEST(Catalogue, ThirteenNamedExperiments) {
  const auto& cat = catalogue();
  ASSERT_EQ(cat.size(), 13u);
  const std::vector<std::string> names{"isometry",          "cauchy-identities", "lemma32-gap",  "lemma33-maximal",
                                       "ap-constant",       "doubling",          "lemma21-productsets",
                                       "thm13-chain",       "lemma34-bounds",    "lemma35-separation",
                                       "cmo-probe",         "beltrami-solve",    "n2-growth"};
  std::set<std::string> anchors;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(cat[i].name, names[i]);
    EXPECT_FALSE(cat[i].anchor.empty());
    anchors.insert(cat[i].anchor);
  }
  EXPECT_EQ(anchors.size(), cat.size());
  EXPECT_THROW(find_experiment("nope"), ConfigError);
}

TEST(Catalogue, InvalidKappaIsConfigError) {
  const Config user = Config::parse("experiment = isometry\nmorrey.kappa = 1.5\n");
  try {
    run_experiment(find_experiment("isometry"), user);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("kappa"), std::string::npos);
  }
}

TEST(Catalogue, SmallRunIsDeterministic) {
  const Config user = Config::parse("experiment = isometry\ngrid.n = 32\ncount = 3\n");
  const ExperimentResult a = run_experiment(find_experiment("isometry"), user);
  const ExperimentResult b = run_experiment(find_experiment("isometry"), user);
  EXPECT_EQ(to_csv(a.table), to_csv(b.table));
  EXPECT_TRUE(a.passed());
  EXPECT_NE(summary_text(a).find(a.anchor), std::string::npos);
}
