// Acceptance suite: one PASS/FAIL line per criterion, including runtime limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "beurling/grid.hpp"
#include "experiments/config.hpp"
#include "experiments/experiments.hpp"

using namespace beurling::experiments;

namespace {

struct Run {
  ExperimentResult result;
  double seconds = 0.0;
  std::string error;
};

Run run_named(const std::string& name) {
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.result = run_experiment(find_experiment(name), Config::parse("experiment = " + name + "\n"));
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const Check* find_check(const Run& r, const std::string& name) {
  for (const Check& c : r.result.checks)
    if (c.name == name) return &c;
  return nullptr;
}

struct Line {
  bool pass = true;
  std::string detail;

  void require(const Run& run, const std::vector<std::string>& names) {
    if (!run.error.empty()) {
      pass = false;
      detail += run.result.name + " error: " + run.error + "; ";
      return;
    }
    for (const std::string& n : names) {
      const Check* c = find_check(run, n);
      if (!c) {
        pass = false;
        detail += "missing check '" + n + "'; ";
        continue;
      }
      if (!c->pass) pass = false;
      detail += c->detail + "; ";
    }
  }

  void within(double seconds, double limit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s < %.0f s", seconds, limit);
    detail += buf;
    if (!(seconds < limit)) pass = false;
  }
};

}  // namespace

int main() {
  std::map<std::string, Run> runs;
  for (const auto& info : catalogue()) runs[info.name] = run_named(info.name);
  auto& R = runs;

  std::vector<std::pair<std::string, Line>> lines;
  auto add = [&](const std::string& title, const std::function<void(Line&)>& body) {
    Line l;
    body(l);
    lines.emplace_back(title, l);
  };

  add("1 isometry of B", [&](Line& l) {
    l.require(R["isometry"], {"isometry"});
    l.within(R["isometry"].seconds, 5);
  });
  add("2 Cauchy identities", [&](Line& l) {
    l.require(R["cauchy-identities"], {"dbar of Cauchy transform", "d of Cauchy transform equals B"});
    l.within(R["cauchy-identities"].seconds, 5);
  });
  add("3 multiplier powers", [&](Line& l) {
    l.require(R["isometry"], {"power composition"});
    l.within(R["isometry"].seconds, 5);
  });
  add("4 truncation gap constant", [&](Line& l) {
    l.require(R["lemma32-gap"], {"truncation constant stable across eta"});
    l.within(R["lemma32-gap"].seconds, 60);
  });
  add("5 A_p machinery", [&](Line& l) {
    l.require(R["ap-constant"], {"constant weight has A_p constant 1", "|z| constant stable under family doubling"});
    l.require(R["doubling"], {"doubling exponent 2 + alpha"});
    l.within(R["ap-constant"].seconds + R["doubling"].seconds, 10);
  });
  add("6 product-set invariants", [&](Line& l) {
    l.require(R["lemma21-productsets"], {"product sets: cover", "product sets: cardinality", "product sets: domination",
                                         "product sets: sign"});
    l.within(R["lemma21-productsets"].seconds, 10);
  });
  add("7 oscillation-commutator chain", [&](Line& l) {
    l.require(R["thm13-chain"], {"oscillation bounded by commutator on F_j", "every chain step has a uniform constant"});
    l.within(R["thm13-chain"].seconds, 60);
  });
  add("8 lower and upper bounds", [&](Line& l) {
    l.require(R["lemma34-bounds"], {"lower-bound constants positive", "lower-bound constants uniform",
                                    "upper-bound constants bounded", "geometric inclusions"});
    l.within(R["lemma34-bounds"].seconds, 60);
  });
  add("9 Morrey separation", [&](Line& l) {
    l.require(R["lemma35-separation"], {"separation positive", "separation stable when the family doubles",
                                        "smooth symbol separates less"});
    l.within(R["lemma35-separation"].seconds, 60);
  });
  add("10 test-family invariants", [&](Line& l) {
    l.require(R["lemma21-productsets"], {"test family invariants"});
    l.require(R["lemma34-bounds"], {"test family invariants"});
    l.within(R["lemma21-productsets"].seconds, 10);
  });
  add("11 Beltrami solve", [&](Line& l) {
    l.require(R["beltrami-solve"], {"residual", "iteration count", "a priori ratio uniform",
                                    "a priori ratio increases with ||b||"});
    l.within(R["beltrami-solve"].seconds, 30);
  });
  add("12 N^2 growth envelope", [&](Line& l) {
    l.require(R["n2-growth"], {"N^2 envelope"});
    l.within(R["n2-growth"].seconds, 20);
  });
  add("13 CMO trends", [&](Line& l) {
    l.require(R["cmo-probe"], {"compactly supported symbol decays in all three conditions",
                               "log symbol keeps small-square oscillation"});
    l.within(R["cmo-probe"].seconds, 20);
  });
  add("14 determinism", [&](Line& l) {
    std::size_t same = 0;
    for (const auto& info : catalogue()) {
      const Run again = run_named(info.name);
      const Run& first = R[info.name];
      bool eq = first.error.empty() && again.error.empty();
      try {
        eq = eq && to_csv(first.result.table) == to_csv(again.result.table);
      } catch (const std::exception&) {
        eq = false;
      }
      if (eq) {
        ++same;
      } else {
        l.pass = false;
        l.detail += info.name + " differs; ";
      }
    }
    l.detail += std::to_string(same) + "/" + std::to_string(catalogue().size()) + " byte-identical CSVs";
  });

  int failed = 0;
  for (const auto& [title, l] : lines) {
    std::printf("%s %s: %s\n", l.pass ? "PASS" : "FAIL", title.c_str(), l.detail.c_str());
    failed += !l.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(lines.size()) - failed, lines.size());
  return failed == 0 ? 0 : 1;
}
