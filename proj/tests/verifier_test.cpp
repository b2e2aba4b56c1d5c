#include <gtest/gtest.h>

#include "dejean/report.hpp"
#include "dejean/verifier.hpp"
#include "oracles.hpp"

using namespace dejean;

TEST(Bounds, Examples) {
  auto b = compute_bounds(15);
  EXPECT_EQ(b.kernel_bound, 1936);
  EXPECT_EQ(b.short_bound, 181);
  EXPECT_EQ(b.threshold, Rational(15, 14));
  b = compute_bounds(2);
  EXPECT_EQ(b.kernel_bound, 25);
  EXPECT_EQ(b.short_bound, -1);
  EXPECT_EQ(compute_bounds(26).kernel_bound, 5929);
  for (int n = 2; n < 40; ++n) EXPECT_LT(compute_bounds(n).short_bound, compute_bounds(n).kernel_bound);
}

TEST(BuildV, Lengths) {
  const auto v15 = build_v(builtin(15));
  EXPECT_EQ(v15.size(), 12558u);
  const auto v21 = build_v(builtin(21));
  EXPECT_EQ(v21.size(), 28244u);
  EXPECT_TRUE(v21.is_pansiot_valid());
  EXPECT_EQ(encode(v21), probe_image(builtin(21)));
}

TEST(KernelScan, DetectsPowersOfSigma1) {
  for (int n : {3, 5, 15}) {
    BinaryWord ones;
    for (int i = 0; i <= n; ++i) ones.push_back(1);
    const auto reps = find_kernel_repetitions(ones, n);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps[0], (RepetitionOccurrence{0, static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1)}));
    ones.pop_back();
    EXPECT_TRUE(find_kernel_repetitions(ones, n).empty());
  }
  EXPECT_TRUE(find_kernel_repetitions(BinaryWord{}, 5).empty());
}

TEST(KernelScan, AgreesWithBruteForce) {
  std::mt19937_64 rng(4);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 100; ++t) {
      BinaryWord b;
      for (int i = 0; i < 24; ++i) b.push_back(static_cast<std::uint8_t>(rng() & 1));
      const auto sym = oracle::to_symbols(b);
      std::vector<oracle::Rep> want;
      oracle::Perm id(static_cast<std::size_t>(n) + 1);
      for (int i = 1; i <= n; ++i) id[static_cast<std::size_t>(i)] = i;
      for (const auto& r : oracle::maximal_runs(sym, [](std::size_t, std::size_t) { return true; })) {
        const std::vector<int> period(sym.begin() + static_cast<std::ptrdiff_t>(r.start),
                                      sym.begin() + static_cast<std::ptrdiff_t>(r.start + r.period));
        if (oracle::sigma(period, n) == id) want.push_back(r);
      }
      std::vector<oracle::Rep> got;
      for (const auto& o : find_kernel_repetitions(b, n)) got.push_back({o.start, o.period, o.length});
      EXPECT_EQ(got, want) << b.str();
    }
  }
}

TEST(Checks, PowerFreeBoundaryIsStrict) {
  const auto v = SigmaWord::parse("121", 3);
  EXPECT_TRUE(find_repetitions_exceeding(v, 3, 2).empty());
  EXPECT_TRUE(checks::power_free(SigmaWord::parse("1213", 3)).pass);
  EXPECT_FALSE(checks::power_free(SigmaWord::parse("12121", 3)).pass);
}

TEST(Checks, IterationBound) {
  for (int n : {15, 21, 26}) {
    const auto out = checks::iteration_bound(builtin(n));
    EXPECT_TRUE(out.pass) << out.witness;
  }
}

TEST(Verify, ReportShape) {
  const auto rep = verify(17);
  ASSERT_EQ(rep.checks.size(), kCheckNames.size());
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) EXPECT_EQ(rep.checks[i].name, kCheckNames[i]);
  EXPECT_TRUE(rep.overall());
  EXPECT_EQ(rep.r, 64u);
  const auto j = to_json(rep);
  EXPECT_EQ(j["n"], 17);
  EXPECT_EQ(j["overall"], true);
  EXPECT_EQ(j["checks"].size(), 8u);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name") && c.contains("pass") && c.contains("witness") && c.contains("ms"));
  }
}

TEST(Verify, Deterministic) {
  auto a = verify(19), b = verify(19);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].pass, b.checks[i].pass);
    EXPECT_EQ(a.checks[i].witness, b.checks[i].witness);
  }
}

TEST(Verify, EmbeddedVerbatimAndMirrored) {
  for (const auto& h : builtin_morphisms()) {
    const auto rep = verify(h);
    const bool odd = h.n() == 15 || h.n() == 16 || h.n() == 18;
    EXPECT_EQ(rep.overall(), !odd) << to_text(rep);
    if (odd) {
      for (const auto& c : rep.checks) EXPECT_EQ(c.pass, c.name != "structure" && c.name != "markability_r") << c.name;
      EXPECT_TRUE(verify(mirror(h)).overall()) << h.n();
    }
  }
}

TEST(Verify, SkipLeavesOthersUnchanged) {
  const auto full = verify(22);
  VerifyOptions opts;
  opts.skip = {"markability_r", "power_free"};
  const auto part = verify(22, opts);
  ASSERT_EQ(part.checks.size(), 6u);
  for (const auto& c : part.checks) EXPECT_EQ(c.witness, full.find(c.name)->witness);
}

TEST(Verify, DegenerateMorphismStillRunsEverything) {
  const UniformMorphism h(15, BinaryWord::parse("0000"), BinaryWord::parse("1111"));
  const auto rep = verify(h);
  ASSERT_EQ(rep.checks.size(), 8u);
  EXPECT_FALSE(rep.find("structure")->pass);
  EXPECT_FALSE(rep.overall());
  for (const auto& c : rep.checks) EXPECT_FALSE(c.witness.empty()) << c.name;
}

TEST(Verify, UnboundedKernelScanAgrees) {
  VerifyOptions opts;
  opts.bounded_kernel_scan = false;
  opts.skip = {"structure", "algebraic_condition", "factor_set_2", "markability_r", "iteration_bound", "big_excess_free", "power_free"};
  for (int n : {15, 20}) {
    const auto rep = verify(n, opts);
    ASSERT_EQ(rep.checks.size(), 1u);
    EXPECT_TRUE(rep.checks[0].pass) << rep.checks[0].witness;
  }
}

TEST(Verify, TextReport) {
  const auto text = to_text(verify(17));
  EXPECT_NE(text.find("n=17 r=64 overall=PASS"), std::string::npos);
  EXPECT_NE(text.find("PASS power_free"), std::string::npos);
}
