#include <catch2/catch_amalgamated.hpp>

#include "normbundle/enumerate.hpp"

using namespace normbundle;

TEST_CASE("binomial") {
  REQUIRE(binomial(9, 7) == 36);
  REQUIRE(binomial(3, 3) == 1);
  REQUIRE(binomial(5, 0) == 1);
  REQUIRE(binomial(4, 5) == 0);
  REQUIRE(binomial(4, -1) == 0);
}

TEST_CASE("subsets enumerate lexicographically") {
  const auto subs = detail::subsets_of_range(2, 4, 2);
  REQUIRE(subs == std::vector<std::vector<int>>{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("enumeration over d=6 s=3 hits the single center") {
  const EnumerationReport report = enumerate_centers(6, 3);
  REQUIRE(report.total_spaces == 1);
  REQUIRE(report.histogram.size() == 1);
  const auto& [type, entry] = *report.histogram.begin();
  REQUIRE(type == SplittingType({3, 3}));
  REQUIRE(entry.count == 1);
  REQUIRE(entry.witness == std::vector<int>{2, 3, 4});
}

TEST_CASE("enumeration over d=12 s=5") {
  const EnumerationReport report = enumerate_centers(12, 5);
  REQUIRE(report.total_spaces == 36);

  long long total = 0;
  for (const auto& [type, entry] : report.histogram) {
    REQUIRE(static_cast<int>(type.c.size()) == 4);
    REQUIRE(type.sum() == 14);
    total += entry.count;
    // witnesses reproduce their type
    REQUIRE(splitting_type(summarize(validate(from_center(12, entry.witness)))) ==
            type);
  }
  REQUIRE(total == report.total_spaces);

  REQUIRE(report.histogram.count(SplittingType({6, 4, 2, 2})) == 0);
  const auto it = report.histogram.find(SplittingType({7, 7, 0, 0}));
  REQUIRE(it != report.histogram.end());
  REQUIRE(it->second.witness == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("enumeration is independent of the worker count") {
  const EnumerationReport one = enumerate_centers(12, 5, 1);
  for (int jobs : {2, 3, 7, 64}) {
    const EnumerationReport many = enumerate_centers(12, 5, jobs);
    REQUIRE(many.total_spaces == one.total_spaces);
    REQUIRE(many.histogram.size() == one.histogram.size());
    auto a = one.histogram.begin();
    auto b = many.histogram.begin();
    for (; a != one.histogram.end(); ++a, ++b) {
      REQUIRE(a->first == b->first);
      REQUIRE(a->second.count == b->second.count);
      REQUIRE(a->second.witness == b->second.witness);
    }
  }
}

TEST_CASE("enumeration totals match the binomial count") {
  for (int d = 6; d <= 10; ++d) {
    for (int s = 3; s < d; ++s) {
      const EnumerationReport report = enumerate_centers(d, s);
      REQUIRE(report.total_spaces == binomial(d - 3, d - s));
      long long total = 0;
      for (const auto& [type, entry] : report.histogram) {
        (void)type;
        total += entry.count;
      }
      REQUIRE(total == report.total_spaces);
    }
  }
}

TEST_CASE("enumerate rejects bad ranges") {
  try {
    enumerate_centers(5, 5);
    FAIL("expected invalid_range");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::invalid_range);
  }
  try {
    enumerate_centers(6, 2);
    FAIL("expected invalid_range");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::invalid_range);
  }
}

TEST_CASE("achievable answers and witnesses") {
  const Achievability yes = achievable(12, 5, SplittingType({7, 7, 0, 0}));
  REQUIRE(yes.achievable);
  REQUIRE(yes.witness == std::vector<int>{2, 3, 4, 5, 6, 7, 8});

  const Achievability no = achievable(12, 5, SplittingType({6, 4, 2, 2}));
  REQUIRE_FALSE(no.achievable);
  REQUIRE(no.witness.empty());

  const Achievability also = achievable(12, 5, SplittingType({5, 5, 2, 2}));
  REQUIRE(also.achievable);
  REQUIRE(splitting_type(summarize(validate(from_center(12, also.witness)))) ==
          SplittingType({5, 5, 2, 2}));
}

TEST_CASE("achievable rejects malformed candidates") {
  // wrong length
  try {
    achievable(12, 5, SplittingType({7, 7}));
    FAIL("expected malformed_candidate");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::malformed_candidate);
  }
  // wrong sum
  try {
    achievable(12, 5, SplittingType({9, 3, 1, 0}));
    FAIL("expected malformed_candidate");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::malformed_candidate);
  }
  // negative entry
  try {
    achievable(12, 5, SplittingType({9, 5, 1, -1}));
    FAIL("expected malformed_candidate");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::malformed_candidate);
  }
}

TEST_CASE("sweep over small degrees is clean") {
  const SweepReport report = sweep_verify(7);
  REQUIRE(report.ok());
  // 2^(d-3) - 1 valid centers per degree: 7 + 15
  REQUIRE(report.spaces_checked == 22);
  REQUIRE(report.elapsed_seconds >= 0.0);
  try {
    sweep_verify(5);
    FAIL("expected invalid_range");
  } catch (const validation_error& e) {
    REQUIRE(e.code() == errc::invalid_range);
  }
}
