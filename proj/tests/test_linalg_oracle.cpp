// The linear algebra route never looks at the closed forms: phi values are
// kernel dimensions of explicit operator matrices.  These tests pin its
// values on small instances and then let the two routes face each other.

#include <catch2/catch_amalgamated.hpp>

#include "normbundle/enumerate.hpp"
#include "normbundle/linalg_oracle.hpp"
#include "normbundle/window_oracle.hpp"

using namespace normbundle;

TEST_CASE("phi_oracle pinned values") {
  const ValidatedSpace a = validate(from_center(6, {2, 3, 4}));
  REQUIRE(phi_oracle(a, 2) == 4);
  REQUIRE(phi_oracle(a, 3) == 2);
  REQUIRE(phi_oracle(a, 4) == 0);
  REQUIRE_THROWS_AS(phi_oracle(a, 1), std::invalid_argument);
}

TEST_CASE("oracle phi tables match the pinned tables") {
  REQUIRE(phi_table_oracle(validate(from_center(6, {2, 3, 4}))).values ==
          std::vector<int>{8, 6, 4, 2, 0, 0});
  REQUIRE(phi_table_oracle(validate(from_center(8, {2, 3, 5, 6}))).values ==
          std::vector<int>{11, 8, 5, 2, 1, 0, 0});
}

TEST_CASE("qk_oracle pinned values") {
  REQUIRE(qk_oracle(validate(from_center(6, {2, 3, 4})), 4) == 1);
  REQUIRE(qk_oracle(validate(from_center(8, {2, 3, 5, 6})), 4) == 2);
}

TEST_CASE("qk_oracle preconditions") {
  // two components: the apex construction does not apply
  const ValidatedSpace split = validate(from_center(12, {2, 3, 6, 7}));
  REQUIRE_THROWS_AS(qk_oracle(split, 2), std::invalid_argument);

  const ValidatedSpace single = validate(from_center(6, {2, 3, 4}));  // lambda 4
  REQUIRE_THROWS_AS(qk_oracle(single, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(qk_oracle(single, 5), std::invalid_argument);
}

TEST_CASE("qk_oracle equals the window count on small centers") {
  for (int d = 6; d <= 8; ++d) {
    for (int t = 1; t <= d - 3; ++t) {
      for (const auto& exps : detail::subsets_of_range(2, d - 2, t)) {
        const ValidatedSpace space = validate(from_center(d, exps));
        const std::vector<Component> comps = components(space);
        if (comps.size() != 1) continue;
        const Partition partition(comps.front().partition);
        for (int k = 2; k <= comps.front().lambda; ++k) {
          REQUIRE(qk_oracle(space, k) == count_q(k, partition));
        }
      }
    }
  }
}

TEST_CASE("splitting_oracle pinned values") {
  REQUIRE(splitting_oracle(validate(from_center(6, {2, 3, 4}))) ==
          SplittingType({3, 3}));
  REQUIRE(splitting_oracle(validate(from_center(8, {2, 3, 5, 6}))) ==
          SplittingType({4, 2, 2}));
  REQUIRE(splitting_oracle(validate(from_center(12, {2, 3, 4, 5, 6, 7, 8}))) ==
          SplittingType({7, 7, 0, 0}));
}

TEST_CASE("both routes agree on every valid center up to degree 9") {
  for (int d = 6; d <= 9; ++d) {
    for (int t = 1; t <= d - 3; ++t) {
      for (const auto& exps : detail::subsets_of_range(2, d - 2, t)) {
        const ValidatedSpace space = validate(from_center(d, exps));
        REQUIRE(splitting_type(summarize(space)) == splitting_oracle(space));
      }
    }
  }
}
