#include <doctest.h>

#include "oracles.hpp"
#include "sutarski/generators.hpp"
#include "sutarski/solvers.hpp"
#include "sutarski/tarski.hpp"

using namespace sutarski;

TEST_CASE("TarskiFunction construction and evaluation") {
  const LatticeSpec spec(2, 1);
  CHECK_THROWS_AS(TarskiFunction::from_table(spec, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(TarskiFunction::from_table(spec, {{1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(TarskiFunction::from_callback(spec, nullptr), std::invalid_argument);

  CHECK(oracle::identity(2, 2)({2, 1}) == Point{2, 1});
  CHECK(oracle::att3()({1, 1}) == Point{2, 2});
  CHECK(oracle::att3()({2, 2}) == Point{2, 2});
  CHECK_THROWS_AS(oracle::att3()({0, 1}), DomainError);

  const auto bad = TarskiFunction::from_callback(spec, [](const Point&) { return Point{5}; });
  CHECK_THROWS_AS(bad({1}), DomainError);
}

TEST_CASE("table and callback backings are interchangeable") {
  const auto lazy = gen_attractor(LatticeSpec(3, 2), {2, 2});
  CHECK_FALSE(lazy.is_table());
  const auto table = lazy.materialize();
  CHECK(table.is_table());
  CHECK(same_values(lazy, table));
  CHECK(same_values(table, oracle::att3()));
  CHECK(brute_sut_audit(lazy).slice_counts.size() == brute_sut_audit(table).slice_counts.size());
  CHECK_THROWS_AS((void)lazy.table(), std::logic_error);

  const auto edited = table.with_value({1, 1}, {3, 3});
  CHECK(edited({1, 1}) == Point{3, 3});
  CHECK(table({1, 1}) == Point{2, 2});
}

TEST_CASE("classify") {
  const auto id = oracle::identity(3, 2);
  for (const auto& x : id.spec().points()) CHECK(classify(id, x) == PointClassification{true, true});

  const auto att = oracle::att3();
  CHECK(classify(att, {1, 1}) == PointClassification{true, false});
  CHECK(classify(att, {3, 1}) == PointClassification{false, false});
  CHECK(classify(att, {3, 3}) == PointClassification{false, true});

  const auto g = restrict(oracle::uns(), {kFree, 1});
  CHECK(classify(g, {2, 1}).is_fixed());
  CHECK_THROWS_AS(classify(g, {2, 2}), DomainError);
}

TEST_CASE("check_fixed_point") {
  CHECK(check_fixed_point(oracle::identity(2, 2), {1, 2}));
  CHECK(check_fixed_point(oracle::att3(), {2, 2}));
  CHECK_FALSE(check_fixed_point(oracle::att3(), {1, 1}));
}

TEST_CASE("check_monotonicity_pair") {
  const auto nm1 = oracle::nm1();
  const auto v = check_monotonicity_pair(nm1, {1}, {2});
  REQUIRE(v);
  CHECK(*v == MonotonicityViolation{{1}, {2}});
  CHECK_FALSE(check_monotonicity_pair(nm1, {2}, {1}));  // 2 is not <= 1

  const auto id = oracle::identity(2, 2);
  for (const auto& x : id.spec().points())
    for (const auto& y : id.spec().points()) CHECK_FALSE(check_monotonicity_pair(id, x, y));
  CHECK_THROWS_AS(check_monotonicity_pair(nm1, {0}, {1}), DomainError);
}

TEST_CASE("check_slice_uniqueness_violation") {
  const auto id = oracle::identity(2, 2);
  CHECK(check_slice_uniqueness_violation(id, {kFree, kFree}, {2, 1}, {1, 2}));

  const auto w = check_slice_uniqueness_violation(oracle::uns(), {kFree, 1}, {2, 1}, {1, 1});
  REQUIRE(w);
  CHECK(w->slice == Slice{kFree, 1});

  CHECK_THROWS_AS(check_slice_uniqueness_violation(oracle::uns(), {kFree, 1}, {2, 2}, {1, 1}),
                  DomainError);

  // ATT3: no slice, no pair.
  const auto att = oracle::att3();
  for (const auto& s : enumerate_slices(att.spec())) {
    const auto pts = slice_points(att.spec(), s);
    for (const auto& x : pts)
      for (const auto& y : pts) CHECK_FALSE(check_slice_uniqueness_violation(att, s, x, y));
  }
}

TEST_CASE("verify_sut_solution") {
  CHECK(verify_sut_solution(oracle::identity(2, 2), FixedPoint{{1, 1}}));
  CHECK(verify_sut_solution(oracle::att3(), FixedPoint{{1, 1}}) ==
        Verdict::invalid(Reason::kNotFixed));
  CHECK(verify_sut_solution(oracle::nm1(), MonotonicityViolation{{1}, {2}}));
  CHECK(verify_sut_solution(oracle::nm1(), MonotonicityViolation{{2}, {1}}).reason() ==
        Reason::kPairNotOrdered);
  CHECK(verify_sut_solution(oracle::att3(), MonotonicityViolation{{1, 1}, {2, 2}}).reason() ==
        Reason::kPairMonotone);
  CHECK(verify_sut_solution(oracle::uns(), SliceUniquenessViolation{{kFree, 1}, {2, 1}, {1, 1}}));
  CHECK(verify_sut_solution(oracle::uns(), SliceUniquenessViolation{{kFree, 1}, {1, 1}, {2, 1}})
            .reason() == Reason::kPairComparable);
  CHECK(verify_sut_solution(oracle::uns(), SliceUniquenessViolation{{kFree, 1}, {2, 2}, {1, 1}})
            .reason() == Reason::kPointOutsideSlice);
  CHECK(verify_sut_solution(oracle::att3(), SliceUniquenessViolation{{kFree, kFree}, {3, 1}, {1, 3}})
            .reason() == Reason::kXNotInUp);
  CHECK(verify_sut_solution(oracle::att3(), SliceUniquenessViolation{{kFree, kFree}, {2, 1}, {1, 3}})
            .reason() == Reason::kYNotInDown);
  CHECK(verify_sut_solution(oracle::att3(), FixedPoint{{4, 1}}).reason() == Reason::kSpecMismatch);
}

TEST_CASE("Up and Down meet exactly at the fixed points") {
  for (Coord n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f = gen_mutated(gen_random_monotone(LatticeSpec(n, k), seed), seed, 2);
        for (const auto& s : enumerate_slices(f.spec())) {
          const auto g = restrict(f, s);
          for (const auto& x : slice_points(f.spec(), s)) {
            CHECK(classify(g, x).is_fixed() == (g(x) == x));
          }
        }
        for (const auto& x : f.spec().points()) {
          CHECK(classify(f, x).is_fixed() == check_fixed_point(f, x));
        }
      }
    }
  }
}

TEST_CASE("unique fixed point iff no incomparable Up/Down pair (monotone)") {
  std::size_t unique = 0, multiple = 0;
  for (Coord n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = gen_random_monotone(LatticeSpec(n, k), seed);
        const auto t = oracle::to_table(f);
        const int kk = static_cast<int>(k);
        const bool one = oracle::fixed_points(t, n, kk, oracle::SliceVec(kk, 0)).size() == 1;
        const bool no_pair = !oracle::has_up_down_pair(t, n, kk, oracle::SliceVec(kk, 0));
        CHECK(one == no_pair);
        (one ? unique : multiple) += 1;
      }
    }
  }
  // Both sides of the equivalence are exercised.
  CHECK(unique > 0);
  CHECK(multiple > 0);
}

TEST_CASE("least and greatest fixed points bound Down and Up") {
  for (Coord n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = gen_random_monotone(LatticeSpec(n, k), seed);
        const auto summary = brute_fixed_points(f);
        REQUIRE(summary.least);
        REQUIRE(summary.greatest);
        for (const auto& x : f.spec().points()) {
          const auto c = classify(f, x);
          if (c.in_down) CHECK(leq(*summary.least, x));
          if (c.in_up) CHECK(leq(x, *summary.greatest));
        }
      }
    }
  }
}

namespace {

// Reference predicate for the three solution types, straight from their
// definitions, over plain vectors.
bool reference_valid(const oracle::Table& t, int n, int k, const SutSolution& sol) {
  const oracle::SliceVec all(k, 0);
  if (auto* fp = std::get_if<FixedPoint>(&sol)) {
    const auto x = oracle::to_vec(fp->x);
    return t[oracle::index(n, x)] == x;
  }
  if (auto* mv = std::get_if<MonotonicityViolation>(&sol)) {
    const auto x = oracle::to_vec(mv->x), y = oracle::to_vec(mv->y);
    return oracle::le(x, y) && !oracle::le(t[oracle::index(n, x)], t[oracle::index(n, y)]);
  }
  const auto& uv = std::get<SliceUniquenessViolation>(sol);
  const auto s = oracle::to_slice_vec(uv.slice);
  const auto x = oracle::to_vec(uv.x), y = oracle::to_vec(uv.y);
  if (!oracle::in_slice(s, x) || !oracle::in_slice(s, y)) return false;
  return !oracle::le(x, y) && oracle::le(x, oracle::restricted(t, n, s, x)) &&
         oracle::le(oracle::restricted(t, n, s, y), y);
}

}  // namespace

TEST_CASE("verify_sut_solution matches the reference predicate on random witnesses") {
  std::size_t valid = 0, invalid = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LatticeSpec spec(3, 2);
    const auto f = gen_mutated(gen_random_monotone(spec, seed), seed, seed % 3);
    const auto t = oracle::to_table(f);
    Rng rng(seed + 1000);
    const auto slices = enumerate_slices(spec);
    for (int draw = 0; draw < 30; ++draw) {
      SutSolution sol;
      switch (rng.below(3)) {
        case 0: sol = FixedPoint{rng.point(spec)}; break;
        case 1: sol = MonotonicityViolation{rng.point(spec), rng.point(spec)}; break;
        default: {
          const auto& s = slices[rng.below(slices.size())];
          const auto pts = slice_points(spec, s);
          sol = SliceUniquenessViolation{s, pts[rng.below(pts.size())], pts[rng.below(pts.size())]};
        }
      }
      const bool expected = reference_valid(t, 3, 2, sol);
      CHECK(verify_sut_solution(f, sol).is_valid() == expected);
      (expected ? valid : invalid) += 1;
    }
  }
  CHECK(valid > 0);
  CHECK(invalid > 0);
}
