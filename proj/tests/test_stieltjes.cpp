#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subschur/schur.hpp"
#include "subschur/stieltjes.hpp"
#include "support/generators.hpp"

using namespace subschur;
using namespace subschur::testing;

namespace {

using S = MomentSequence;

Matrix scalar(double x) { return Matrix::Constant(1, 1, Complex(x, 0)); }

double value(const Matrix& m) { return m(0, 0).real(); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

bool close(const Matrix& a, const Matrix& b, double eps = 1e-8) {
  return (a - b).norm() <= eps * std::max(1.0, b.norm());
}

MomentSequence halfline_sequence(Rng& rng, Index q, double alpha, std::size_t length) {
  return discrete_moments(random_halfline_measure(rng, q, rng.integer(1, 4), alpha), q, length);
}

// Moments of a measure on [alpha, oo) with weights compressed into a proper
// subspace, with the last block then pushed to u_{m-1} + D for a full-rank D.
MomentSequence non_extendable(Rng& rng, Index q, double alpha, std::size_t m) {
  const Matrix p = Subspace::from_columns(random_matrix(rng, q, q - 1)).projector();
  auto measure = random_halfline_measure(rng, q, rng.integer(1, 3), alpha);
  for (auto& atom : measure) atom.weight = p * atom.weight * p;
  const S base = discrete_moments(measure, q, m + 1);
  const Matrix lower = hermitian_part(u_lower(base, alpha, static_cast<long>(m) - 1));
  return base.with_last(lower + random_psd(rng, q, q));
}

const double kAlphas[] = {-1.0, 0.0, 2.0};

}  // namespace

TEST_CASE("alpha_shift") {
  const S s = S::scalar({1, 2, 5});
  CHECK(alpha_shift(s, 0.0).approx_equal(S::scalar({2, 5})));
  CHECK(alpha_shift(s, 1.0).approx_equal(S::scalar({1, 3})));
  CHECK(code_of([&] { alpha_shift(S::scalar({1}), 0.0); }) == ErrorCode::TooShort);
  CHECK_THROWS_AS(alpha_shift(s, std::nan("")), std::invalid_argument);
}

TEST_CASE("is_knnd") {
  CHECK(is_knnd(S::scalar({1, 1}), 0.0));
  CHECK_FALSE(is_knnd(S::scalar({1, -1}), 0.0));
  CHECK(is_knnd(S::scalar({1, 1, 1}), 0.0));
  CHECK(is_knnd(S::scalar({2}), 5.0));
  CHECK_FALSE(is_knnd(S::scalar({-2}), 5.0));
  // delta at 1 is not supported in [2, oo)
  CHECK_FALSE(is_knnd(S::scalar({1, 1, 1}), 2.0));
}

TEST_CASE("kappa and u") {
  const S s = S::scalar({1, 1, 1});
  CHECK(value(kappa(s, 0.0, 0)) == doctest::Approx(1.0));
  CHECK(value(kappa(S::scalar({1, 1}), 0.0, 1)) == doctest::Approx(1.0));
  CHECK(value(kappa(s, 0.0, 2)) == doctest::Approx(0.0));
  CHECK(code_of([&] { kappa(s, 0.0, 3); }) == ErrorCode::IndexOutOfRange);

  CHECK(u_lower(s, 0.0, -1).isZero());
  CHECK(value(u_lower(S::scalar({1, 1}), 0.0, 0)) == doctest::Approx(0.0));
  CHECK(value(u_lower(s, 0.0, 1)) == doctest::Approx(1.0));
  CHECK(value(u_lower(S::scalar({3, 1}), 2.0, 0)) == doctest::Approx(6.0));
}

TEST_CASE("is_knnde") {
  CHECK(is_knnde(S::scalar({1, 1, 1}), 0.0));
  CHECK_FALSE(is_knnde(S::scalar({0, 0, 1}), 0.0));
  CHECK(is_knnde(S::scalar({1, 0}), 0.0));
  CHECK(is_knnde(S::scalar({1}), 0.0));
  CHECK_FALSE(is_knnde(S::scalar({-1}), 0.0));
}

TEST_CASE("r_upper_stieltjes and canonical representative") {
  CHECK(value(r_upper_stieltjes(S::scalar({1, 1}), 0.0, 1)) == doctest::Approx(1.0));
  CHECK(value(r_upper_stieltjes(S::scalar({1, 0}), 0.0, 1)) == doctest::Approx(0.0));
  CHECK(value(r_upper_stieltjes(S::scalar({3}), 0.0, 0)) == doctest::Approx(3.0));
  CHECK(code_of([&] { r_upper_stieltjes(S::scalar({1, -1}), 0.0, 1); }) == ErrorCode::NotKNND);

  CHECK(canonical_rep_stieltjes(S::scalar({1, 1}), 0.0).approx_equal(S::scalar({1, 1})));
  CHECK(canonical_rep_stieltjes(S::scalar({0, 0, 1}), 0.0).approx_equal(S::scalar({0, 0, 0})));
}

TEST_CASE("in_extension_interval_stieltjes") {
  const S s = S::scalar({1, 1, 1});
  CHECK(in_extension_interval_stieltjes(s, 0.0, scalar(1.0), IntervalBound::Canonical));
  CHECK_FALSE(in_extension_interval_stieltjes(s, 0.0, scalar(1.5), IntervalBound::Canonical));
  CHECK(in_extension_interval_stieltjes(S::scalar({1, 1, 2}), 0.0, scalar(1.5),
                                        IntervalBound::Given));
  CHECK_FALSE(in_extension_interval_stieltjes(S::scalar({1, 1, 2}), 0.0, scalar(0.5),
                                              IntervalBound::Given));
  const Interval iv = extension_interval_stieltjes(S::scalar({1, 1, 2}), 0.0, IntervalBound::Given);
  CHECK(value(iv.lower) == doctest::Approx(1.0));
  CHECK(value(iv.upper) == doctest::Approx(2.0));
}

TEST_CASE("same_class_stieltjes") {
  const S s = S::scalar({1, 1, 1});
  CHECK(same_class_stieltjes(s, s, 0.0));
  CHECK(same_class_stieltjes(S::scalar({0, 0, 1}), S::scalar({0, 0, 7}), 0.0));
  CHECK_FALSE(same_class_stieltjes(s, S::scalar({1, 1, 2}), 0.0));
  CHECK(code_of([&] { same_class_stieltjes(s, S::scalar({1, 1}), 0.0); }) ==
        ErrorCode::ShapeMismatch);
}

TEST_CASE("classify_stieltjes report") {
  const auto rep = classify_stieltjes(S::scalar({1, 1, 1}), 0.0);
  CHECK(rep.is_knnd);
  CHECK(rep.is_knnde);
  CHECK(rep.kappa.size() == 3);
  CHECK(rep.u.size() == 3);
  REQUIRE(rep.r.has_value());
  CHECK(value(*rep.r) == doctest::Approx(1.0));

  const auto bad = classify_stieltjes(S::scalar({1, -1}), 0.0);
  CHECK_FALSE(bad.is_knnd);
  CHECK_FALSE(bad.r.has_value());
  CHECK_FALSE(bad.canonical.has_value());
}

TEST_CASE("kappa_j = s_j - u_{j-1} and agreement with the Hankel quantities") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Index q = rng.integer(1, 3);
    const double alpha = kAlphas[trial % 3];
    const std::size_t length = static_cast<std::size_t>(rng.integer(2, 6));
    // identity is algebraic, so arbitrary Hermitian data will do
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < length; ++j) blocks.push_back(hermitian_part(random_matrix(rng, q, q)));
    const S s(blocks);
    for (std::size_t j = 0; j < length; ++j) {
      const Matrix k = kappa(s, alpha, j);
      CHECK(close(k, s[j] - u_lower(s, alpha, static_cast<long>(j) - 1), 1e-10));
    }
    for (std::size_t k = 0; 2 * k < length; ++k) {
      CHECK(close(kappa(s, alpha, 2 * k), l_matrix(s, k), 1e-12));
      if (k >= 1) CHECK(close(u_lower(s, alpha, static_cast<long>(2 * k) - 1), theta(s, k), 1e-12));
    }
  }
}

TEST_CASE("chain u_{m-1} <= R_m <= s_m") {
  Rng rng(42);
  const Tolerance tol(1e-9);
  for (int trial = 0; trial < 60; ++trial) {
    const Index q = rng.integer(1, 3);
    const double alpha = kAlphas[trial % 3];
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const S s = trial % 2 ? halfline_sequence(rng, q, alpha, m + 1)
                          : non_extendable(rng, std::max<Index>(q, 2), alpha, m);
    REQUIRE(is_knnd(s, alpha, tol));
    for (std::size_t level = 0; level <= m; ++level) {
      const S head = s.prefix(level + 1);
      const Matrix lower = hermitian_part(u_lower(head, alpha, static_cast<long>(level) - 1, tol));
      const Matrix r = r_upper_stieltjes(head, alpha, level, tol);
      CHECK(loewner_leq(lower, r, tol));
      CHECK(loewner_leq(r, hermitian_part(head.back()), tol));
    }
  }
}

TEST_CASE("is_knnde against the completion oracle and R_m = s_m") {
  Rng rng(43);
  const Tolerance tol(1e-9);
  for (int trial = 0; trial < 90; ++trial) {
    const Index q = rng.integer(2, 3);
    const double alpha = kAlphas[trial % 3];
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const bool extendable = (trial / 3) % 2 == 0;
    const S s = extendable ? halfline_sequence(rng, q, alpha, m + 1)
                           : non_extendable(rng, q, alpha, m);
    const Matrix completion = hermitian_part(u_lower(s, alpha, static_cast<long>(m), tol));
    CHECK(is_knnd(s.appended(completion), alpha, tol) == extendable);
    CHECK(is_knnde(s, alpha, tol) == extendable);
    CHECK(close(r_upper_stieltjes(s, alpha, m, tol), s.back()) == extendable);
  }
}

TEST_CASE("canonical representative and class laws") {
  Rng rng(44);
  const Tolerance tol(1e-9);
  for (int trial = 0; trial < 45; ++trial) {
    const Index q = rng.integer(2, 3);
    const double alpha = kAlphas[trial % 3];
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const S s = non_extendable(rng, q, alpha, m);
    const S canon = canonical_rep_stieltjes(s, alpha, tol);
    CHECK(is_knnde(canon, alpha, tol));
    CHECK(same_class_stieltjes(s, canon, alpha, tol));
    CHECK(canonical_rep_stieltjes(canon, alpha, tol).approx_equal(canon, Tolerance(1e-8)));

    const Matrix k_prev = kappa(s, alpha, m - 1, tol);
    const Matrix r_m = canon.back();
    const Vector w = random_vector(rng, q);
    const S member = s.with_last(r_m + w * w.adjoint());
    REQUIRE_FALSE(range_included(member.back() - r_m, k_prev, tol));
    CHECK(same_class_stieltjes(s, member, alpha, tol));
    CHECK(same_class_stieltjes(member, s, alpha, tol));
    CHECK(canonical_rep_stieltjes(member, alpha, tol).approx_equal(canon, Tolerance(1e-8)));

    const Matrix lower = hermitian_part(u_lower(s, alpha, static_cast<long>(m) - 1, tol));
    const Matrix inner = r_m - lower;
    if (inner.norm() > 1e-6) {
      const S other = s.with_last(lower + 0.5 * inner);
      CHECK(is_knnde(other, alpha, tol));
      CHECK_FALSE(same_class_stieltjes(s, other, alpha, tol));
    }
  }
}
