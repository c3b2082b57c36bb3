#include <doctest.h>

#include <vector>

#include "ballot/series.hpp"

using namespace ballot;

namespace {

// independent sqrt: direct coefficient recurrence 2 y_0 y_n = c_n - sum,
// on series in z with polynomial coefficients in t
using Poly = std::vector<BigRat>;

std::vector<Poly> ratio_series(SeriesKind kind, int N) {
  // numerator and denominator as (1 + higher order); divide by long division
  std::vector<Poly> num(N + 1, Poly(N + 1, BigRat(0)));
  std::vector<Poly> den = num;
  num[0][0] = 1;
  den[0][0] = 1;
  if (N >= 1) {
    if (kind == SeriesKind::BallotEgf) {
      num[1][0] = 1;
      den[1][0] = -1;
    } else {
      num[1][0] = -1;
      num[1][1] = 1;
      den[1][0] = -1;
      den[1][1] = -1;
    }
  }
  std::vector<Poly> q(N + 1, Poly(N + 1, BigRat(0)));
  for (int n = 0; n <= N; ++n) {
    // q_n = num_n - sum_{j=1..n} den_j q_{n-j}
    Poly v = num[n];
    for (int j = 1; j <= n; ++j)
      for (int a = 0; a <= N; ++a) {
        if (den[j][a] == 0) continue;
        for (int b = 0; a + b <= N; ++b)
          if (q[n - j][b] != 0) v[a + b] -= den[j][a] * q[n - j][b];
      }
    q[n] = v;
  }
  return q;
}

std::vector<Poly> sqrt_by_recurrence(const std::vector<Poly>& c, int N) {
  std::vector<Poly> y(N + 1, Poly(N + 1, BigRat(0)));
  y[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    Poly v = c[n];
    for (int j = 1; j <= n - 1; ++j)
      for (int a = 0; a <= N; ++a) {
        if (y[j][a] == 0) continue;
        for (int b = 0; a + b <= N; ++b)
          if (y[n - j][b] != 0) v[a + b] -= y[j][a] * y[n - j][b];
      }
    for (int a = 0; a <= N; ++a) y[n][a] = v[a] / 2;
  }
  return y;
}

}  // namespace

TEST_CASE("ballot EGF coefficients") {
  const auto s = series_coefficients(SeriesKind::BallotEgf, 12);
  const std::vector<long long> ref = {1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225};
  for (int n = 0; n <= 9; ++n) CHECK(s.count(n, 0) == BigInt(ref[n]));
  CHECK(s.count(10, 0) == BigInt(893025));
  CHECK(s.count(11, 0) == BigInt(9823275));
  // all other t-columns vanish
  for (int n = 0; n <= 12; ++n)
    for (int k = 1; k <= 12; ++k) CHECK(s.coeff(n, k) == 0);
}

TEST_CASE("newton sqrt agrees with the coefficient-recurrence oracle") {
  const int N = 9;
  for (SeriesKind kind : {SeriesKind::BallotEgf, SeriesKind::OcpEgf}) {
    const auto prod = series_coefficients(kind, N);
    const auto expect = sqrt_by_recurrence(ratio_series(kind, N), N);
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= N; ++k) CHECK(prod.coeff(n, k) == expect[n][k]);
  }
}

TEST_CASE("bivariate EGF structure") {
  const int N = 9;
  const auto s = series_coefficients(SeriesKind::OcpEgf, N);
  const auto b = series_coefficients(SeriesKind::BallotEgf, N);
  for (int n = 0; n <= N; ++n) {
    // diagonal coefficient matches the univariate series
    CHECK(s.count(n, n) == b.count(n, 0));
    // coefficients beyond the diagonal vanish
    for (int k = n + 1; k <= N; ++k) CHECK(s.coeff(n, k) == 0);
    // row sums at t = 1 are the odd double factorials
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += s.count(n, k);
    BigInt df = 1;
    for (int i = 2 * n - 1; i >= 3; i -= 2) df *= i;
    CHECK(total == df);
  }
  // frozen small entries, counts by (size, order)
  CHECK(s.count(2, 1) == 2);
  CHECK(s.count(2, 2) == 1);
  CHECK(s.count(3, 1) == 6);
  CHECK(s.count(3, 2) == 6);
  CHECK(s.count(3, 3) == 3);
  CHECK(s.count(0, 0) == 1);
}

TEST_CASE("coefficient accessors") {
  const auto s = series_coefficients(SeriesKind::BallotEgf, 5);
  CHECK(s.coeff(3, 0) == BigRat(1, 2));  // 3/3! = 1/2
  CHECK(s.count(3, 0) == 3);
  CHECK(s.coeff(99, 0) == 0);  // out of range reads zero
}
