#include "ballot/series.hpp"

#include <stdexcept>

namespace ballot {

const BigRat RationalSeries::kZero{0};

RationalSeries::RationalSeries(int truncation)
    : trunc_(truncation),
      c_(truncation + 1, std::vector<BigRat>(truncation + 1, BigRat(0))) {}

const BigRat& RationalSeries::coeff(int n, int k) const {
  if (n < 0 || k < 0 || n > trunc_ || k > trunc_) return kZero;
  return c_[n][k];
}

BigRat& RationalSeries::coeff_mut(int n, int k) { return c_[n][k]; }

BigInt RationalSeries::count(int n, int k) const {
  BigRat v = coeff(n, k);
  for (int i = 2; i <= n; ++i) v *= i;
  if (denominator(v) != 1)
    throw std::logic_error("series count is not integral");
  return numerator(v);
}

namespace {

// series in z with polynomial-in-t coefficients, truncated at degree N in z
// (t degree never exceeds z degree for the series used here, but the rows are
// sized N+1 uniformly)
using Poly = std::vector<BigRat>;   // coefficients in t
using Series = std::vector<Poly>;   // index: power of z

Series zero_series(int N) { return Series(N + 1, Poly(N + 1, BigRat(0))); }

void poly_add_mul(Poly& acc, const Poly& a, const Poly& b, int N) {
  for (int i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j)
      if (b[j] != 0) acc[i + j] += a[i] * b[j];
  }
}

// product truncated to z-degree < prec
Series mul(const Series& a, const Series& b, int prec, int N) {
  Series out = zero_series(N);
  for (int i = 0; i < prec && i <= N; ++i)
    for (int j = 0; i + j < prec && i + j <= N; ++j)
      poly_add_mul(out[i + j], a[i], b[j], N);
  return out;
}

// Newton inverse: X <- X(2 - AX), doubling the z-precision each round.
Series inverse(const Series& a, int N) {
  Series x = zero_series(N);
  if (a[0][0] == 0) throw std::logic_error("series inverse needs unit constant term");
  x[0][0] = BigRat(1) / a[0][0];
  for (int prec = 1; prec <= N;) {
    prec = std::min(2 * prec, N + 1);
    Series ax = mul(a, x, prec, N);
    for (auto& row : ax)
      for (auto& v : row) v = -v;
    ax[0][0] += 2;
    x = mul(x, ax, prec, N);
  }
  return x;
}

// Newton square root: Y <- (Y + C/Y)/2, doubling the z-precision each round.
Series sqrt_newton(const Series& c, int N) {
  if (c[0][0] != 1) throw std::logic_error("series sqrt needs constant term 1");
  Series y = zero_series(N);
  y[0][0] = 1;
  for (int prec = 1; prec <= N;) {
    prec = std::min(2 * prec, N + 1);
    Series q = mul(c, inverse(y, N), prec, N);
    for (int i = 0; i < prec; ++i)
      for (int k = 0; k <= N; ++k) y[i][k] = (y[i][k] + q[i][k]) / 2;
  }
  return y;
}

}  // namespace

RationalSeries series_coefficients(SeriesKind kind, int N) {
  if (N < 0) throw std::invalid_argument("truncation must be >= 0");
  Series num = zero_series(N), den = zero_series(N);
  if (kind == SeriesKind::BallotEgf) {
    // (1+z) / (1-z)
    num[0][0] = 1;
    if (N >= 1) num[1][0] = 1;
    den[0][0] = 1;
    if (N >= 1) den[1][0] = -1;
  } else {
    // (1-z+zt) / (1-z-zt)
    num[0][0] = 1;
    den[0][0] = 1;
    if (N >= 1) {
      num[1][0] = -1;
      num[1][1] = 1;
      den[1][0] = -1;
      den[1][1] = -1;
    }
  }
  const Series ratio = mul(num, inverse(den, N), N + 1, N);
  const Series y = sqrt_newton(ratio, N);
  RationalSeries out(N);
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= N; ++k) out.coeff_mut(n, k) = y[n][k];
  return out;
}

}  // namespace ballot
