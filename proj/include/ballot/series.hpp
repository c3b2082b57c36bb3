#pragma once

#include <vector>

#include "ballot/bigint.hpp"

namespace ballot {

/// Truncated bivariate power series sum c[n][k] z^n t^k with exact rational
/// coefficients, n,k <= truncation.
class RationalSeries {
 public:
  explicit RationalSeries(int truncation);

  int truncation() const { return trunc_; }
  const BigRat& coeff(int n, int k) const;
  BigRat& coeff_mut(int n, int k);
  /// n! * c[n][k]; throws if not an integer.
  BigInt count(int n, int k) const;

 private:
  int trunc_;
  std::vector<std::vector<BigRat>> c_;
  static const BigRat kZero;
};

enum class SeriesKind {
  BallotEgf,  // sqrt((1+z)/(1-z)); univariate, coefficients at k = 0
  OcpEgf,     // sqrt((1-z+zt)/(1-z-zt))
};

/// Exact coefficients via Newton iteration on rationals, truncated at N.
RationalSeries series_coefficients(SeriesKind kind, int N);

}  // namespace ballot
