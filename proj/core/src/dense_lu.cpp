// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/dense_lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

DenseLu::DenseLu(const CsrMatrix &A) : n_(A.n_rows()), lu_(n_ * n_, 0.0), perm_(n_)
{
  if (A.n_cols() != n_)
  {
    throw Error(ErrorKind::DimensionMismatch, "dense LU of a non-square matrix");
  }
  double scale = 0.0;
  for (Index i = 0; i < n_; ++i)
  {
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      lu_[i * n_ + r.cols[k]] = r.values[k];
      scale = std::max(scale, std::abs(r.values[k]));
    }
  }
  std::iota(perm_.begin(), perm_.end(), Index{0});
  const double tol = static_cast<double>(n_) * std::numeric_limits<double>::epsilon() * scale;
  for (Index k = 0; k < n_; ++k)
  {
    Index p = k;
    for (Index i = k + 1; i < n_; ++i)
    {
      if (std::abs(lu_[i * n_ + k]) > std::abs(lu_[p * n_ + k]))
      {
        p = i;
      }
    }
    if (!(std::abs(lu_[p * n_ + k]) > tol))
    {
      throw Error(ErrorKind::SingularCoarseOperator,
                  "dense LU: no usable pivot in column " + std::to_string(k) + " of " +
                      std::to_string(n_));
    }
    if (p != k)
    {
      std::swap_ranges(lu_.begin() + p * n_, lu_.begin() + (p + 1) * n_, lu_.begin() + k * n_);
      std::swap(perm_[p], perm_[k]);
    }
    const double pivot = lu_[k * n_ + k];
    for (Index i = k + 1; i < n_; ++i)
    {
      double &lik = lu_[i * n_ + k];
      if (lik == 0.0)
      {
        continue;
      }
      lik /= pivot;
      for (Index j = k + 1; j < n_; ++j)
      {
        lu_[i * n_ + j] -= lik * lu_[k * n_ + j];
      }
    }
  }
}

void DenseLu::solve(std::span<const double> b, std::span<double> x) const
{
  if (b.size() != n_ || x.size() != n_)
  {
    throw Error(ErrorKind::DimensionMismatch, "dense LU solve vector length");
  }
  for (Index i = 0; i < n_; ++i)
  {
    double s = b[perm_[i]];
    for (Index j = 0; j < i; ++j)
    {
      s -= lu_[i * n_ + j] * x[j];
    }
    x[i] = s;
  }
  for (Index i = n_; i-- > 0;)
  {
    double s = x[i];
    for (Index j = i + 1; j < n_; ++j)
    {
      s -= lu_[i * n_ + j] * x[j];
    }
    x[i] = s / lu_[i * n_ + i];
  }
}

DenseVector DenseLu::solve(std::span<const double> b) const
{
  DenseVector x(n_);
  solve(b, x);
  return x;
}

}  // namespace blockamg
