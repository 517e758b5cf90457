// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_DENSE_LU_HPP
#define BLOCKAMG_DENSE_LU_HPP

#include <span>
#include <vector>

#include "blockamg/sparse.hpp"

namespace blockamg
{

// Dense LU with partial pivoting, used for the coarsest-level solve. Throws
// SingularCoarseOperator when a pivot column is numerically zero.
class DenseLu
{
public:
  DenseLu() = default;
  explicit DenseLu(const CsrMatrix &A);

  Index size() const noexcept { return n_; }
  void solve(std::span<const double> b, std::span<double> x) const;
  DenseVector solve(std::span<const double> b) const;

private:
  Index n_ = 0;
  std::vector<double> lu_;  // row-major
  std::vector<Index> perm_;
};

}  // namespace blockamg

#endif  // BLOCKAMG_DENSE_LU_HPP
