// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_MATRIX_MARKET_HPP
#define BLOCKAMG_MATRIX_MARKET_HPP

#include <filesystem>
#include <iosfwd>

#include "blockamg/sparse.hpp"

namespace blockamg
{

// MatrixMarket coordinate files. Writing always emits "coordinate real general" with
// 1-based indices and round-trip precision; reading also accepts "symmetric" storage.
CsrMatrix read_matrix_market(std::istream &in);
CsrMatrix read_matrix_market(const std::filesystem::path &path);
void write_matrix_market(std::ostream &out, const CsrMatrix &A);
void write_matrix_market(const std::filesystem::path &path, const CsrMatrix &A);

// Dense vectors use the "array real general" variant (one column).
DenseVector read_vector_market(std::istream &in);
DenseVector read_vector_market(const std::filesystem::path &path);
void write_vector_market(std::ostream &out, std::span<const double> x);
void write_vector_market(const std::filesystem::path &path, std::span<const double> x);

}  // namespace blockamg

#endif  // BLOCKAMG_MATRIX_MARKET_HPP
