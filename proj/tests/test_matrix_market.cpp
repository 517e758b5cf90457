// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include <blockamg/error.hpp>
#include <blockamg/matrix_market.hpp>

#include "oracle.hpp"

namespace blockamg
{
namespace
{

TEST(MatrixMarket, RoundTripIsExact)
{
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t)
  {
    auto A = oracle::random_sparse(9, 7, 0.3, rng);
    std::stringstream ss;
    write_matrix_market(ss, A);
    EXPECT_EQ(read_matrix_market(ss), A);
  }
}

TEST(MatrixMarket, KeepsStoredZeros)
{
  const CsrMatrix A(2, 2, {0, 1, 2}, {0, 1}, {0.0, 1.5});
  std::stringstream ss;
  write_matrix_market(ss, A);
  EXPECT_EQ(read_matrix_market(ss), A);
}

TEST(MatrixMarket, ReadsSymmetricAndComments)
{
  std::istringstream in("%%MatrixMarket matrix coordinate real symmetric\n"
                        "% comment\n"
                        "3 3 4\n1 1 2\n2 1 -1\n2 2 2\n3 3 2\n");
  const auto A = read_matrix_market(in);
  EXPECT_EQ(A.at(0, 1), -1.0);
  EXPECT_EQ(A.at(1, 0), -1.0);
  EXPECT_EQ(A.nnz(), 5u);
}

TEST(MatrixMarket, RejectsMalformedInput)
{
  for (const char *text : {"", "not a banner\n", "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n",
                           "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n",
                           "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"})
  {
    std::istringstream in(text);
    try
    {
      read_matrix_market(in);
      ADD_FAILURE() << text;
    }
    catch (const Error &e)
    {
      EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
  }
  EXPECT_THROW(read_matrix_market(std::filesystem::path("/nonexistent/a.mtx")), Error);
}

TEST(MatrixMarket, VectorRoundTrip)
{
  std::mt19937_64 rng(2);
  const auto x = oracle::random_vector(17, rng);
  std::stringstream ss;
  write_vector_market(ss, x);
  EXPECT_EQ(read_vector_market(ss), x);
}

}  // namespace
}  // namespace blockamg
