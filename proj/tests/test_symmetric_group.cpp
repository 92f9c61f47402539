#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "subdepth/report.hpp"
#include "subdepth/symmetric_group.hpp"

using namespace subdepth;

namespace {

std::vector<std::vector<unsigned>> shapes(const std::vector<Partition>& ps) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& p : ps) out.push_back(p.parts);
  return out;
}

std::size_t distinct_parts(const std::vector<unsigned>& parts) {
  return std::set<unsigned>(parts.begin(), parts.end()).size();
}

}  // namespace

TEST_CASE("partitions in descending lexicographic order", "[symgroup]") {
  CHECK(shapes(partitions(3)) == std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front().parts.empty());
  for (const auto& p : partitions(9)) CHECK(p.size() == 9);
}

TEST_CASE("partitions match the composition oracle", "[symgroup][oracle]") {
  for (unsigned n = 0; n <= 12; ++n) {
    const auto expected = oracle::partitions_by_compositions(n);
    const auto got = shapes(partitions(n));
    CHECK(got == std::vector<std::vector<unsigned>>(expected.begin(), expected.end()));
  }
}

TEST_CASE("branching_matrix", "[symgroup]") {
  CHECK(branching_matrix(4).matrix() ==
        IntMatrix{{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}});
  CHECK(branching_matrix(2).matrix() == IntMatrix{{1, 1}});
  CHECK_THROWS_AS(branching_matrix(1), input_error);

  // row [2,2] of S_4 ⊆ S_5 reaches exactly [3,2] and [2,2,1]
  const auto rows = partitions(4), cols = partitions(5);
  const auto m = branching_matrix(5).matrix();
  const auto row = std::size_t(std::find(rows.begin(), rows.end(), Partition{{2, 2}}) - rows.begin());
  std::vector<Partition> hit;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (m(row, j) == 1) hit.push_back(cols[j]);
  CHECK(hit == std::vector<Partition>{Partition{{3, 2}}, Partition{{2, 2, 1}}});
}

TEST_CASE("branching_matrix agrees with the Young-diagram oracle", "[symgroup][oracle]") {
  for (unsigned n = 2; n <= 9; ++n) {
    const auto rows = partitions(n - 1), cols = partitions(n);
    const auto m = branching_matrix(n).matrix();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto ups = oracle::addable(rows[i].parts);
      BigInt row_sum = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const bool expected = std::find(ups.begin(), ups.end(), cols[j].parts) != ups.end();
        CHECK(m(i, j) == (expected ? 1 : 0));
        row_sum += m(i, j);
      }
      CHECK(row_sum == distinct_parts(rows[i].parts) + 1);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      BigInt col_sum = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) col_sum += m(i, j);
      CHECK(col_sum == distinct_parts(cols[j].parts));
    }
  }
}

TEST_CASE("tower_matrix", "[symgroup]") {
  CHECK(tower_matrix(3, 4) == branching_matrix(4));
  CHECK(tower_matrix(1, 3).matrix() == IntMatrix{{1, 2, 1}});
  CHECK_THROWS_AS(tower_matrix(4, 4), input_error);
  CHECK_THROWS_AS(tower_matrix(5, 4), input_error);
  CHECK_THROWS_AS(tower_matrix(0, 4), input_error);

  // S_2 ⊆ S_4: each row induces a module of dimension 24 / 2 = 12
  const auto m = tower_matrix(2, 4).matrix();
  const auto cols = partitions(4);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt dim = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) dim += m(i, j) * oracle::irreducible_degree(cols[j].parts);
    CHECK(dim == 12);
  }

  // S_3 ⊆ S_5 counts two-box paths in Young's lattice
  const auto t = tower_matrix(3, 5).matrix();
  const auto rows3 = partitions(3), cols5 = partitions(5);
  REQUIRE(t.rows() == 3);
  REQUIRE(t.cols() == 7);
  std::vector<BigInt> sums;
  for (std::size_t i = 0; i < 3; ++i) {
    BigInt paths = 0;
    for (const auto& mid : oracle::addable(rows3[i].parts)) paths += oracle::addable(mid).size();
    BigInt row = 0;
    for (std::size_t j = 0; j < 7; ++j) row += t(i, j);
    CHECK(row == paths);
    sums.push_back(row);
  }
  CHECK(sums == std::vector<BigInt>{5, 8, 5});
}

TEST_CASE("tower matrices compose", "[symgroup][property]") {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned mid = k + 1; mid <= 6; ++mid)
      for (unsigned n = mid + 1; n <= 7; ++n)
        CHECK(tower_matrix(k, n).matrix() ==
              multiply(tower_matrix(k, mid).matrix(), tower_matrix(mid, n).matrix()));
}

TEST_CASE("irreducible degrees from the tower of S_1", "[symgroup]") {
  // With S_1 trivial, row 0 of tower_matrix(1, n) lists the degrees of S_n.
  for (unsigned n = 2; n <= 7; ++n) {
    const auto m = tower_matrix(1, n).matrix();
    const auto cols = partitions(n);
    for (std::size_t j = 0; j < cols.size(); ++j) CHECK(m(0, j) == oracle::irreducible_degree(cols[j].parts));
  }
}

TEST_CASE("S3 in S4 depths", "[symgroup]") {
  const auto r = depth_report(branching_matrix(4));
  CHECK(r.depth == 5);
  CHECK(r.h_depth == 7);
}
