#include "cadef/exactnum/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cadef {

QMatrix evaluate(const Matrix<RatFunc>& m, const Rational& at) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(at);
  return out;
}

namespace {

// row <- row - factor * pivot, both sorted by column.
void axpy(SparseRow& row, const Rational& factor, const SparseRow& pivot, SparseRow& scratch) {
  scratch.clear();
  scratch.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      scratch.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      scratch.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (!v.is_zero()) scratch.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.swap(scratch);
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols) {
  // Order columns by occurrence count so that rarely used columns are
  // eliminated first; this keeps fill-in low on coboundary matrices.
  std::vector<std::size_t> count(ncols, 0);
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++count[c];
  std::vector<std::uint32_t> order(ncols);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
  std::vector<std::uint32_t> rank_of(ncols);
  for (std::uint32_t k = 0; k < ncols; ++k) rank_of[order[k]] = k;
  for (auto& r : rows) {
    for (auto& e : r) e.first = rank_of[e.first];
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<int> pivot_of(ncols, -1);
  std::vector<SparseRow> pivots;
  SparseRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      int p = pivot_of[row.front().first];
      if (p < 0) break;
      Rational f = row.front().second;
      axpy(row, f, pivots[std::size_t(p)], scratch);
    }
    if (row.empty()) continue;
    Rational inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    pivot_of[row.front().first] = int(pivots.size());
    pivots.push_back(std::move(row));
    if (pivots.size() == ncols) break;
  }
  return pivots.size();
}

}  // namespace cadef
