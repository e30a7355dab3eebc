#include "cadef/hochschild/hochschild.hpp"

#include <algorithm>
#include <map>

#include "cadef/algstruct/ops.hpp"

namespace cadef {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void merge(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) out.back().second += v;
    else out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(out);
}

// by_out[i][r] lists (c, c_{i c}^r) or (c, c_{c i}^r).
using Slices = std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>;

Slices left_slices(const FDAlgebra& A) {
  std::size_t d = A.dim();
  Slices s(d, std::vector<std::vector<std::pair<std::size_t, Rational>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c)
      for (const auto& [r, v] : A.product(i, c)) s[i][r].emplace_back(c, v);
  return s;
}

Slices right_slices(const FDAlgebra& A) {
  std::size_t d = A.dim();
  Slices s(d, std::vector<std::vector<std::pair<std::size_t, Rational>>>(d));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [r, v] : A.product(c, j)) s[j][r].emplace_back(c, v);
  return s;
}

Rational sign(std::size_t i) { return i % 2 ? Rational(-1) : Rational(1); }

}  // namespace

Coboundary hochschild_coboundary(const FDAlgebra& A, std::size_t k) {
  std::size_t d = A.dim();
  Coboundary D;
  D.rows = ipow(d, k + 2);
  D.cols = ipow(d, k + 1);
  D.entries.resize(D.rows);
  Slices L = left_slices(A);
  Slices R = right_slices(A);
  std::vector<std::size_t> I(k + 1);
  auto col = [&](auto first, auto last, std::size_t c) {
    std::size_t idx = 0;
    for (auto it = first; it != last; ++it) idx = idx * d + *it;
    return std::uint32_t(idx * d + c);
  };
  for (std::size_t tuple = 0; tuple < ipow(d, k + 1); ++tuple) {
    for (std::size_t p = k + 1, t = tuple; p-- > 0; t /= d) I[p] = t % d;
    for (std::size_t r = 0; r < d; ++r) {
      SparseRow& row = D.entries[tuple * d + r];
      for (const auto& [c, v] : L[I[0]][r]) row.emplace_back(col(I.begin() + 1, I.end(), c), v);
      std::vector<std::size_t> merged(k);
      for (std::size_t s = 0; s < k; ++s) {
        Rational sg = sign(s + 1);
        for (std::size_t q = 0; q < s; ++q) merged[q] = I[q];
        for (std::size_t q = s + 1; q < k; ++q) merged[q] = I[q + 1];
        for (const auto& [p, v] : A.product(I[s], I[s + 1])) {
          merged[s] = p;
          row.emplace_back(col(merged.begin(), merged.end(), r), sg * v);
        }
      }
      Rational sl = sign(k + 1);
      for (const auto& [c, v] : R[I[k]][r]) row.emplace_back(col(I.begin(), I.begin() + std::ptrdiff_t(k), c), sl * v);
      merge(row);
    }
  }
  return D;
}

Coboundary reduced_coboundary(const FDAlgebra& A, std::size_t k) {
  std::size_t d = A.dim();
  std::size_t e = d - 1;  // non-unit basis vectors 1..d-1
  Coboundary D;
  D.rows = ipow(e, k + 1) * d;
  D.cols = ipow(e, k) * d;
  D.entries.resize(D.rows);
  auto index = [&](const std::vector<std::size_t>& t, std::size_t out) {
    std::size_t idx = 0;
    for (auto x : t) idx = idx * e + (x - 1);
    return idx * d + out;
  };
  // factor[p] lists (a, b, c_{ab}^p) over non-unit a, b.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> factor(d);
  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t b = 1; b < d; ++b)
      for (const auto& [p, v] : A.product(a, b)) factor[p].emplace_back(a, b, v);

  std::vector<std::size_t> J(k);
  for (std::size_t tuple = 0; tuple < ipow(e, k); ++tuple) {
    for (std::size_t p = k, t = tuple; p-- > 0; t /= e) J[p] = t % e + 1;
    for (std::size_t c = 0; c < d; ++c) {
      auto column = std::uint32_t(index(J, c));
      // a_1 f(a_2, ..)
      for (std::size_t a = 1; a < d; ++a) {
        std::vector<std::size_t> I{a};
        I.insert(I.end(), J.begin(), J.end());
        for (const auto& [r, v] : A.product(a, c)) D.entries[index(I, r)].emplace_back(column, v);
      }
      // f(.., a_s a_{s+1}, ..)
      for (std::size_t s = 0; s < k; ++s)
        for (const auto& [a, b, v] : factor[J[s]]) {
          std::vector<std::size_t> I(J.begin(), J.begin() + std::ptrdiff_t(s));
          I.push_back(a);
          I.push_back(b);
          I.insert(I.end(), J.begin() + std::ptrdiff_t(s) + 1, J.end());
          D.entries[index(I, c)].emplace_back(column, sign(s + 1) * v);
        }
      // f(.., a_k) a_{k+1}
      for (std::size_t b = 1; b < d; ++b) {
        std::vector<std::size_t> I(J);
        I.push_back(b);
        for (const auto& [r, v] : A.product(c, b)) D.entries[index(I, r)].emplace_back(column, sign(k + 1) * v);
      }
    }
  }
  for (auto& row : D.entries) merge(row);
  return D;
}

bool composes_to_zero(const Coboundary& first, const Coboundary& second) {
  if (second.cols != first.rows) throw Error(ErrorCode::DimensionMismatch, "coboundaries do not compose");
  for (const auto& row : second.entries) {
    SparseRow acc;
    for (const auto& [m, s] : row)
      for (const auto& [c, v] : first.entries[m]) acc.emplace_back(c, s * v);
    merge(acc);
    if (!acc.empty()) return false;
  }
  return true;
}

HochschildReport hochschild_dims(const FDAlgebra& A, std::size_t k_max, const HochschildOptions& opts) {
  if (k_max > 3 && !opts.allow_large)
    throw Error(ErrorCode::CostGuardExceeded, "k_max above 3 needs the large-computation override");
  std::size_t d = A.dim();
  std::size_t in = opts.reduced ? d - 1 : d;
  HochschildReport rep;
  rep.k_max = k_max;
  rep.reduced = opts.reduced;
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::size_t rows = ipow(in, k + 1) * d;
    std::size_t cols = ipow(in, k) * d;
    if (!opts.allow_large && double(rows) * double(cols) > double(opts.entry_budget))
      throw Error(ErrorCode::CostGuardExceeded, "coboundary " + std::to_string(k) + " is " + std::to_string(rows) +
                                                    " x " + std::to_string(cols));
    rep.cochain_dims.push_back(cols);
  }
  for (std::size_t k = 0; k <= k_max; ++k) {
    Coboundary D = opts.reduced ? reduced_coboundary(A, k) : hochschild_coboundary(A, k);
    rep.ranks.push_back(sparse_rank(std::move(D.entries), D.cols));
  }
  for (std::size_t k = 0; k <= k_max; ++k)
    rep.dims.push_back(rep.cochain_dims[k] - rep.ranks[k] - (k ? rep.ranks[k - 1] : 0));
  return rep;
}

HHConsistency hh_consistency(const FDAlgebra& A) {
  HochschildReport r = hochschild_dims(A, 2);
  HHConsistency out;
  out.hh0 = r.dims[0];
  out.centre_dim = centre(A).dim();
  out.hh0_matches = out.hh0 == out.centre_dim;
  out.hh1 = r.dims[1];
  out.hh2 = r.dims[2];
  out.tangent_obstruction_equal = out.hh1 == out.hh2;
  return out;
}

}  // namespace cadef
