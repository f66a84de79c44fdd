#include "sigmark/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigmark/chacha.hpp"

namespace sigmark {

NullspaceResult gf2_nullspace(const SparseRows& rows, std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<BitVec> h(m, BitVec(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (auto c : rows[i]) {
      if (c >= n) throw std::invalid_argument("gf2_nullspace: column index out of range");
      h[i].flip(c);
    }
  }

  std::vector<std::uint32_t> pivot_cols;
  pivot_cols.reserve(std::min(m, n));
  std::size_t pr = 0;
  for (std::size_t c = 0; c < n && pr < m; ++c) {
    std::size_t pv = pr;
    while (pv < m && !h[pv].get(c)) ++pv;
    if (pv == m) continue;
    if (pv != pr) std::swap(h[pv], h[pr]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != pr && h[i].get(c)) h[i].xor_eq(h[pr]);
    }
    pivot_cols.push_back(std::uint32_t(c));
    ++pr;
  }

  NullspaceResult res;
  res.rank = pr;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(n);
    v.set(c, true);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (h[i].get(c)) v.set(pivot_cols[i], true);
    }
    res.basis.push_back(std::move(v));
    res.free_cols.push_back(std::uint32_t(c));
  }
  return res;
}

BitVec gf2_mat_vec(const SquareBits& rows, const BitVec& x) {
  BitVec y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t par = 0;
    const auto& rw = rows[i].words();
    const auto& xw = x.words();
    for (std::size_t w = 0; w < rw.size(); ++w) par ^= std::popcount(rw[w] & xw[w]);
    y.set(i, par & 1);
  }
  return y;
}

SquareBits gf2_invert(const SquareBits& rows) {
  const std::size_t k = rows.size();
  SquareBits a = rows;
  SquareBits inv(k, BitVec(k));
  for (std::size_t i = 0; i < k; ++i) inv[i].set(i, true);

  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pv = c;
    while (pv < k && !a[pv].get(c)) ++pv;
    if (pv == k) throw std::invalid_argument("gf2_invert: singular matrix");
    std::swap(a[pv], a[c]);
    std::swap(inv[pv], inv[c]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != c && a[i].get(c)) {
        a[i].xor_eq(a[c]);
        inv[i].xor_eq(inv[c]);
      }
    }
  }
  return inv;
}

SquareBits gf2_random_lu(std::size_t k, ChaChaStream& bits) {
  SquareBits l(k, BitVec(k)), u(k, BitVec(k));
  for (std::size_t i = 0; i < k; ++i) {
    l[i].set(i, true);
    u[i].set(i, true);
    for (std::size_t j = 0; j < i; ++j) l[i].set(j, bits.bit());
    for (std::size_t j = i + 1; j < k; ++j) u[i].set(j, bits.bit());
  }
  // A = L * U, rows of A: a_i = sum over j with L[i][j] of u_j
  SquareBits a(k, BitVec(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (l[i].get(j)) a[i].xor_eq(u[j]);
    }
  }
  return a;
}

}  // namespace sigmark
