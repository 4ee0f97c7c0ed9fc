#include "lozenge/partitions.hpp"

#include <algorithm>

#include "lozenge/error.hpp"

namespace lozenge {

int weight(const std::vector<int>& parts) {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int weight(const Pile& pile) {
  int s = 0;
  for (const auto& row : pile) s += weight(row);
  return s;
}

bool is_pile(const Pile& pile) {
  for (size_t i = 0; i < pile.size(); ++i) {
    if (i > 0 && pile[i].size() > pile[i - 1].size()) return false;
    for (size_t j = 0; j < pile[i].size(); ++j) {
      if (pile[i][j] < 0) return false;
      if (j > 0 && pile[i][j] > pile[i][j - 1]) return false;
      if (i > 0 && pile[i][j] > pile[i - 1][j]) return false;
    }
  }
  return true;
}

namespace {

void partitions_rec(const std::vector<int>& limit, size_t q, int prev, int t,
                    std::vector<int>& acc,
                    const std::function<void(const std::vector<int>&)>& emit) {
  const size_t n = limit.size();
  if (t == 0) {
    std::fill(acc.begin() + q, acc.end(), 0);
    emit(acc);
    return;
  }
  if (q == n) return;  // weight left but no slots
  if (q + 1 == n) {
    if (t <= std::min(limit[q], prev)) {
      acc[q] = t;
      emit(acc);
    }
    return;
  }
  for (int k = std::min({limit[q], prev, t}); k >= 1; --k) {
    // Largest weight completable with next part k: parts are capped by both
    // k and their own limits.
    int reach = k;
    for (size_t i = q + 1; i < n && reach < t; ++i)
      reach += std::min(limit[i], k);
    if (reach < t) break;  // shrinks as k does
    acc[q] = k;
    partitions_rec(limit, q + 1, k, t - k, acc, emit);
  }
}

}  // namespace

void limited_partitions(
    const std::vector<int>& limit, int target,
    const std::function<void(const std::vector<int>&)>& emit) {
  for (size_t i = 0; i < limit.size(); ++i) {
    if (limit[i] < 0) fail(Errc::BadSize, "negative part limit");
    if (i > 0 && limit[i] > limit[i - 1])
      fail(Errc::BadSize, "part limits must weakly decrease");
  }
  if (target < 0) fail(Errc::BadSize, "negative target weight");
  std::vector<int> acc(limit.size(), 0);
  if (target == 0) {
    emit(acc);
    return;
  }
  partitions_rec(limit, 0, target, target, acc, emit);
}

namespace {

// Cellwise min of a candidate row bound: prev row of the pile built so far
// (column monotonicity) and the corresponding row of P (cell bound),
// truncated to the length of P's row.
std::vector<int> row_cap(const std::vector<int>& prev,
                         const std::vector<int>& p_row) {
  std::vector<int> cap(p_row.size());
  for (size_t j = 0; j < p_row.size(); ++j)
    cap[j] = std::min(p_row[j], j < prev.size() ? prev[j] : 0);
  return cap;
}

void piles_rec(const Pile& P, size_t q, int t, Pile& acc,
               const std::function<void(const Pile&)>& emit) {
  const size_t n = P.size();
  if (t == 0) {
    for (size_t i = q; i < n; ++i)
      acc[i].assign(P[i].size(), 0);
    emit(acc);
    return;
  }
  if (q == n) return;
  // First row is capped by P alone; later rows also by the row above.
  const std::vector<int>& prev = q == 0 ? P[0] : acc[q - 1];
  std::vector<int> cap = row_cap(prev, P[q]);
  // Candidate rows in decreasing weight; a row k is kept only if the rows
  // below it can still absorb the remaining weight:
  //   w(k) + w(min(k,P[q+1])) + ... + w(min(k,P[n-1])) >= t.
  for (int w = std::min(t, weight(cap)); w >= 0; --w) {
    limited_partitions(cap, w, [&](const std::vector<int>& k) {
      int reach = w;
      for (size_t i = q + 1; i < n && reach < t; ++i)
        reach += weight(row_cap(k, P[i]));
      if (reach < t) return;
      acc[q] = k;
      piles_rec(P, q + 1, t - w, acc, emit);
    });
  }
}

}  // namespace

void limited_plane_partitions(const Pile& P, int target,
                              const std::function<void(const Pile&)>& emit) {
  if (!is_pile(P)) fail(Errc::NotAPlanePartition, "bounding pile is invalid");
  if (target < 0) fail(Errc::BadSize, "negative target weight");
  Pile acc(P.size());
  piles_rec(P, 0, target, acc, emit);
}

std::vector<Pile> all_limited_plane_partitions(const Pile& P) {
  std::vector<Pile> out;
  for (int t = 0; t <= weight(P); ++t)
    limited_plane_partitions(P, t, [&](const Pile& a) { out.push_back(a); });
  for (size_t t0 = 0, i = 1; i <= out.size(); ++i) {
    // Stable by construction per weight; sort each weight class for a
    // canonical order.
    if (i == out.size() || weight(out[i]) != weight(out[t0])) {
      std::sort(out.begin() + t0, out.begin() + i);
      t0 = i;
    }
  }
  return out;
}

std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> p = parts;
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++out[j];
  return out;
}

}  // namespace lozenge
