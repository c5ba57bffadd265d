#include "young/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace young {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::prefix_sum(int k) const {
  if (k >= part_count()) return size_;
  int s = 0;
  for (int i = 0; i < k; ++i) s += parts_[i];
  return s;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(p.parts().front(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

Partition add(const Partition& p, const Partition& q) {
  const int n = std::max(p.part_count(), q.part_count());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = p.part(i) + q.part(i);
  return Partition(std::move(out));
}

Partition conj_add(const Partition& p, const Partition& q) {
  return conjugate(add(conjugate(p), conjugate(q)));
}

bool dominates(const Partition& p, const Partition& q) {
  // Beyond p's last part its prefix sums are constant while q's still
  // grow, so checking up to part_count(p) suffices.
  int sp = 0, sq = 0;
  for (int i = 1; i <= p.part_count(); ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

bool doubly_dominates(const Partition& p, const Partition& q) {
  return dominates(p, q) && dominates(conjugate(p), conjugate(q));
}

bool is_cover(const Partition& p, const Partition& q) {
  return q.size() == p.size() + 1 && doubly_dominates(p, q);
}

namespace {

// Deletes the cell at the bottom of the rightmost column of q. Valid for
// any nonempty q.
Partition delete_rightmost_column_cell(const Partition& q) {
  const Partition qc = conjugate(q);
  const int row = qc.part(q.part(1));  // number of rows of full width
  std::vector<int> out = q.parts();
  out[row - 1] -= 1;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return Partition(std::move(out));
}

Partition refine_impl(const Partition& lam, const Partition& mu) {
  // Shared first row part: strip it from both and recurse on the tails.
  if (!lam.empty() && lam.part(1) == mu.part(1)) {
    const int head = mu.part(1);
    Partition lam2(std::vector<int>(lam.parts().begin() + 1, lam.parts().end()));
    Partition mu2(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    std::vector<int> out = refine_impl(lam2, mu2).parts();
    out.insert(out.begin(), head);
    return Partition(std::move(out));
  }

  const Partition lc = conjugate(lam);
  const Partition mc = conjugate(mu);

  // Shared first column: same step on the conjugates.
  if (!lc.empty() && lc.part(1) == mc.part(1))
    return conjugate(refine_impl(lc, mc));

  // All row prefix sums strictly greater: delete the cell of the lowest
  // row of the rightmost column.
  bool rows_strict = true;
  for (int r = 1; r <= mu.part_count(); ++r)
    if (mu.prefix_sum(r) <= lam.prefix_sum(r)) { rows_strict = false; break; }
  if (rows_strict) return delete_rightmost_column_cell(mu);

  // All column prefix sums strictly greater: conjugate-symmetric case.
  bool cols_strict = true;
  for (int c = 1; c <= mc.part_count(); ++c)
    if (mc.prefix_sum(c) <= lc.prefix_sum(c)) { cols_strict = false; break; }
  if (cols_strict) return conjugate(refine_impl(lc, mc));

  // Least r and c where the row / column prefix sums agree. Here
  // mu_r < lam_r and mu*_c < lam*_c.
  int r = 1;
  while (mu.prefix_sum(r) != lam.prefix_sum(r)) ++r;
  int c = 1;
  while (mc.prefix_sum(c) != lc.prefix_sum(c)) ++c;

  if (mu.part(r) >= c && mc.part(c) >= r) {
    // Both partitions contain the upper-left r x c rectangle and agree on
    // the cell counts beside and below it; recurse on the region strictly
    // below row r and right of column c.
    auto region = [&](const Partition& p) {
      std::vector<int> v;
      for (int i = r + 1; i <= p.part_count(); ++i)
        if (p.part(i) > c) v.push_back(p.part(i) - c);
      return Partition(std::move(v));
    };
    const Partition sub = refine_impl(region(lam), region(mu));
    std::vector<int> out(mu.parts().begin(), mu.parts().begin() + r);
    const int below = mu.part_count() - r;
    for (int i = 1; i <= std::max(below, sub.part_count()); ++i) {
      const int v = std::min(mu.part(r + i), c) + sub.part(i);
      if (v > 0) out.push_back(v);
    }
    return Partition(std::move(out));
  }

  // Some rectangle cell is missing from mu (equivalently mu_r < c): move
  // one cell from the rightmost column and one from the bottommost row,
  // adding one back inside the rectangle at the topmost row shorter
  // than c.
  std::vector<int> out = mu.parts();
  out[mc.part(mu.part(1)) - 1] -= 1;
  out[mu.part_count() - 1] -= 1;
  int i0 = 1;
  while (mu.part(i0) >= c) ++i0;
  out[i0 - 1] += 1;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return Partition(std::move(out));
}

}  // namespace

Partition cover_refine(const Partition& p, const Partition& q) {
  if (q.size() - p.size() <= 1 || !doubly_dominates(p, q))
    throw std::invalid_argument(
        "cover_refine requires double dominance with size gap > 1");
  return refine_impl(p, q);
}

std::vector<Partition> cover_chain(const Partition& p, const Partition& q) {
  if (!doubly_dominates(p, q))
    throw std::invalid_argument("cover_chain requires double dominance");
  std::vector<Partition> chain{q};
  while (chain.back().size() - p.size() > 1)
    chain.push_back(cover_refine(p, chain.back()));
  if (chain.back().size() > p.size()) chain.push_back(p);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<Partition> covers_below(const Partition& q) {
  if (q.size() < 1)
    throw std::invalid_argument("covers_below requires a nonempty partition");
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(q.size() - 1))
    if (is_cover(p, q)) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
      cur.push_back(first);
      self(self, remaining - first, first);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

Partition hook_envelope(const Partition& p) {
  if (p.empty())
    throw std::invalid_argument("hook_envelope requires a nonempty partition");
  const Partition pc = conjugate(p);
  int arm = 0;
  for (int k = 1; k <= p.part_count(); ++k)
    arm = std::max(arm, p.prefix_sum(k) - k + 1);
  int leg = 0;
  for (int k = 1; k <= pc.part_count(); ++k)
    leg = std::max(leg, pc.prefix_sum(k) - k + 1);
  std::vector<int> parts{arm};
  parts.insert(parts.end(), leg - 1, 1);
  return Partition(std::move(parts));
}

}  // namespace young
