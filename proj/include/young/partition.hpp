#pragma once

#include <compare>
#include <string>
#include <vector>

namespace young {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed. Prefix-sum queries treat indices past
/// the last part as zero parts.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are weakly decreasing and
  /// strictly positive. (3,2,0) is rejected; normalize before constructing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Number of cells, |p|.
  int size() const { return size_; }

  int part_count() const { return static_cast<int>(parts_.size()); }

  /// 1-based part access; returns 0 beyond the last part.
  int part(int i) const {
    return (i >= 1 && i <= part_count()) ? parts_[i - 1] : 0;
  }

  /// Sum of the first k parts (k >= 0, trailing zeros implied).
  int prefix_sum(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// Bracket notation: "[3,3,2,1]", "[]".
  std::string to_string() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Transpose of the Young diagram: result part i = |{j : p_j >= i}|.
Partition conjugate(const Partition& p);

/// Elementwise sum of parts, shorter argument padded with zeros.
Partition add(const Partition& p, const Partition& q);

/// Conjugate sum: conjugate(add(conjugate(p), conjugate(q))). Equals the
/// decreasing sort of the multiset union of the parts of p and q.
Partition conj_add(const Partition& p, const Partition& q);

/// Dominance test p <= q: every prefix sum of p is at most the
/// corresponding prefix sum of q. Sizes may differ.
bool dominates(const Partition& p, const Partition& q);

/// Double dominance p <= q: dominates(p, q) and the same for conjugates.
bool doubly_dominates(const Partition& p, const Partition& q);

/// Covering pair of the double-dominance order: p below q with sizes
/// differing by exactly one.
bool is_cover(const Partition& p, const Partition& q);

/// Given p doubly dominated by q with |q| - |p| > 1, returns q' with
/// |q'| = |q| - 1 and p below q' below q. Deterministic: the construction
/// applies, in order, shared-row strip, shared-column strip, rightmost
/// column deletion (all row prefix sums strict), the conjugate column
/// case, and finally the rectangle recursion / cell move.
/// Throws std::invalid_argument if the precondition fails.
Partition cover_refine(const Partition& p, const Partition& q);

/// Saturated chain p = v_0, v_1, ..., v_m = q with every consecutive pair
/// a cover, built by repeated cover_refine. Requires p doubly dominated
/// by q (throws otherwise).
std::vector<Partition> cover_chain(const Partition& p, const Partition& q);

/// All partitions covered by q, i.e. every p of size |q| - 1 with p
/// doubly dominated by q. Requires |q| >= 1. Enumeration order follows
/// partitions_of.
std::vector<Partition> covers_below(const Partition& q);

/// All partitions of n in decreasing lexicographic order:
/// (n), (n-1,1), ..., (1^n). partitions_of(0) = { () }.
std::vector<Partition> partitions_of(int n);

/// The componentwise-least hook (a, 1^(m)) doubly dominating p:
/// a = max_k(prefix_k(p) - k + 1), m + 1 = the same for the conjugate.
/// Requires p nonempty.
Partition hook_envelope(const Partition& p);

}  // namespace young
