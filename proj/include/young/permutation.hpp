#pragma once

#include <compare>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace young {

/// A permutation in one-line notation: values are a rearrangement of
/// 1..n. The empty permutation (n = 0) is allowed. Positions are 0-based
/// throughout the library; the CLI renders them 1-based.
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless values is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int length() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](int pos) const { return values_[pos]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

  /// One-line notation, space separated: "2 5 3 1 4". Empty string for n = 0.
  std::string to_string() const;

private:
  std::vector<int> values_;
};

/// Pattern involvement sigma below pi: some subsequence of pi's values is
/// order-isomorphic to sigma. Backtracking over positions with
/// value-window pruning; intended for length(pi) up to about 14.
bool involves(const Permutation& sigma, const Permutation& pi);

/// The lexicographically least 0-based position sequence realizing sigma
/// inside pi, or nullopt when sigma is not involved in pi.
std::optional<std::vector<int>> occurrence(const Permutation& sigma,
                                           const Permutation& pi);

/// Direct sum: b stacked above and to the right of a.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Skew sum: b stacked below and to the right of a.
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Replaces point i of the skeleton by an interval copy of blocks[i],
/// blocks laid out left to right and value intervals ordered like the
/// skeleton values. Requires one nonempty block per skeleton point.
Permutation inflate(const Permutation& skeleton,
                    const std::vector<Permutation>& blocks);

/// theta(k) = 1 (+) 21 (+) 321 (+) ... (+) k(k-1)...1, of length k(k+1)/2.
/// Its longest increasing and decreasing subsequences both have length k.
/// theta(0) is the empty permutation.
Permutation theta(int k);

/// Values read right to left.
Permutation reverse(const Permutation& p);

/// The pattern of the values remaining after deleting the given 0-based
/// positions (duplicates ignored). Throws on out-of-range positions.
Permutation delete_points(const Permutation& p, const std::vector<int>& positions);

inline constexpr int kDefaultPermutationBound = 10;

/// Lazy range over all permutations of length n in lexicographic order.
/// Guards against runaway enumerations: throws if n exceeds the bound.
class PermutationRange {
public:
  explicit PermutationRange(int n, int bound = kDefaultPermutationBound);

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n);

    Permutation operator*() const { return Permutation(current_); }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

  private:
    std::vector<int> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

private:
  int n_;
};

PermutationRange all_permutations(int n, int bound = kDefaultPermutationBound);

}  // namespace young
