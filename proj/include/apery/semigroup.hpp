#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace apery {

/// A numerical semigroup, stored as its sorted gap list. Z>=0 is the empty
/// gap list with frobenius() == -1. Immutable once built.
class NumericalSemigroup {
 public:
  /// Z>=0.
  NumericalSemigroup() = default;

  /// Additive closure of `gens`. Throws ArgumentError when gens is empty,
  /// contains a non-positive value, or has gcd != 1 (infinite gap set).
  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);

  /// Semigroup with exactly these gaps (any order, duplicates allowed).
  /// Throws ValidationError naming members (s, t) with s + t a gap.
  static NumericalSemigroup from_gaps(std::span<const std::int64_t> gaps);

  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::size_t genus() const noexcept { return gaps_.size(); }
  std::int64_t frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }
  bool is_full() const noexcept { return gaps_.empty(); }
  const std::vector<std::int64_t>& minimal_generators() const noexcept { return generators_; }
  /// Smallest nonzero member.
  std::int64_t multiplicity() const noexcept { return generators_.front(); }

  bool contains(std::int64_t x) const;

  /// Members in [0, limit], ascending.
  std::vector<std::int64_t> members_up_to(std::int64_t limit) const;

  std::string describe() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  explicit NumericalSemigroup(std::vector<std::int64_t> sorted_gaps);
  void compute_generators();

  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> generators_{1};
};

/// Apery set of S with respect to a nonzero member m. values[i] is the
/// least member congruent to i mod m; counts[i] the number of gaps in that
/// class; values[i] == m * counts[i] + i.
struct AperySet {
  std::int64_t m = 1;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> counts;

  /// Values sorted ascending (same multiset as `values`).
  std::vector<std::int64_t> sorted_values() const;
};

/// Throws ArgumentError unless m > 0 is a member of s. The values are found
/// by a per-class minimum search and the counts by tallying gaps; the two
/// are cross-checked before returning.
AperySet apery_set(const NumericalSemigroup& s, std::int64_t m);

/// b[i] = number of gaps k with floor(k / m) == i, for i = 0 .. floor(F/m).
struct HeightPartition {
  std::int64_t m = 1;
  std::vector<std::int64_t> b;
};

HeightPartition height_partition(const NumericalSemigroup& s, std::int64_t m);

/// Result of checking the AperySet invariants against s. `failure` names the
/// first violated invariant, empty if all hold.
struct AperyCheck {
  bool ok = true;
  std::string failure;
};

AperyCheck check_apery_invariants(const NumericalSemigroup& s, const AperySet& ap);

std::int64_t gcd_of(std::span<const std::int64_t> values);

}  // namespace apery
