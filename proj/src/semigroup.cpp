#include "apery/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "apery/errors.hpp"

namespace apery {

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> sorted_gaps)
    : gaps_(std::move(sorted_gaps)) {
  compute_generators();
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw ArgumentError("from_generators: empty generator set");
  for (auto g : gens)
    if (g <= 0) throw ArgumentError("from_generators: generators must be positive, got " + std::to_string(g));
  const auto g = gcd_of(gens);
  if (g != 1) throw ArgumentError("infinite gap set: gcd of generators is " + std::to_string(g));

  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  const std::int64_t bound = (*lo - 1) * *hi;
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (std::int64_t x = 1; x <= bound; ++x)
    for (auto gen : gens)
      if (gen <= x && member[static_cast<std::size_t>(x - gen)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
  std::vector<std::int64_t> gaps;
  for (std::int64_t x = 1; x <= bound; ++x)
    if (!member[static_cast<std::size_t>(x)]) gaps.push_back(x);
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const std::int64_t> gaps) {
  std::vector<std::int64_t> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0)
    throw ArgumentError("from_gaps: gaps must be positive, got " + std::to_string(sorted.front()));

  if (!sorted.empty()) {
    const std::int64_t f = sorted.back();
    std::vector<char> gap(static_cast<std::size_t>(f) + 1, 0);
    for (auto c : sorted) gap[static_cast<std::size_t>(c)] = 1;
    for (std::int64_t s = 1; 2 * s <= f; ++s) {
      if (gap[static_cast<std::size_t>(s)]) continue;
      for (std::int64_t t = s; s + t <= f; ++t)
        if (!gap[static_cast<std::size_t>(t)] && gap[static_cast<std::size_t>(s + t)])
          throw ValidationError("from_gaps: not additively closed: " + std::to_string(s) + " + " +
                                    std::to_string(t) + " = " + std::to_string(s + t) + " is a gap",
                                s, t);
    }
  }
  return NumericalSemigroup(std::move(sorted));
}

void NumericalSemigroup::compute_generators() {
  generators_.clear();
  std::int64_t mult = 1;
  while (!contains(mult)) ++mult;
  const std::int64_t limit = std::max<std::int64_t>(frobenius() + mult, mult);
  const auto mem = members_up_to(limit);
  std::vector<char> is_member(static_cast<std::size_t>(limit) + 1, 0);
  for (auto x : mem) is_member[static_cast<std::size_t>(x)] = 1;
  for (auto x : mem) {
    if (x == 0) continue;
    bool decomposable = false;
    for (std::int64_t a = 1; 2 * a <= x && !decomposable; ++a)
      decomposable = is_member[static_cast<std::size_t>(a)] && is_member[static_cast<std::size_t>(x - a)];
    if (!decomposable) generators_.push_back(x);
  }
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius()) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

std::vector<std::int64_t> NumericalSemigroup::members_up_to(std::int64_t limit) const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= limit; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::string NumericalSemigroup::describe() const {
  std::ostringstream os;
  if (is_full()) return "Z>=0";
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << ">";
  return os.str();
}

std::vector<std::int64_t> AperySet::sorted_values() const {
  auto v = values;
  std::sort(v.begin(), v.end());
  return v;
}

AperySet apery_set(const NumericalSemigroup& s, std::int64_t m) {
  if (m <= 0 || !s.contains(m))
    throw ArgumentError("apery_set: m = " + std::to_string(m) + " is not a nonzero member of " + s.describe());
  AperySet ap;
  ap.m = m;
  ap.values.resize(static_cast<std::size_t>(m));
  ap.counts.assign(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t x = i;
    while (!s.contains(x)) x += m;
    ap.values[static_cast<std::size_t>(i)] = x;
  }
  for (auto c : s.gaps()) ++ap.counts[static_cast<std::size_t>(c % m)];
  for (std::int64_t i = 0; i < m; ++i)
    if (ap.values[static_cast<std::size_t>(i)] != m * ap.counts[static_cast<std::size_t>(i)] + i)
      throw std::logic_error("apery_set: a_i != m*A_i + i at residue " + std::to_string(i));
  return ap;
}

HeightPartition height_partition(const NumericalSemigroup& s, std::int64_t m) {
  if (m <= 0 || !s.contains(m))
    throw ArgumentError("height_partition: m = " + std::to_string(m) + " is not a nonzero member");
  HeightPartition hp;
  hp.m = m;
  if (s.is_full()) return hp;
  hp.b.assign(static_cast<std::size_t>(s.frobenius() / m) + 1, 0);
  for (auto c : s.gaps()) ++hp.b[static_cast<std::size_t>(c / m)];
  return hp;
}

AperyCheck check_apery_invariants(const NumericalSemigroup& s, const AperySet& ap) {
  const auto m = ap.m;
  auto fail = [](std::string why) { return AperyCheck{false, std::move(why)}; };
  if (ap.values.size() != static_cast<std::size_t>(m) || ap.counts.size() != static_cast<std::size_t>(m))
    return fail("size mismatch");
  if (ap.values[0] != 0 || ap.counts[0] != 0) return fail("a_0 != 0 or A_0 != 0");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto a = ap.values[static_cast<std::size_t>(i)];
    const auto tag = " at residue " + std::to_string(i);
    if (((a % m) + m) % m != i) return fail("a_i not congruent to i" + tag);
    if (a != m * ap.counts[static_cast<std::size_t>(i)] + i) return fail("a_i != m*A_i + i" + tag);
    if (!s.contains(a)) return fail("a_i not a member" + tag);
    if (s.contains(a - m)) return fail("a_i - m is a member" + tag);
    seen[static_cast<std::size_t>(i)] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 1) != m) return fail("not a complete residue system");
  return {};
}

}  // namespace apery
