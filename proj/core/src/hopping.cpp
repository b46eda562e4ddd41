#include "ewb/hopping.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>

#include "ewb/errors.hpp"

namespace ewb {

namespace {

constexpr int kInfinity = INT_MAX;

LetterKind kind_at(std::span<const int> w, std::size_t r) {
  const int left = r == 0 ? kInfinity : w[r - 1];
  const int right = r + 1 == w.size() ? kInfinity : w[r + 1];
  const int x = w[r];
  if (left < x && x > right) return LetterKind::peak;
  if (left > x && x < right) return LetterKind::valley;
  if (left < x) return LetterKind::double_ascent;
  return LetterKind::double_descent;
}

// Returns false if x is not free in w.
bool hop_in_place(std::vector<int>& w, int x) {
  const auto at = std::find(w.begin(), w.end(), x);
  if (at == w.end()) return false;
  const auto r = static_cast<std::size_t>(at - w.begin());
  const LetterKind kind = kind_at(w, r);
  if (kind == LetterKind::double_descent) {
    std::size_t j = r + 1;
    while (j < w.size() && w[j] < x) ++j;
    std::rotate(w.begin() + static_cast<std::ptrdiff_t>(r), w.begin() + static_cast<std::ptrdiff_t>(r) + 1,
                w.begin() + static_cast<std::ptrdiff_t>(j));
    return true;
  }
  if (kind == LetterKind::double_ascent) {
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(r) - 1;
    while (j >= 0 && w[static_cast<std::size_t>(j)] < x) --j;
    std::rotate(w.begin() + j + 1, w.begin() + static_cast<std::ptrdiff_t>(r),
                w.begin() + static_cast<std::ptrdiff_t>(r) + 1);
    return true;
  }
  return false;
}

std::vector<int> values_of_kind(const Permutation& w, const LetterClass& c, auto pred) {
  std::vector<int> out;
  for (std::size_t r = 0; r < c.kinds.size(); ++r) {
    if (pred(c.kinds[r])) out.push_back(w.letters()[r]);
  }
  return out;
}

bool is_free(LetterKind k) { return k == LetterKind::double_ascent || k == LetterKind::double_descent; }

UniPoly expected_orbit_shape(int n, int peaks) {
  return UniPoly::one_plus_t_pow(n - 1 - 2 * peaks).shifted(peaks + 1);
}

}  // namespace

std::vector<int> LetterClass::peaks(const Permutation& w) const {
  return values_of_kind(w, *this, [](LetterKind k) { return k == LetterKind::peak; });
}

std::vector<int> LetterClass::valleys(const Permutation& w) const {
  return values_of_kind(w, *this, [](LetterKind k) { return k == LetterKind::valley; });
}

std::vector<int> LetterClass::free_letters(const Permutation& w) const { return values_of_kind(w, *this, is_free); }

int LetterClass::peak_count() const {
  return static_cast<int>(std::count(kinds.begin(), kinds.end(), LetterKind::peak));
}

int LetterClass::double_descent_count() const {
  return static_cast<int>(std::count(kinds.begin(), kinds.end(), LetterKind::double_descent));
}

LetterClass classify_letters(const Permutation& w) {
  LetterClass c;
  c.kinds.reserve(static_cast<std::size_t>(w.size()));
  for (std::size_t r = 0; r < static_cast<std::size_t>(w.size()); ++r) c.kinds.push_back(kind_at(w.letters(), r));
  return c;
}

Permutation hop(const Permutation& w, int x) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  if (std::find(letters.begin(), letters.end(), x) == letters.end()) {
    throw InvalidInput(std::to_string(x) + " is not a letter of " + w.str());
  }
  if (!hop_in_place(letters, x)) throw InvalidInput(std::to_string(x) + " is not free in " + w.str());
  return Permutation(std::move(letters));
}

Orbit orbit_of(const Permutation& w) {
  const LetterClass cls = classify_letters(w);
  std::vector<int> free = cls.free_letters(w);
  const std::uint64_t expected = std::uint64_t{1} << free.size();

  std::set<Permutation> seen{w};
  std::vector<Permutation> frontier{w};
  while (!frontier.empty()) {
    const Permutation u = frontier.back();
    frontier.pop_back();
    for (int x : classify_letters(u).free_letters(u)) {
      Permutation v = hop(u, x);
      if (seen.insert(v).second) {
        if (seen.size() > expected) throw CheckFailure("valley-hopping orbit of " + w.str() + " exceeds 2^#free");
        frontier.push_back(std::move(v));
      }
    }
  }
  if (seen.size() != expected) throw CheckFailure("valley-hopping orbit of " + w.str() + " is smaller than 2^#free");

  Orbit o{*seen.begin(), {seen.begin(), seen.end()}, cls.peak_count(), cls.peaks(w), cls.valleys(w), std::move(free)};
  std::sort(o.peak_values.begin(), o.peak_values.end());
  std::sort(o.valley_values.begin(), o.valley_values.end());
  std::sort(o.free_values.begin(), o.free_values.end());
  return o;
}

UniPoly orbit_descent_polynomial(const Orbit& orbit) {
  UniPoly sum;
  for (const auto& u : orbit.members) sum += UniPoly::monomial(1, descent_count(u) + 1);
  const UniPoly expected = expected_orbit_shape(orbit.representative.size(), orbit.peak_count);
  if (sum != expected) {
    throw CheckFailure("orbit of " + orbit.representative.str() + " does not have descent polynomial t^i(1+t)^(n+1-2i)");
  }
  return sum;
}

BiPoly orbit_two_sided_polynomial(const Orbit& orbit) {
  BiPoly sum;
  for (const auto& u : orbit.members) sum.add_term(inverse_descent_count(u) + 1, descent_count(u) + 1, 1);
  return sum;
}

std::map<int, Count> orbit_census(int n, bool force) {
  check_enumeration_guard(n, kOrbitCensusGuard, force);
  const std::uint64_t total = factorial_u64(n);
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto test_and_set = [&visited](std::uint64_t rank) {
    const std::uint64_t bit = std::uint64_t{1} << (rank % 64);
    const bool was = (visited[rank / 64] & bit) != 0;
    visited[rank / 64] |= bit;
    return was;
  };

  std::map<int, Count> census;
  std::uint64_t covered = 0;
  std::uint64_t rank = 0;
  PermutationStream stream(n, {}, true);
  std::vector<int> u;
  std::vector<int> free;
  while (stream.next()) {
    const std::uint64_t here = rank++;
    if (test_and_set(here)) continue;

    // First unvisited permutation in lexicographic order is the orbit's least member.
    const auto w = stream.current();
    free.clear();
    int peaks = 0;
    for (std::size_t r = 0; r < w.size(); ++r) {
      const LetterKind k = kind_at(w, r);
      if (k == LetterKind::peak) ++peaks;
      if (is_free(k)) free.push_back(w[r]);
    }

    // Walk the orbit in Gray-code order: one hop per member.
    u.assign(w.begin(), w.end());
    const std::uint64_t size = std::uint64_t{1} << free.size();
    for (std::uint64_t step = 1; step < size; ++step) {
      const int x = free[static_cast<std::size_t>(std::countr_zero(step))];
      if (!hop_in_place(u, x)) throw CheckFailure("letter lost its free status during valley-hopping");
      if (test_and_set(lex_rank(u))) throw CheckFailure("valley-hopping orbits overlap");
    }
    covered += size;
    census[peaks] += 1;
  }
  if (covered != total) throw CheckFailure("valley-hopping orbits do not cover S_n");
  return census;
}

}  // namespace ewb
