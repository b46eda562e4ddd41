#pragma once

// Valley-hopping: letters that are neither peaks nor valleys may jump across
// the adjacent valley to the same height on the opposite slope. Both ends of
// the permutation are bordered by +infinity.

#include <cstdint>
#include <map>
#include <vector>

#include "ewb/exactnum.hpp"
#include "ewb/perm.hpp"

namespace ewb {

enum class LetterKind { peak, valley, double_ascent, double_descent };

struct LetterClass {
  std::vector<LetterKind> kinds;  ///< kinds[r-1] is the class of position r

  /// Letter values in position order.
  std::vector<int> peaks(const Permutation& w) const;
  std::vector<int> valleys(const Permutation& w) const;
  std::vector<int> free_letters(const Permutation& w) const;
  int peak_count() const;
  int double_descent_count() const;
};

LetterClass classify_letters(const Permutation& w);

/// Moves free letter x across its valley. Throws InvalidInput when x is not
/// a letter of w or sits at a peak or valley.
Permutation hop(const Permutation& w, int x);

struct Orbit {
  Permutation representative;       ///< lexicographically least member
  std::vector<Permutation> members;  ///< sorted
  int peak_count = 0;
  std::vector<int> peak_values;    ///< sorted
  std::vector<int> valley_values;  ///< sorted
  std::vector<int> free_values;    ///< sorted

  std::uint64_t size() const { return members.size(); }
};

/// Closure of w under hops. Throws CheckFailure if the closure does not have
/// exactly 2^(#free letters) members.
Orbit orbit_of(const Permutation& w);

/// sum over members u of t^(des(u)+1); asserted to equal
/// t^(peaks+1) (1+t)^(n-1-2 peaks).
UniPoly orbit_descent_polynomial(const Orbit& orbit);

/// sum over members u of s^(des(u^-1)+1) t^(des(u)+1); no shape is asserted.
BiPoly orbit_two_sided_polynomial(const Orbit& orbit);

inline constexpr int kOrbitCensusGuard = 11;

/// Number of orbits of S_n by peak count, found by walking S_n in
/// lexicographic order and closing each unvisited permutation under hops.
std::map<int, Count> orbit_census(int n, bool force = false);

}  // namespace ewb
