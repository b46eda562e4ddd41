#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ewb {

/// A permutation of {1..n} in one-line notation. Immutable once built.
class Permutation {
 public:
  /// Validates that letters is a rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  /// Accepts compact digit strings ("5624713") or comma-separated letters
  /// ("10,3,1,2,..."). Throws InvalidInput unless the result is a bijection.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  /// w(position), 1-based.
  int operator()(int position) const { return letters_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> letters() const { return letters_; }
  operator std::span<const int>() const { return letters_; }  // NOLINT: statistics take spans

  /// Compact digits when n <= 9, comma-separated otherwise.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

// Statistics. All take one-line notation as a span so that enumeration
// loops can evaluate them without materialising a Permutation.

int descent_count(std::span<const int> w);
int ascent_count(std::span<const int> w);
int inversion_count(std::span<const int> w);
int excedance_count(std::span<const int> w);
/// Number of maximal increasing runs; des + 1 for nonempty w.
int run_count(std::span<const int> w);
/// des(w^-1), read off directly as values v whose successor v+1 sits to the left.
int inverse_descent_count(std::span<const int> w);

Permutation inverse(const Permutation& w);

struct StatProfile {
  int des = 0;
  int ides = 0;
  int inv = 0;
  int asc = 0;
  int exc = 0;
  int run = 0;
  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

StatProfile statistic_profile(const Permutation& w);

enum class Side { left, right };

/// right: w o sigma_r (swap positions r, r+1); left: sigma_r o w (swap values r, r+1).
/// Throws InvalidInput unless 1 <= r <= n-1.
Permutation compose_simple_transposition(const Permutation& w, int r, Side side);

/// |{ r : inv(w composed with sigma_r on the given side) < inv(w) }|
int descents_via_inversions(const Permutation& w, Side side);

// ---------------------------------------------------------------------------
// Enumeration of S_n in lexicographic order, optionally restricted to one of
// `total` contiguous blocks.

inline constexpr int kEnumerationGuard = 12;  ///< largest n without force
inline constexpr int kEnumerationHardMax = 20;  ///< n! must fit in 64 bits

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

std::uint64_t factorial_u64(int n);

/// Lexicographic rank in 0..n!-1 (factorial number system).
std::uint64_t lex_rank(std::span<const int> w);
Permutation lex_unrank(int n, std::uint64_t rank);

/// First rank of block `index` out of `total`; blocks differ in size by at most 1.
std::uint64_t shard_begin(std::uint64_t count, Shard shard);

/// Throws GuardRailError when n exceeds the guard rail (unless force) or the hard max.
void check_enumeration_guard(int n, int guard, bool force);

class PermutationStream {
 public:
  PermutationStream(int n, Shard shard = {}, bool force = false);

  /// Advances to the next permutation; the first call yields the first one.
  bool next();
  std::span<const int> current() const { return letters_; }
  Permutation current_permutation() const { return Permutation(letters_); }
  std::uint64_t size() const { return end_ - begin_; }

 private:
  int n_;
  std::uint64_t begin_;
  std::uint64_t end_;
  std::uint64_t position_;
  bool started_ = false;
  std::vector<int> letters_;
};

/// Materialised stream; meant for tests and small n.
std::vector<Permutation> enumerate_sn(int n, Shard shard = {}, bool force = false);

}  // namespace ewb
