#include "ewb/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "ewb/errors.hpp"

namespace ewb {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = size();
  if (n < 1) throw InvalidInput("a permutation needs at least one letter");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : letters_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw InvalidInput("not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t stop = std::min(text.find(',', start), text.size());
      const std::string_view field = text.substr(start, stop - start);
      if (field.empty() || field.size() > 6 ||
          !std::all_of(field.begin(), field.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InvalidInput("bad letter '" + std::string(field) + "' in permutation");
      }
      letters.push_back(std::stoi(std::string(field)));
      start = stop + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("bad character in permutation '" + std::string(text) + "'");
      letters.push_back(c - '0');
    }
  }
  return Permutation(std::move(letters));
}

std::string Permutation::str() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i != 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

int descent_count(std::span<const int> w) {
  int d = 0;
  for (std::size_t r = 0; r + 1 < w.size(); ++r) d += w[r] > w[r + 1] ? 1 : 0;
  return d;
}

int ascent_count(std::span<const int> w) {
  int a = 0;
  for (std::size_t r = 0; r + 1 < w.size(); ++r) a += w[r] < w[r + 1] ? 1 : 0;
  return a;
}

int inversion_count(std::span<const int> w) {
  int count = 0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t s = r + 1; s < w.size(); ++s) count += w[r] > w[s] ? 1 : 0;
  }
  return count;
}

int excedance_count(std::span<const int> w) {
  int e = 0;
  for (std::size_t r = 0; r < w.size(); ++r) e += w[r] > static_cast<int>(r) + 1 ? 1 : 0;
  return e;
}

int run_count(std::span<const int> w) {
  if (w.empty()) return 0;
  int runs = 1;
  for (std::size_t r = 0; r + 1 < w.size(); ++r) runs += w[r] > w[r + 1] ? 1 : 0;
  return runs;
}

int inverse_descent_count(std::span<const int> w) {
  // position_of[v] for v in 1..n; n <= kEnumerationHardMax on hot paths but
  // fall back to the heap for long permutations.
  constexpr std::size_t kStack = 32;
  const std::size_t n = w.size();
  int stack_buf[kStack + 1];
  std::vector<int> heap_buf;
  int* position_of = stack_buf;
  if (n > kStack) {
    heap_buf.resize(n + 1);
    position_of = heap_buf.data();
  }
  for (std::size_t r = 0; r < n; ++r) position_of[w[r]] = static_cast<int>(r);
  int d = 0;
  for (std::size_t v = 1; v < n; ++v) d += position_of[v] > position_of[v + 1] ? 1 : 0;
  return d;
}

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.size()));
  for (int r = 1; r <= w.size(); ++r) inv[static_cast<std::size_t>(w(r) - 1)] = r;
  return Permutation(std::move(inv));
}

StatProfile statistic_profile(const Permutation& w) {
  StatProfile p;
  p.des = descent_count(w);
  p.ides = descent_count(inverse(w));
  p.inv = inversion_count(w);
  p.asc = ascent_count(w);
  p.exc = excedance_count(w);
  p.run = run_count(w);
  return p;
}

Permutation compose_simple_transposition(const Permutation& w, int r, Side side) {
  const int n = w.size();
  if (r < 1 || r > n - 1) {
    throw InvalidInput("simple transposition index " + std::to_string(r) + " outside 1.." + std::to_string(n - 1));
  }
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  if (side == Side::right) {
    std::swap(letters[static_cast<std::size_t>(r - 1)], letters[static_cast<std::size_t>(r)]);
  } else {
    for (int& x : letters) {
      if (x == r) {
        x = r + 1;
      } else if (x == r + 1) {
        x = r;
      }
    }
  }
  return Permutation(std::move(letters));
}

int descents_via_inversions(const Permutation& w, Side side) {
  const int base = inversion_count(w);
  int count = 0;
  for (int r = 1; r < w.size(); ++r) {
    count += inversion_count(compose_simple_transposition(w, r, side)) < base ? 1 : 0;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > kEnumerationHardMax) throw GuardRailError("n! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lex_rank(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::uint64_t rank = 0;
  for (int r = 0; r < n; ++r) {
    int smaller_after = 0;
    for (int s = r + 1; s < n; ++s) smaller_after += w[static_cast<std::size_t>(s)] < w[static_cast<std::size_t>(r)] ? 1 : 0;
    rank += static_cast<std::uint64_t>(smaller_after) * factorial_u64(n - 1 - r);
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw InvalidInput("rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int r = n - 1; r >= 0; --r) {
    const std::uint64_t f = factorial_u64(r);
    const auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(out));
}

std::uint64_t shard_begin(std::uint64_t count, Shard shard) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * shard.index / shard.total);
}

void check_enumeration_guard(int n, int guard, bool force) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (n > kEnumerationHardMax) {
    throw GuardRailError("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(kEnumerationHardMax));
  }
  if (n > guard && !force) {
    throw GuardRailError("n=" + std::to_string(n) + " exceeds the guard rail n<=" + std::to_string(guard) +
                         " (pass --force to override)");
  }
}

PermutationStream::PermutationStream(int n, Shard shard, bool force) : n_(n) {
  check_enumeration_guard(n, kEnumerationGuard, force);
  if (shard.total == 0 || shard.index >= shard.total) throw InvalidInput("shard index out of range");
  const std::uint64_t count = factorial_u64(n);
  begin_ = shard_begin(count, shard);
  end_ = shard_begin(count, Shard{shard.index + 1, shard.total});
  position_ = begin_;
}

bool PermutationStream::next() {
  if (!started_) {
    started_ = true;
    if (begin_ == end_) return false;
    const Permutation first = lex_unrank(n_, begin_);
    letters_.assign(first.letters().begin(), first.letters().end());
    return true;
  }
  if (position_ + 1 >= end_) {
    position_ = end_;
    return false;
  }
  ++position_;
  std::next_permutation(letters_.begin(), letters_.end());
  return true;
}

std::vector<Permutation> enumerate_sn(int n, Shard shard, bool force) {
  std::vector<Permutation> out;
  PermutationStream stream(n, shard, force);
  out.reserve(static_cast<std::size_t>(stream.size()));
  while (stream.next()) out.push_back(stream.current_permutation());
  return out;
}

}  // namespace ewb
