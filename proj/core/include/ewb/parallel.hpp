#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "ewb/perm.hpp"

namespace ewb {

/// Runs work(Shard) on `shards` threads and folds the partial results in
/// shard order, so the merged value does not depend on scheduling.
template <class Result, class Work, class Merge>
Result run_sharded(std::size_t shards, Work work, Merge merge) {
  if (shards <= 1) return work(Shard{0, 1});

  std::vector<Result> partial(shards);
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t i = 0; i < shards; ++i) {
      workers.emplace_back([&, i] {
        try {
          partial[i] = work(Shard{i, shards});
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Result acc = std::move(partial.front());
  for (std::size_t i = 1; i < shards; ++i) merge(acc, partial[i]);
  return acc;
}

}  // namespace ewb
