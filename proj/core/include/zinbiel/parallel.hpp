#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <iterator>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace zinbiel {

/// Evaluates `fn(i)` for every i in [0, count) and collects the engaged
/// results in increasing index order. The range is split into contiguous
/// chunks, one per worker, so the merged output does not depend on the
/// worker count.
template <typename Fn>
auto parallel_collect(std::size_t count, unsigned workers, Fn fn)
    -> std::vector<typename std::invoke_result_t<Fn, std::size_t>::value_type> {
  using Result = typename std::invoke_result_t<Fn, std::size_t>::value_type;

  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(workers == 0 ? 1 : workers, count));
  std::vector<std::vector<Result>> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);

  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    try {
      for (std::size_t i = begin; i < end; ++i) {
        if (auto r = fn(i)) partial[c].push_back(std::move(*r));
      }
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) threads.emplace_back(run_chunk, c);
    run_chunk(0);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Result> merged;
  for (auto& p : partial) {
    std::move(p.begin(), p.end(), std::back_inserter(merged));
  }
  return merged;
}

/// Decodes a flat index into a base-`radix` tuple, most significant first,
/// so increasing indices walk tuples in lexicographic order.
inline std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t radix,
                                             std::size_t length) {
  std::vector<std::size_t> tuple(length, 0);
  for (std::size_t pos = length; pos-- > 0;) {
    tuple[pos] = index % radix;
    index /= radix;
  }
  return tuple;
}

inline std::size_t tuple_count(std::size_t radix, std::size_t length) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < length; ++i) n *= radix;
  return n;
}

}  // namespace zinbiel
