#ifndef MATCHCRIT_PARALLEL_HPP
#define MATCHCRIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "matchcrit/enumerate.hpp"

namespace matchcrit {

/// Applies f to every item using `jobs` threads; results keep input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) slots[i].emplace(f(items[i]));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        while (!failed) {
          std::size_t i = next++;
          if (i >= items.size()) return;
          try {
            slots[i].emplace(f(items[i]));
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Streams graphs in chunks, evaluates each chunk in parallel and hands the
/// results to `merge` in stream order.
template <class F, class M>
long long for_each_graph(const GraphSource& src, int jobs, F f, M merge, std::size_t chunk = 4096) {
  long long count = 0;
  std::vector<Graph> buf;
  auto flush = [&] {
    auto results = parallel_map(buf, jobs, f);
    for (std::size_t i = 0; i < buf.size(); ++i) merge(buf[i], results[i]);
    count += static_cast<long long>(buf.size());
    buf.clear();
  };
  while (auto g = src()) {
    buf.push_back(std::move(*g));
    if (buf.size() >= chunk) flush();
  }
  if (!buf.empty()) flush();
  return count;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_PARALLEL_HPP
