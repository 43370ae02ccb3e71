#include "hylat/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace hylat {

namespace {

int g_max_threads = 0;  // 0 = unresolved

int resolve_default() {
  if (const char* env = std::getenv("HYLAT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int max_threads() {
  if (g_max_threads == 0) g_max_threads = resolve_default();
  return g_max_threads;
}

void set_max_threads(int n) { g_max_threads = n >= 1 ? n : 1; }

void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = std::min(max_threads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hylat
