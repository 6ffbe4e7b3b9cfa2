#include "berge5/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace berge5 {

namespace {

std::size_t default_threads() {
  if (const char* env = std::getenv("BERGE_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<std::size_t>& configured() {
  static std::atomic<std::size_t> threads{default_threads()};
  return threads;
}

}  // namespace

std::size_t thread_count() { return configured().load(); }

void set_thread_count(std::size_t threads) { configured().store(threads == 0 ? default_threads() : threads); }

}  // namespace berge5
