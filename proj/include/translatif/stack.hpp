#pragma once

// Runs a callable on a thread with a large stack. Translation of deeply nested
// énoncés recurses once per nesting level.

#include <pthread.h>

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace translatif {

inline constexpr std::size_t kLargeStackBytes = std::size_t{1} << 30;

template <class F>
auto run_with_large_stack(F&& fn, std::size_t bytes = kLargeStackBytes) -> decltype(fn()) {
  using R = decltype(fn());
  struct Job {
    std::remove_reference_t<F>* fn;
    std::exception_ptr error;
    std::conditional_t<std::is_void_v<R>, int, R> result{};
  } job{&fn, nullptr};

  auto entry = [](void* p) -> void* {
    auto* j = static_cast<Job*>(p);
    try {
      if constexpr (std::is_void_v<R>) {
        (*j->fn)();
      } else {
        j->result = (*j->fn)();
      }
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t thread;
  const int rc = pthread_create(&thread, &attr, +entry, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    // No thread available: run in place.
    if constexpr (std::is_void_v<R>) {
      fn();
      return;
    } else {
      return fn();
    }
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
  if constexpr (!std::is_void_v<R>) return std::move(job.result);
}

}  // namespace translatif
