#pragma once

// Pull-based, memoized sequence. A Stream is a cheap handle: copies share the
// same cache, so a term computed once is never recomputed. Terms are produced
// strictly in order by a Rule that sees the prefix computed so far and
// returns std::nullopt when the sequence ends.
//
// Reads of cached terms take a shared lock; extending the cache takes the
// exclusive lock. References returned by operator[] stay valid for the life
// of the stream (std::deque never relocates on push_back).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace altcf {

class StreamExhausted : public std::out_of_range {
public:
  StreamExhausted(std::size_t index, const std::string& what)
      : std::out_of_range(what), index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

template <class T>
class Stream {
public:
  using Rule = std::function<std::optional<T>(const std::deque<T>& prefix)>;

  Stream() : Stream(std::vector<T>{}) {}

  explicit Stream(Rule rule) : state_(std::make_shared<State>()) { state_->rule = std::move(rule); }

  /// Finite stream holding exactly `terms`.
  Stream(std::vector<T> terms) : state_(std::make_shared<State>()) {
    state_->cache.assign(std::make_move_iterator(terms.begin()), std::make_move_iterator(terms.end()));
    state_->ended = true;
  }

  /// Infinite stream t_n = f(n).
  template <class F>
  static Stream by_index(F f) {
    return Stream(Rule([f = std::move(f)](const std::deque<T>& prefix) -> std::optional<T> {
      return f(prefix.size());
    }));
  }

  /// Stream that repeats `value` forever.
  static Stream constant(T value) {
    return Stream(Rule([v = std::move(value)](const std::deque<T>&) -> std::optional<T> { return v; }));
  }

  /// Lazy elementwise transform; f receives (term, index).
  template <class F>
  auto map(F f) const -> Stream<std::invoke_result_t<F, const T&, std::size_t>> {
    using U = std::invoke_result_t<F, const T&, std::size_t>;
    return Stream<U>(typename Stream<U>::Rule(
        [src = *this, f = std::move(f)](const std::deque<U>& prefix) -> std::optional<U> {
          auto i = prefix.size();
          if (!src.has(i)) return std::nullopt;
          return f(src[i], i);
        }));
  }

  bool has(std::size_t index) const { return fill(index + 1); }

  const T& operator[](std::size_t index) const {
    if (!fill(index + 1)) {
      throw StreamExhausted(index, "stream exhausted at index " + std::to_string(index));
    }
    std::shared_lock lock(state_->mutex);
    return state_->cache[index];
  }

  /// Up to `count` leading terms (fewer if the stream is finite and shorter).
  std::vector<T> take(std::size_t count) const {
    fill(count);
    std::shared_lock lock(state_->mutex);
    auto n = std::min(count, state_->cache.size());
    return std::vector<T>(state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(n));
  }

  /// Number of terms computed so far.
  std::size_t known() const {
    std::shared_lock lock(state_->mutex);
    return state_->cache.size();
  }

private:
  struct State {
    mutable std::shared_mutex mutex;
    std::deque<T> cache;
    Rule rule;
    bool ended = false;
    std::exception_ptr error;
  };

  // Ensures at least `count` terms are cached; false if the stream ends first.
  bool fill(std::size_t count) const {
    {
      std::shared_lock lock(state_->mutex);
      if (state_->cache.size() >= count) return true;
      if (state_->error) std::rethrow_exception(state_->error);
      if (state_->ended) return false;
    }
    std::unique_lock lock(state_->mutex);
    while (state_->cache.size() < count) {
      if (state_->error) std::rethrow_exception(state_->error);
      if (state_->ended) return false;
      std::optional<T> next;
      try {
        next = state_->rule(state_->cache);
      } catch (...) {
        // The rule may hold running state; a failed step poisons the stream.
        state_->error = std::current_exception();
        throw;
      }
      if (!next) {
        state_->ended = true;
        return false;
      }
      state_->cache.push_back(std::move(*next));
    }
    return true;
  }

  std::shared_ptr<State> state_;
};

}  // namespace altcf
