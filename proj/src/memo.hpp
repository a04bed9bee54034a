#pragma once

#include <future>
#include <mutex>
#include <string>
#include <unordered_map>

#include "wslab/polynomial.hpp"
#include "wslab/rational.hpp"

namespace wslab::detail {

/* Process-wide single-flight memo table: the first caller for a key computes,
 * concurrent callers for the same key wait on the shared future. Safe because
 * every recursive evaluator only recurses into strictly smaller diagrams, so
 * a computation never waits on its own key. */
template <typename T>
class MemoTable {
  public:
    template <typename Fn>
    T get_or_compute(const std::string& key, Fn&& fn) {
        std::promise<T> promise;
        std::shared_future<T> future;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = entries_.find(key);
            if (it == entries_.end()) {
                future = promise.get_future().share();
                entries_.emplace(key, future);
                owner = true;
            } else {
                future = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(fn());
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    }

  private:
    std::mutex mutex_;
    std::unordered_map<std::string, std::shared_future<T>> entries_;
};

/* Shared tables by function name (see WeightFunction's cache contract). */
MemoTable<Polynomial>& poly_memo(const std::string& name);
MemoTable<Rational>& scalar_memo(const std::string& name);

}  // namespace wslab::detail
