#include "loopword/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

namespace lw {

namespace {
constexpr std::size_t kMaxCounterexamples = 10;
}

void Report::check(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++violations;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(describe());
}

void Report::merge(const Report& other) {
  checks += other.checks;
  violations += other.violations;
  for (const auto& c : other.counterexamples)
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::summary() const {
  std::string s = name + ": " + std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
  for (const auto& c : counterexamples) s += "\n  counterexample: " + c;
  for (const auto& n : notes) s += "\n  note: " + n;
  return s;
}

nlohmann::json Report::to_json() const {
  return {{"name", name},         {"passed", passed()}, {"checks", checks},
          {"violations", violations}, {"counterexamples", counterexamples},
          {"notes", notes},       {"seconds", seconds}};
}

unsigned worker_count() {
  if (const char* env = std::getenv("LOOPWORD_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next++;
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lw
