#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

namespace lw {

// Outcome of a verification sweep.
struct Report {
  std::string name;
  long checks = 0;
  long violations = 0;
  std::vector<std::string> counterexamples;  // first few only
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return violations == 0; }
  void check(bool ok, const std::function<std::string()>& describe);
  void merge(const Report& other);
  std::string summary() const;
  nlohmann::json to_json() const;
};

// Thread-safe accumulation for sweeps that fan out over a worker pool.
class ReportSink {
 public:
  explicit ReportSink(Report& r) : r_(r) {}
  void merge(const Report& part) {
    std::lock_guard<std::mutex> g(m_);
    r_.merge(part);
  }

 private:
  Report& r_;
  std::mutex m_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Worker count from LOOPWORD_WORKERS, defaulting to the hardware count.
unsigned worker_count();
// Runs body(i) for i in [0, n) on worker_count() threads. Exceptions are
// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lw
