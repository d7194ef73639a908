#pragma once

// Experiment runner: a closed registry of checkable claims, each expanding to
// a list of instances that run concurrently and are assembled into one
// deterministic JSON report.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rigidlab/errors.hpp"
#include "rigidlab/random.hpp"
#include "rigidlab/report.hpp"

namespace rigidlab {

/// pass: the checked statement holds exactly.  fail: an exact statement is
/// violated.  warn: only probabilistic evidence (a generic-sampling negative)
/// stands against the statement.
enum class Status { pass, warn, fail };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::warn: return "warn";
    case Status::fail: return "fail";
  }
  return "fail";
}

struct InstanceResult {
  Status status = Status::pass;
  Json data = Json::object();
};

struct RunContext {
  std::uint64_t seed = 0;  ///< instance seed, derived from the spec seed
  int trials = 3;
};

struct Instance {
  std::string key;
  std::function<InstanceResult(const RunContext&)> run;
};

struct Claim {
  std::string id;
  std::string statement;
  std::string corpus;
  /// Instances for the given trial budget.
  std::function<std::vector<Instance>(int trials)> instances;
};

struct ExperimentSpec {
  std::string name;
  std::string claim;
  std::uint64_t seed = 0;
  int trials = 3;
  std::optional<std::string> output;
};

struct RunOutcome {
  Json report;
  std::size_t passed = 0, warned = 0, failed = 0;

  Status verdict() const { return failed ? Status::fail : warned ? Status::warn : Status::pass; }
  /// 0 unless an exact claim failed.
  int exit_code() const { return failed ? 1 : 0; }
};

/// Worker count: RIGIDLAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("RIGIDLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs `tasks` on up to `workers` threads; results keep task order.
inline std::vector<InstanceResult> run_parallel(const std::vector<Instance>& tasks,
                                                const std::vector<RunContext>& contexts, unsigned workers) {
  std::vector<InstanceResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run(contexts[i]);
      } catch (const std::exception& e) {
        results[i].status = Status::fail;
        results[i].data = Json::object();
        results[i].data["error"] = e.what();
      }
    }
  };
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    work();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

inline RunOutcome run_claim(const Claim& claim, std::uint64_t seed, int trials, unsigned workers = worker_count()) {
  if (trials < 1) throw UsageError("trials must be >= 1");
  auto tasks = claim.instances(trials);
  std::vector<RunContext> contexts;
  for (std::size_t i = 0; i < tasks.size(); ++i) contexts.push_back({derive_seed(seed, i), trials});
  auto results = run_parallel(tasks, contexts, workers);

  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tasks[a].key < tasks[b].key; });

  RunOutcome out;
  Json instances = Json::array();
  for (std::size_t i : order) {
    Json entry;
    entry["key"] = tasks[i].key;
    entry["status"] = status_name(results[i].status);
    entry["seed"] = contexts[i].seed;
    entry["data"] = results[i].data;
    instances.push_back(std::move(entry));
    switch (results[i].status) {
      case Status::pass: ++out.passed; break;
      case Status::warn: ++out.warned; break;
      case Status::fail: ++out.failed; break;
    }
  }
  Json& r = out.report;
  r["schema"] = kReportSchema;
  r["claim"] = claim.id;
  r["statement"] = claim.statement;
  r["corpus"] = claim.corpus;
  r["seed"] = seed;
  r["trials"] = trials;
  r["verdict"] = status_name(out.verdict());
  r["summary"] = {{"instances", tasks.size()}, {"pass", out.passed}, {"warn", out.warned}, {"fail", out.failed}};
  r["instances"] = std::move(instances);
  return out;
}

}  // namespace rigidlab
