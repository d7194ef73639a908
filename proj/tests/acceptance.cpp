// Acceptance run: one [PASS]/[FAIL] line per criterion 1-10.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "rigidlab/claims.hpp"

namespace {

using namespace rigidlab;

constexpr std::uint64_t kSeed = 0;
constexpr int kTrials = 3;

Json run(const std::string& id) { return run_claim(find_claim(id), kSeed, kTrials).report; }

const Json* instance(const Json& report, const std::string& key) {
  for (const auto& i : report["instances"])
    if (i["key"] == key) return &i;
  return nullptr;
}

bool passed(const Json& report) { return report["verdict"] == "pass"; }

struct Check {
  int number;
  std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> criterion4() {
  const std::vector<std::pair<std::string, std::string>> wanted{
      {"thm-7.1", "complex=cross3,a=(1,1,1)"},
      {"thm-6.1", "complex=cross4,a=(2,2)"},
      {"thm-7.3", "complex=cross4,a=(1,1,1,1)"},
      {"thm-6.1", "complex=cross-sum(5,10),a=(2,3)"}};
  std::string detail;
  bool ok = true;
  std::map<std::string, Json> reports;
  for (const auto& [id, key] : wanted) {
    if (!reports.count(id)) reports[id] = run(id);
    const Json* i = instance(reports[id], key);
    const bool hit = i && (*i)["status"] == "pass" && (*i)["data"]["verdict"]["rigid"] == true &&
                     (*i)["data"]["verdict"]["trials"].get<int>() <= 3;
    ok = ok && hit;
    detail += (detail.empty() ? "" : "; ") + id + " " + key + (hit ? " witness" : " NO WITNESS");
  }
  return {ok, detail};
}

std::pair<bool, std::string> criterion10() {
  std::size_t claims = 0;
  for (const auto& c : claim_registry()) {
    if (c.id == "determinism") continue;
    const auto a = run_claim(c, kSeed, kTrials, 1).report.dump();
    const auto b = run_claim(c, kSeed, kTrials, 2).report.dump();
    if (a != b) return {false, c.id + " differs between runs"};
    ++claims;
  }
  const bool det = passed(run("determinism"));
  return {det, std::to_string(claims) + " claims byte-identical at 1 and 2 workers"};
}

}  // namespace

int main() {
  const std::vector<Check> checks{
      {1, [] {
         const auto r = run("cross-sum-equality");
         return std::pair{passed(r), "2h2 = (d-1)h1 on " + r["summary"]["instances"].dump() + " spheres"};
       }},
      {2, [] {
         const auto r = run("cor-4.3");
         const bool ok = passed(r) && r["summary"]["instances"] == 30;
         return std::pair{ok, "balanced inequality on " + r["summary"]["instances"].dump() + " spheres"};
       }},
      {3, [] {
         const auto r = run("thm-4.1");
         std::size_t n = 0;
         bool ok = true;
         for (const auto& i : r["instances"]) {
           const std::string key = i["key"];
           const bool target = key.rfind("complex=cross4,", 0) == 0 || key.rfind("complex=cross-sum(4,12),", 0) == 0;
           if (!target || i["data"]["T"].size() != 3) continue;
           ++n;
           ok = ok && i["status"] == "pass" && i["data"]["verdict"]["max_rank"] == i["data"]["target_rank"];
         }
         return std::pair{ok && n == 8, std::to_string(n) + " rank-selected subcomplexes at rank 3f0-6"};
       }},
      {4, criterion4},
      {5, [] {
         const auto r = run("example-7.4");
         std::size_t n = 0;
         bool ok = true;
         for (const auto& i : r["instances"]) {
           if (std::string(i["key"]).rfind("d=3,", 0) != 0) continue;
           ++n;
           ok = ok && i["status"] == "pass" && i["data"]["samples"].size() >= 5;
         }
         return std::pair{ok && n == 3, "flexible with stress bound at 5 samples for " + std::to_string(n) + " sizes"};
       }},
      {6, [] {
         const auto r = run("cor-5.3");
         std::size_t n = 0;
         bool ok = true;
         for (const char* key : {"complex=cross3,a=(1,1,1)", "complex=cross4,a=(2,2)", "complex=stacked(3,7),a=(3)",
                                 "complex=cross-sum(3,9),a=(1,1,1)"}) {
           const Json* i = instance(r, key);
           const bool hit = i && (*i)["status"] == "pass" && (*i)["data"]["dim1_eq_h1"] == true &&
                            (*i)["data"]["dim2_eq_h2"] == true;
           ok = ok && hit;
           n += hit ? 1 : 0;
         }
         return std::pair{ok && passed(r), std::to_string(n) + "/4 complexes with dim1 = h1, dim2 = h2"};
       }},
      {7, [] {
         const auto r = run("lemma-6.2-oracle");
         bool ok = passed(r);
         for (const auto& i : r["instances"]) ok = ok && i["data"]["pairs"].get<int>() >= 1000;
         return std::pair{ok, "Hall vs exact rank, 3 dimensions x 1000 pairs x 3 seeds"};
       }},
      {8, [] {
         const auto r = run("lemma-2.3-equivalence");
         bool ok = passed(r);
         std::string detail;
         for (const auto& i : r["instances"]) {
           ok = ok && i["data"]["cases"] == 100 && i["data"]["agree"] == 100;
           detail += std::string(i["key"]) + ": " + i["data"]["rigid_cases"].dump() + " rigid/" +
                     i["data"]["flexible_cases"].dump() + " flexible; ";
         }
         return std::pair{ok, detail + "100% agreement"};
       }},
      {9, [] {
         const auto a = run("minimal-cycle-oracle"), b = run("lemma-3.1");
         return std::pair{passed(a) && passed(b), a["summary"]["instances"].dump() + " oracle complexes, " +
                                                      b["summary"]["instances"].dump() + " pseudomanifolds"};
       }},
      {10, criterion10},
  };

  int failures = 0;
  for (const auto& c : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      std::tie(ok, detail) = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 60.0;
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << detail << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
