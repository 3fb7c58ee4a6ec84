#pragma once

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "aes/zoo.hpp"

namespace aes {

struct CheckResult {
    std::string name;
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// commutators, eigen-residuals, reductions, uncertainty, kummer-duality
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name);
std::vector<SuiteReport> run_all();

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const SuiteReport& r);

// every family of the zoo, by its command-line name
const std::vector<std::string>& family_names();
// desk-scale draw (s <= 0.75, |upsilon|, |z| <= 1.5)
StateBundle random_state(const std::string& family, std::mt19937_64& rng, const FockOptions& opts = {});

}  // namespace aes
