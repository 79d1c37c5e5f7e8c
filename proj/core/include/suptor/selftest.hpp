#pragma once

// Property grid over every module, deterministic for a fixed seed.

#include <cstdint>

#include <nlohmann/json.hpp>

namespace suptor {

/// {"seed", "checks": [{"name", "cases", "failures", "passed"}], "passed"}.
nlohmann::json run_selftest(std::uint64_t seed);

} // namespace suptor
