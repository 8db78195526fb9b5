#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcritic {

// Violated precondition, bad shape, malformed input. CLI maps this to exit 2.
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf detected in a computation. CLI maps this to exit 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail_contract(const std::string& msg) {
  throw contract_error(msg);
}

[[noreturn]] inline void fail_numeric(const std::string& msg) {
  throw numeric_error(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail_contract(msg);
}

// MC_DEBUG_NAN=1 enables per-op NaN screening of tape values.
bool debug_nan_enabled();

// Worker count for the few parallel fan-outs; min(hardware, MC_THREADS).
std::size_t worker_count();

}  // namespace mcritic
