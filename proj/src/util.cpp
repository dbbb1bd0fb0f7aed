#include <cstdlib>
#include <string>
#include <thread>

#include "grpx/error.hpp"
#include "grpx/group.hpp"
#include "grpx/parallel.hpp"
#include "grpx/search.hpp"

namespace grpx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorCode::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::FaceBudgetExceeded: return "FaceBudgetExceeded";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CacheVersionMismatch: return "CacheVersionMismatch";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::optional<unsigned long long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::uint64_t default_budget() {
  if (auto v = env_number("GRPX_BUDGET"); v && *v > 0) return *v;
  return 100'000'000ULL;
}

unsigned thread_count() {
  if (auto v = env_number("GRPX_THREADS"); v && *v > 0) return static_cast<unsigned>(*v);
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = prime_factors(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace grpx
