// End-to-end pipeline for one pair (g, p): compute the genus constant, select
// the witness, build and verify the matrix group, solve the local embedding
// obstructions, run the finite Selmer computation, choose auxiliary split
// primes and the local twist datum, and emit everything as a JSON certificate
// whose pass marks a verifier can recompute from the raw data alone.
#pragma once

#include <json.hpp>

#include <string>

#include "cartancert/numeric.hpp"

namespace cartancert {

struct BuildConfig {
  u64 sieve_cap = 20000000;  // cap for all prime searches
};

// Kinds: "construction" (generic pair), "special" ((3,3), order-78 group),
// "exceptional" ((2,2), (2,3), (3,2): no witness exists).
nlohmann::json construct_certificate(u32 g, u64 p, const BuildConfig& config = {});

struct VerifyResult {
  bool pass = false;
  std::string kind;
  std::vector<std::pair<std::string, bool>> checks;
  std::string first_failure;
};

// Recomputes every pass mark from the serialized data: matrices are
// re-multiplied, orders re-counted, congruences re-solved, primes re-tested.
VerifyResult verify_certificate(const nlohmann::json& cert);

}  // namespace cartancert
