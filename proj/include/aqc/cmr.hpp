// Copyright 2026 The aqcc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQC_CMR_HPP_INCLUDED
#define AQC_CMR_HPP_INCLUDED

#include <cstdint>
#include <optional>

#include "aqc/embedding.hpp"
#include "aqc/graph.hpp"

namespace aqc {

/// Probabilistic shortest-path embedding baseline. Each try places the first
/// two program vertices (in a fresh random order) at random distinct hardware
/// vertices and joins them by a shortest path whose interior grows the first
/// chain; every further vertex gets a random free root and routes a shortest
/// path from that root to each already-embedded neighbor's chain, avoiding
/// all other chains and absorbing interior vertices. A try fails as soon as
/// any routing fails; the first successful try wins. Returned embeddings
/// always pass verify_minor. Deterministic in (gp, gh, seed, tries); each try
/// draws from its own (seed, try) stream.
std::optional<Embedding> cmr_embed(const Graph& gp, const Graph& gh,
                                   std::uint64_t seed, int tries);

struct CmrStats {
  int tries = 0;
  int successes = 0;
  int first_success = -1;  // -1 when every try failed
};

/// Run all tries (no early stop) and report per-try statistics.
CmrStats cmr_embed_stats(const Graph& gp, const Graph& gh, std::uint64_t seed,
                         int tries);

}  // namespace aqc

#endif  // AQC_CMR_HPP_INCLUDED
