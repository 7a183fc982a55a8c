#pragma once

#include <span>

#include "maxwell11/identities.hpp"
#include "maxwell11/momenta.hpp"

namespace mx11 {

/// Momentum-space identity suite, aggregated over the given cases: every
/// named check scans all cases and keeps the first violation as witness.
std::vector<CheckResult> momentum_suite(const RepresentationSet& rep,
                                        std::span<const MomentumCase> cases);

/// Agreement between the constructive formulas and the independent
/// row-reduction oracle: kernel dimensions, ranks, spans, minimal
/// polynomials, traces.
std::vector<CheckResult> oracle_suite(const RepresentationSet& rep,
                                      std::span<const MomentumCase> cases);

/// Pure-state (dyad) extraction facts.
std::vector<CheckResult> dyad_suite(const RepresentationSet& rep,
                                    std::span<const MomentumCase> cases);

/// Structural suites plus all momentum-space suites, deterministic order.
std::vector<CheckResult> run_verification(const RepresentationSet& rep,
                                          std::span<const MomentumCase> cases);

}  // namespace mx11
