#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpa/bvp.hpp"
#include "mpa/synthesis.hpp"
#include "mpa/verification.hpp"

namespace mpa {

using Json = nlohmann::ordered_json;

/// 17 significant digits, so values round-trip exactly.
std::string format_double(double value);

/// Indented JSON with floating values printed by format_double and
/// non-finite values as null. Keys keep insertion order.
std::string dump_json(const Json& value);

Json policy_json(const HarvestPolicy& policy);

/// `boundary` is the physical reserve half-width, when known.
Json solution_json(const OptimalSolution& solution,
                   std::optional<double> boundary = std::nullopt);

Json sweep_summary_json(const SweepResult& result);

void write_state_csv(std::ostream& out, const std::vector<StateSample>& rows);
void write_adjoint_csv(std::ostream& out,
                       const std::vector<AdjointSample>& rows);
void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_pde_csv(std::ostream& out, const std::vector<PdeSample>& rows);

}  // namespace mpa
