#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "dcmi/experiments.hpp"
#include "dcmi/mi.hpp"
#include "dcmi/significance.hpp"

namespace dcmi {

// JSON forms carry full double precision; CSV forms use >= 6 significant
// digits. Object keys are sorted, so serialized output is reproducible.

nlohmann::json to_json(const MiEstimate& est);
nlohmann::json to_json(const JsdEstimate& est);
nlohmann::json to_json(const SignificanceReport& rep);
nlohmann::json to_json(const SweepResult& res);
nlohmann::json to_json(const Table1Result& res);

/// `param,mean_mi,std_mi,analytic_mi,null_mean,null_std` rows preceded by
/// `#`-prefixed metadata lines echoing the full spec (seed, factor, grids).
void write_csv(std::ostream& os, const SweepResult& res);
void write_csv(std::ostream& os, const Table1Result& res);

/// Fixed-width text rendering of the per-family significance table.
std::string format_table(const Table1Result& res);

} // namespace dcmi
