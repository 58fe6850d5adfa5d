#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbpieri/dag.hpp"
#include "hilbpieri/pieri.hpp"

namespace hilb {

using Json = nlohmann::json;

// Partitions serialize as arrays of descending integers; empty as [].
// nlohmann::json objects keep keys sorted, so dump() output is canonical.

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const MSTriple& t);
MSTriple triple_from_json(const Json& j);

/// {"n", "input": {a,b,c}, "terms": [{a,b,c,coef}], "stats": {...}}
Json to_json(const PieriRow& row);
PieriRow row_from_json(const Json& j);

/// {"n", "rows": [...]}
Json matrix_to_json(int n, const std::vector<PieriRow>& rows);
std::vector<PieriRow> matrix_from_json(const Json& j);

/// {m, i, allowed: [{lam, sum}], excluded: [{lam, sum}], pass}
Json to_json(const ConjectureReport& r);

/// "+ 3 (0,(3),(2,1))" lines, one term per line.
std::string to_text(const PieriRow& row);
/// H \cdot \sigma_{...} = 3\sigma_{...} - 2\sigma_{...}
std::string to_latex(const PieriRow& row);

/// Canonical byte form used for files and determinism checks.
std::string dump_canonical(const Json& j);

}  // namespace hilb
