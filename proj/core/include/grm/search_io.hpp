#pragma once

#include <string>

#include "grm/coset_search.hpp"

namespace grm {

// Report JSON with sorted keys:
//   {checksum, complete, cosets_examined, elapsed_ms, m, q, shard_index,
//    shards, space, survivors: [{distance, poly}], threshold}
// elapsed_ms is null unless include_elapsed. include_state adds what a resume
// needs: the digit listing, fixed part, symmetry flag, next_block and the
// survivors' odometer indices.
std::string report_to_json(const SearchReport& report, bool include_elapsed, bool include_state);

// Inverse of report_to_json(report, *, true).
SearchReport report_from_json(const std::string& text);

}  // namespace grm
