#pragma once

#include "tspread/betti.hpp"
#include "tspread/lexsegment.hpp"

namespace tspread {

/// pd/depth/dim/height report for any spec: closed forms where the shape
/// has one (initial, final, completely-with-linear-resolution, terminal
/// forms), the homology oracle otherwise (within its cap). Normalization
/// replay: restriction shifts dim and depth by the offset; a stripped
/// shared variable pins dim to n-1 and height to 1.
InvariantReport invariant_report_for(const LexsegmentSpec& spec);

}  // namespace tspread
