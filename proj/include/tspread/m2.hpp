#pragma once

#include <optional>
#include <string>

#include "tspread/betti.hpp"
#include "tspread/primary_decomp.hpp"

namespace tspread {

/// Self-checking Macaulay2 script: defines the segment ideal, asserts the
/// computed decomposition intersects back to it, and (when a table is
/// given) asserts the graded Betti numbers.
std::string m2_script(const LexsegmentSpec& spec, const MonomialIdeal& I,
                      const PrimeDecomposition& dec,
                      const std::optional<BettiTable>& betti);

}  // namespace tspread
