#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ppart::render {

/// "t^2*q" style product; empty string for the unit monomial.
std::string monomial(const std::vector<std::pair<std::string, int>>& powers);

/// Appends one signed term to a sum under construction. `magnitude` is the
/// absolute coefficient already rendered ("3", "1/3"); a unit magnitude is
/// dropped unless the monomial is empty.
void append_term(std::string& out, bool negative, const std::string& magnitude,
                 const std::string& mono);

}  // namespace ppart::render
