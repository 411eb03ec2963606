#pragma once

#include <string>
#include <vector>

#include "appell/identities.hpp"

namespace appell {

// Serializers for CheckReport lists. All three are byte-deterministic
// given the same report list.
std::string render_reports_json(const std::string& suite,
                                const std::vector<CheckReport>& reports);
std::string render_reports_csv(const std::vector<CheckReport>& reports);
std::string render_reports_text(const std::vector<CheckReport>& reports);

}  // namespace appell
