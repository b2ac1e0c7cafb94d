#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ddm/qdouble.hpp"

namespace ddm {

/// "e:chi1", "e:rho3", "yn:chi2", "yn:rho5", "M2,3", "Mx:0,1", "Mxy:1,0".
std::string label_to_string(const WeightLabel& label);
/// Parses and validates a label for this modulus. Throws ParseError / DomainError.
WeightLabel parse_label(const Dihedral& g, std::string_view text);

/// "(i1,k1),(i2,k2)"; the empty set prints as "".
std::string index_set_to_string(const IndexSet& I);
IndexSet parse_index_set(const Dihedral& g, std::string_view text);

nlohmann::json character_to_json(const Dihedral& g, const GradedCharacter& c);
GradedCharacter character_from_json(const Dihedral& g, const nlohmann::json& j);

/// One line per layer: degree, dimension and the summands.
std::string character_table(const Dihedral& g, const GradedCharacter& c);

}  // namespace ddm
