#ifndef QHOPF_SERIALIZE_HPP
#define QHOPF_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>

#include "qhopf/fock.hpp"

namespace qhopf {

// Golden-file format: SpaceDescriptor header plus flat row-major arrays of
// [re, im] pairs.
nlohmann::json to_json(const SpaceDescriptor& space);
nlohmann::json to_json(const Operator& op);
nlohmann::json to_json(const StateVector& state);

SpaceDescriptor space_from_json(const nlohmann::json& j);
Operator operator_from_json(const nlohmann::json& j);
StateVector state_from_json(const nlohmann::json& j);

}  // namespace qhopf

#endif
