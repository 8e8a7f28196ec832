#pragma once

#include <string>

#include "sgb/boost.hpp"

namespace sgb {

// Model document: a single JSON object holding config, standardization
// metadata, the learner registry (columns, target df, lambda), offset, trace
// records, and final coefficients. Numbers round-trip at full binary
// precision. Design values are not stored, so deserialized models carry a
// learner registry without blocks.
std::string model_to_json(const BoostModel& model);
BoostModel model_from_json(const std::string& text);

void save_model(const BoostModel& model, const std::string& path);
BoostModel load_model(const std::string& path);

}  // namespace sgb
