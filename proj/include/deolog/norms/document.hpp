/*
 *  Copyright (C) 2026  deolog contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include "deolog/norms/system.hpp"

namespace deolog::norms {

struct SchemaError : asp::Error {
  SchemaError(std::string message, std::string location);
  std::string location;
};

/// Parse the JSON norm-spec document format (sections: norms,
/// preferences, equivalences, incompatible, dependencies, actions,
/// rules, facts). See docs/norm-spec.md for the schema. Throws
/// SchemaError with a JSON-pointer-style location on any deviation.
NormativeSystem parse_norm_spec(const std::string& json_text);

}  // namespace deolog::norms
