// Copyright 2026 The hrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HRT_MODULE_JSON_HPP
#define HRT_MODULE_JSON_HPP

#include <string>

#include <hrt/json.hpp>
#include <hrt/monomial.hpp>

namespace hrt
{

// Module description format:
//
//   { "n": 3, "degrees": [0, 1], "components": [ [[2,0,0]], [] ] }
//
// one list of generator exponent vectors per component.

/// Throws input_error naming the offending field.
MonomialModule module_from_json(const Json &doc);

Json module_to_json(const MonomialModule &module);

/// Reads and parses a module description file; unreadable files and JSON
/// syntax errors are reported as input_error too.
MonomialModule read_module_file(const std::string &path);

} // namespace hrt

#endif
