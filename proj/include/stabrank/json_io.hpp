// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABRANK_JSON_IO_HPP
#define STABRANK_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "stabrank/decomposition.hpp"

namespace stabrank {

using json = nlohmann::json;

inline constexpr int kDecompositionFormatVersion = 1;

/// Malformed or inconsistent JSON input.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const json &j);

/// {n, is_zero, basis:[bits], offset, l, q:[upper-triangular rows, diagonal included], scalar}.
/// l and q are indexed by qubit and act on the amplitude index x.
json state_to_json(const StabilizerState &s);
StabilizerState state_from_json(const json &j);

/// {version, n, terms:[{coeff, state}], target?}. `target` is a free-form description of
/// the state the decomposition claims to represent.
json decomposition_to_json(const Decomposition &d, const json &target = nullptr);
Decomposition decomposition_from_json(const json &j);

void write_json_file(const std::string &path, const json &j);
/// Throws std::runtime_error on I/O failure and JsonFormatError on parse failure.
json read_json_file(const std::string &path);

}  // namespace stabrank

#endif
