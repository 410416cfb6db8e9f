// Copyright 2026 The cpopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// JSON encodings. A matrix is {"rows", "cols", "data": [[re, im], ...]} in
// row-major order; Choi and target operators add "dim_in", "dim_out",
// "ordering": "in_tensor_out" and a "kind" tag. Doubles are written in
// shortest round-trip form, so decode(encode(x)) == x bit for bit.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cpopt/channel.hpp"
#include "cpopt/complex_matrix.hpp"
#include "cpopt/solver.hpp"
#include "cpopt/target.hpp"

namespace cpopt::io {

using nlohmann::json;

json to_json(const ComplexMatrix& m);
json to_json(const ChoiOperator& chi);
json to_json(const TargetOperator& r);
json to_json(const KrausSet& kraus);
json to_json(const SolverResult& result);

ComplexMatrix matrix_from_json(const json& j);
ChoiOperator choi_from_json(const json& j);
TargetOperator target_from_json(const json& j);
KrausSet kraus_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace cpopt::io
