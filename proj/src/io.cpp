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

#include "cpopt/io.hpp"

#include <fstream>
#include <sstream>

#include "cpopt/error.hpp"

namespace cpopt::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("field '") + key + "': " + e.what());
    }
}

json operator_json(const ComplexMatrix& m, std::size_t dim_in, std::size_t dim_out, const char* kind) {
    json j = to_json(m);
    j["dim_in"] = dim_in;
    j["dim_out"] = dim_out;
    j["ordering"] = "in_tensor_out";
    j["kind"] = kind;
    return j;
}

void check_kind(const json& j, const char* expected) {
    if (j.contains("ordering") && field<std::string>(j, "ordering") != "in_tensor_out") {
        throw Error(ErrorKind::Parse, "unsupported ordering '" + j["ordering"].get<std::string>() + "'");
    }
    if (j.contains("kind") && field<std::string>(j, "kind") != expected) {
        throw Error(ErrorKind::Parse, "expected kind '" + std::string(expected) + "', got '" +
                                          j["kind"].get<std::string>() + "'");
    }
}

}  // namespace

json to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (const cplx& z : m.data()) data.push_back({z.real(), z.imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json to_json(const ChoiOperator& chi) { return operator_json(chi.matrix(), chi.dim_in(), chi.dim_out(), "choi"); }

json to_json(const TargetOperator& r) {
    json j = operator_json(r.matrix(), r.dim_in(), r.dim_out(), "target");
    j["provenance"] = r.provenance();
    return j;
}

json to_json(const KrausSet& kraus) {
    json ops = json::array();
    for (const ComplexMatrix& a : kraus.operators) ops.push_back(to_json(a));
    return {{"dim_in", kraus.dim_in}, {"dim_out", kraus.dim_out}, {"operators", std::move(ops)}, {"weights", kraus.weights}};
}

json to_json(const SolverResult& result) {
    return {{"fidelity", result.fidelity},
            {"bound", result.bound},
            {"iterations", result.iterations},
            {"converged", result.converged},
            {"stop_reason", result.stop_reason},
            {"fidelity_trace", result.fidelity_trace},
            {"lambda_eigenvalues", result.lambda_eigenvalues},
            {"lambda_min_gap", result.lambda_min_gap},
            {"chi", to_json(result.chi)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const auto rows = field<std::size_t>(j, "rows");
    const auto cols = field<std::size_t>(j, "cols");
    const auto data = field<std::vector<std::vector<double>>>(j, "data");
    if (rows == 0 || cols == 0) throw Error(ErrorKind::Parse, "matrix must be at least 1x1");
    if (data.size() != rows * cols) {
        throw Error(ErrorKind::Parse, "data has " + std::to_string(data.size()) + " entries, expected " +
                                          std::to_string(rows * cols));
    }
    std::vector<cplx> entries;
    entries.reserve(data.size());
    for (const auto& pair : data) {
        if (pair.size() != 2) throw Error(ErrorKind::Parse, "matrix entries must be [re, im] pairs");
        entries.emplace_back(pair[0], pair[1]);
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ChoiOperator choi_from_json(const json& j) {
    check_kind(j, "choi");
    return ChoiOperator(field<std::size_t>(j, "dim_in"), field<std::size_t>(j, "dim_out"), matrix_from_json(j));
}

TargetOperator target_from_json(const json& j) {
    check_kind(j, "target");
    std::string prov = j.contains("provenance") ? field<std::string>(j, "provenance") : std::string("file");
    return TargetOperator(field<std::size_t>(j, "dim_in"), field<std::size_t>(j, "dim_out"), matrix_from_json(j),
                          std::move(prov));
}

KrausSet kraus_from_json(const json& j) {
    KrausSet k;
    k.dim_in = field<std::size_t>(j, "dim_in");
    k.dim_out = field<std::size_t>(j, "dim_out");
    k.weights = field<std::vector<double>>(j, "weights");
    for (const json& op : field<json>(j, "operators")) {
        ComplexMatrix a = matrix_from_json(op);
        if (a.rows() != k.dim_out || a.cols() != k.dim_in) throw Error(ErrorKind::Parse, "Kraus operator has wrong shape");
        k.operators.push_back(std::move(a));
    }
    if (k.weights.size() != k.operators.size()) throw Error(ErrorKind::Parse, "weights and operators differ in count");
    return k;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

}  // namespace cpopt::io
