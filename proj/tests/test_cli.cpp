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

#include <cmath>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "cpopt/channel.hpp"
#include "cpopt/io.hpp"
#include "cpopt/models.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cpopt;
using cpopt::testing::slurp;
using cpopt::testing::temp_path;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) lines.push_back(l);
    return lines;
}

}  // namespace

TEST_CASE("solve prints the summary line and writes the result") {
    const auto path = temp_path("chi").string();
    const Outcome o = invoke({"solve", "--model", "unot", "--copies", "1", "--out", path});
    CHECK(o.code == 0);
    CHECK(o.out.rfind("F = 0.6666666667  bound = 0.6666666667  iters = ", 0) == 0);
    CHECK(o.out.find("converged = true") != std::string::npos);
    const io::json j = io::read_json(path);
    CHECK(j["converged"] == true);
    CHECK(j["chi"]["dim_in"] == 2);
}

TEST_CASE("bound") {
    const Outcome o = invoke({"bound", "--model", "cloner", "--copies", "3"});
    CHECK(o.code == 0);
    CHECK(o.out == "bound = 0.5\n");
}

TEST_CASE("usage errors exit with 2 and one error line") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{}, {"solve"}, {"solve", "--model", "teleporter"}, {"solve", "--model", "cloner", "--copies", "0"},
          {"bogus"}, {"apply", "--chi", "x.json", "--state", "1"}, {"solve", "--model", "unot", "--init", "random:x"},
          {"scan", "--model", "unot", "--from", "0", "--to", "1", "--steps", "3", "--csv", "/dev/null"},
          {"kraus", "--chi", "/nonexistent/chi.json"}}) {
        const Outcome o = invoke(args);
        CAPTURE(o.err);
        CHECK(o.code == 2);
        CHECK(o.err.rfind("error: ", 0) == 0);
        CHECK(split_lines(o.err).size() == 1);
    }
}

TEST_CASE("help exits cleanly") {
    const Outcome o = invoke({"--help"});
    CHECK(o.code == 0);
    CHECK(o.out.find("solve") != std::string::npos);
}

TEST_CASE("numerical failures exit with 3") {
    const auto path = temp_path("bad").string();
    ComplexMatrix m = ChoiOperator::identity(2).matrix();
    m *= 2.0;
    io::write_json(path, io::to_json(ChoiOperator(2, 2, m)));
    const Outcome o = invoke({"kraus", "--chi", path});
    CHECK(o.code == 3);
    CHECK(o.err.rfind("error: InvalidChoi", 0) == 0);
}

TEST_CASE("strict non-convergence exits with 4") {
    const Outcome o = invoke({"solve", "--model", "entangler-a", "--max-iters", "3", "--strict"});
    CHECK(o.code == 4);
    CHECK(o.out.find("converged = false") != std::string::npos);
    CHECK(invoke({"solve", "--model", "entangler-a", "--max-iters", "3"}).code == 0);
}

TEST_CASE("apply after solve matches the in-process channel") {
    const auto path = temp_path("chi").string();
    REQUIRE(invoke({"solve", "--model", "unot", "--copies", "1", "--out", path}).code == 0);
    const auto rho_path = temp_path("rho").string();
    REQUIRE(invoke({"apply", "--chi", path, "--state", "0.7,1.2", "--out", rho_path}).code == 0);
    const ComplexMatrix from_cli = io::matrix_from_json(io::read_json(rho_path));
    const ChoiOperator chi = io::choi_from_json(io::read_json(path)["chi"]);
    const DensityMatrix direct = apply(chi, DensityMatrix::pure(bloch_state(0.7, 1.2)));
    CHECK(max_abs_diff(from_cli, direct.matrix) < 1e-12);

    const auto in_path = temp_path("in").string();
    io::write_json(in_path, io::to_json(DensityMatrix::max_mixed(2).matrix));
    const Outcome o = invoke({"apply", "--chi", path, "--rho", in_path});
    CHECK(o.code == 0);
    CHECK(max_abs_diff(io::matrix_from_json(io::json::parse(o.out)), ComplexMatrix::identity(2) * cplx(0.5)) < 1e-15);
}

TEST_CASE("quadrature and analytic targets agree through the CLI") {
    for (const std::vector<std::string>& model :
         {std::vector<std::string>{"--model", "cloner", "--copies", "4"}, {"--model", "unot", "--copies", "2"},
          {"--model", "entangler-a"}, {"--model", "shifter", "--alpha", "1.3"}}) {
        std::vector<std::string> a{"rmatrix"}, q{"rmatrix", "--quadrature"};
        a.insert(a.end(), model.begin(), model.end());
        q.insert(q.end(), model.begin(), model.end());
        const Outcome oa = invoke(a), oq = invoke(q);
        REQUIRE(oa.code == 0);
        REQUIRE(oq.code == 0);
        const ComplexMatrix ra = io::matrix_from_json(io::json::parse(oa.out));
        const ComplexMatrix rq = io::matrix_from_json(io::json::parse(oq.out));
        CHECK(max_abs_diff(ra, rq) < 1e-10);
    }
    const auto path = temp_path("r").string();
    const Outcome o = invoke({"rmatrix", "--model", "cloner", "--nodes-theta", "30", "--nodes-phi", "9", "--out", path});
    CHECK(o.out.find("nodes_theta = 30  nodes_phi = 9") != std::string::npos);
    CHECK(invoke({"solve", "--r", path}).out.rfind("F = 1.0000000000", 0) == 0);
    CHECK(invoke({"bound", "--r", path, "--model", "cloner"}).code == 2);
}

TEST_CASE("identical invocations give identical files") {
    const auto a = temp_path("a").string(), b = temp_path("b").string();
    REQUIRE(invoke({"solve", "--model", "cloner", "--copies", "2", "--init", "random:9", "--out", a}).code == 0);
    REQUIRE(invoke({"solve", "--model", "cloner", "--copies", "2", "--init", "random:9", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto c = temp_path("c").string(), d = temp_path("d").string();
    REQUIRE(invoke({"scan", "--model", "shifter", "--from", "0", "--to", "3", "--steps", "17", "--jobs", "1", "--csv", c}).code == 0);
    REQUIRE(invoke({"scan", "--model", "shifter", "--from", "0", "--to", "3", "--steps", "17", "--jobs", "4", "--csv", d}).code == 0);
    CHECK(slurp(c) == slurp(d));
}

TEST_CASE("scan hits (4+pi)/8 at alpha = pi/2") {
    const auto path = temp_path("scan").string();
    const Outcome o = invoke({"scan", "--model", "shifter", "--from", "0", "--to", "3.14159265", "--steps", "101", "--csv", path});
    REQUIRE(o.code == 0);
    const auto lines = split_lines(slurp(path));
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] == "alpha,beta_opt,F_solver,F_closed,F_bound");
    std::istringstream row(lines[51]);
    std::vector<double> cols;
    for (std::string cell; std::getline(row, cell, ',');) cols.push_back(std::stod(cell));
    CHECK(std::abs(cols[0] - std::numbers::pi / 2) < 1e-8);
    CHECK(std::abs(cols[2] - 0.892699) < 1e-6);
}

TEST_CASE("kraus, dilate, curve and validate") {
    const auto chi = temp_path("chi").string();
    REQUIRE(invoke({"solve", "--model", "entangler-a", "--out", chi}).code == 0);
    const Outcome k = invoke({"kraus", "--chi", chi});
    CHECK(k.code == 0);
    CHECK(io::kraus_from_json(io::json::parse(k.out)).count() == 1);
    const Outcome d = invoke({"dilate", "--chi", chi});
    CHECK(d.code == 0);
    CHECK(io::matrix_from_json(io::json::parse(d.out)).rows() == 4);
    const auto csv = temp_path("curve").string();
    const Outcome c = invoke({"curve", "--model", "entangler-a", "--chi", chi, "--steps", "181", "--csv", csv});
    CHECK(c.code == 0);
    CHECK(c.out.find("min F = 0.97056") != std::string::npos);
    CHECK(split_lines(slurp(csv)).size() == 182);
    const Outcome v = invoke({"validate", "--chi", chi, "--model", "entangler-a", "--samples", "20000", "--seed", "4"});
    CHECK(v.code == 0);
    CHECK(v.out.find("agree = true") != std::string::npos);
    CHECK(invoke({"validate", "--chi", chi, "--model", "unot", "--copies", "3"}).code == 2);
}
