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

#include "doctest.h"
#include "properties.hpp"

using namespace cpopt::testing;

TEST_CASE("structural invariants over 500 random trials") {
    const PropertyWorst w = run_property_trials(500, 2026);
    CHECK(w.partial_trace < 1e-12);
    CHECK(w.sqrt_square < 1e-10);
    CHECK(w.kraus_round_trip < 1e-9);
    CHECK(w.dilation < 1e-10);
    CHECK(w.iterate_trace < 1e-9);
    CHECK(w.iterate_min_eig >= -1e-10);
}

TEST_CASE("invariants hold for a second seed") {
    CHECK(property_pass(run_property_trials(100, 77)));
}
