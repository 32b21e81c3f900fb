// Copyright 2026 The arcgon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARCGON_RENDER_HPP
#define ARCGON_RENDER_HPP

#include <cstdint>
#include <string>

#include "arcgon/arc_set.hpp"
#include "arcgon/cluster_algebra.hpp"

namespace arcgon {

/// SVG 1.1 chord diagram of the members visible in the window [-w, w].
/// Output depends only on the inputs.
std::string render_svg(const SymbolicArcSet& s, std::int64_t window);

/// The exchange graph in DOT, vertices labelled by their sorted arc lists.
std::string render_dot(const ExchangeGraph& g);

/// The property table of the eleven builtin examples and the
/// exchangeability row of the maximal ones.
std::string examples_table();

/// Every builtin example as a document, followed by the table.
std::string examples_listing();

}  // namespace arcgon

#endif  // ARCGON_RENDER_HPP
