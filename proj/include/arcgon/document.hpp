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

#ifndef ARCGON_DOCUMENT_HPP
#define ARCGON_DOCUMENT_HPP

#include <string>

#include "arcgon/arc_set.hpp"

namespace arcgon {

/// Reads the line-oriented arc-set format:
///
///   order finite N | order threads K
///   arc P P
///   family {(T, E), (T, E)} for n in [LO, HI] exclude {I, ...}
///
/// where P is an index on a finite order and (T, E) a threaded point, E an
/// integer or [-]n [+|- INT]. '#' starts a comment. Throws ParseError for
/// malformed text and SemanticError for text that describes no valid set.
SymbolicArcSet parse_document(const std::string& text);

/// The canonical text of a set; parse_document inverts it.
std::string print_document(const SymbolicArcSet& s);

}  // namespace arcgon

#endif  // ARCGON_DOCUMENT_HPP
