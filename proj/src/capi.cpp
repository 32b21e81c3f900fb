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

#include "arcgon/arcgon.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "arcgon/arc_set.hpp"
#include "arcgon/cluster_algebra.hpp"
#include "arcgon/constructions.hpp"
#include "arcgon/document.hpp"
#include "arcgon/errors.hpp"
#include "arcgon/flip.hpp"
#include "arcgon/render.hpp"

struct arcgon_set {
  arcgon::SymbolicArcSet value;
};

namespace {

thread_local std::string last_error;

arcgon_status fail(arcgon_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exception hierarchy onto status codes; most derived
// types first.
template <typename F>
arcgon_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return ARCGON_OK;
  } catch (const arcgon::NotNoncrossing& e) {
    return fail(ARCGON_ERR_NOT_NONCROSSING, e.what());
  } catch (const arcgon::CannotFlip& e) {
    return fail(ARCGON_ERR_CANNOT_FLIP, e.what());
  } catch (const arcgon::NotReachable& e) {
    return fail(ARCGON_ERR_NOT_REACHABLE, e.what());
  } catch (const arcgon::DomainError& e) {
    return fail(ARCGON_ERR_DOMAIN, e.what());
  } catch (const arcgon::OverflowError& e) {
    return fail(ARCGON_ERR_OVERFLOW, e.what());
  } catch (const arcgon::ParseError& e) {
    return fail(ARCGON_ERR_PARSE, e.what());
  } catch (const arcgon::SemanticError& e) {
    return fail(ARCGON_ERR_SEMANTIC, e.what());
  } catch (const arcgon::NotLaurent& e) {
    return fail(ARCGON_ERR_NOT_LAURENT, e.what());
  } catch (const arcgon::Unsupported& e) {
    return fail(ARCGON_ERR_UNSUPPORTED, e.what());
  } catch (const arcgon::InvariantViolation& e) {
    return fail(ARCGON_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARCGON_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARCGON_ERR_INTERNAL, e.what());
  }
}

template <typename... Ts>
bool any_null(const Ts*... ps) {
  return ((ps == nullptr) || ...);
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string header(const arcgon::CyclicOrder& c) {
  return (c.is_finite() ? "order finite " : "order threads ") + std::to_string(c.size()) + "\n";
}

// Reuses the document grammar so arcs read exactly as in files.
arcgon::Arc read_arc(const arcgon::CyclicOrder& c, const char* text) {
  const auto doc = arcgon::parse_document(header(c) + "arc " + text + "\n");
  return *doc.explicit_arcs().begin();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string step_text(const arcgon::CyclicOrder& c, const arcgon::FlipStep& step) {
  const auto& q = step.quadrilateral;
  return "remove " + arcgon::format_arc(c, step.removed) + ", add " +
         arcgon::format_arc(c, step.added) + ", quadrilateral (" + c.format(q[0]) + ", " +
         c.format(q[1]) + ", " + c.format(q[2]) + ", " + c.format(q[3]) + ")";
}

std::string check_report(const arcgon::SymbolicArcSet& s) {
  const auto& c = s.order();
  std::string out;
  const auto nc = arcgon::is_pairwise_noncrossing(s);
  out += "noncrossing: " + yes_no(nc.holds);
  if (nc.witness) {
    out += " (" + arcgon::format_arc(c, nc.witness->first) + " crosses " +
           arcgon::format_arc(c, nc.witness->second) + ")";
  }
  out += "\n";
  if (!nc.holds) {
    return out + "connected: n/a\nmaximal: n/a\ntriangulation: n/a\nlocally finite: n/a\n"
                 "cluster tilting: n/a\n";
  }
  out += "connected: " + yes_no(arcgon::is_connected(s)) + "\n";
  const auto m = arcgon::is_maximal(s);
  out += "maximal: " + yes_no(m.holds);
  if (m.witness) out += " (can add " + arcgon::format_arc(c, *m.witness) + ")";
  out += "\n";
  const auto t = arcgon::is_triangulation(s);
  out += "triangulation: " + yes_no(t.holds);
  if (t.witness) {
    out += " ({" + c.format(t.witness->first) + ", " + c.format(t.witness->second) +
           "} lies in " + std::to_string(t.witness_triangles) + " triangle(s))";
  }
  out += "\n";
  out += "locally finite: " + yes_no(arcgon::is_locally_finite(s)) + "\n";
  out += "cluster tilting: " + yes_no(arcgon::is_cluster_tilting(s)) + "\n";
  return out;
}

template <typename F>
arcgon_status verdict(const arcgon_set* s, int* out, F&& decide) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = decide(s->value) ? 1 : 0; });
}

}  // namespace

extern "C" {

const char* arcgon_last_error(void) { return last_error.c_str(); }

const char* arcgon_status_name(arcgon_status status) {
  switch (status) {
    case ARCGON_OK: return "ok";
    case ARCGON_ERR_NULL_ARGUMENT: return "null argument";
    case ARCGON_ERR_DOMAIN: return "domain error";
    case ARCGON_ERR_OVERFLOW: return "overflow";
    case ARCGON_ERR_PARSE: return "parse error";
    case ARCGON_ERR_SEMANTIC: return "semantic error";
    case ARCGON_ERR_NOT_NONCROSSING: return "not noncrossing";
    case ARCGON_ERR_CANNOT_FLIP: return "cannot flip";
    case ARCGON_ERR_NOT_REACHABLE: return "not reachable";
    case ARCGON_ERR_NOT_LAURENT: return "not Laurent";
    case ARCGON_ERR_UNSUPPORTED: return "unsupported";
    case ARCGON_ERR_INVARIANT: return "invariant violation";
    case ARCGON_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void arcgon_string_free(char* s) { delete[] s; }

arcgon_status arcgon_set_parse(const char* text, arcgon_set** out) {
  if (any_null(text, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new arcgon_set{arcgon::parse_document(text)}; });
}

arcgon_status arcgon_set_builtin(int index, arcgon_set** out) {
  if (any_null(out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new arcgon_set{arcgon::builtin_example(index)}; });
}

arcgon_status arcgon_set_clone(const arcgon_set* s, arcgon_set** out) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new arcgon_set{s->value}; });
}

void arcgon_set_free(arcgon_set* s) { delete s; }

arcgon_status arcgon_set_print(const arcgon_set* s, char** out) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_out(arcgon::print_document(s->value)); });
}

arcgon_status arcgon_set_contains(const arcgon_set* s, const char* arc, int* out) {
  if (any_null(s, out) || arc == nullptr) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = arcgon::contains(s->value, read_arc(s->value.order(), arc)); });
}

arcgon_status arcgon_is_noncrossing(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_pairwise_noncrossing(v).holds; });
}

arcgon_status arcgon_is_connected(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_connected(v); });
}

arcgon_status arcgon_is_maximal(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_maximal(v).holds; });
}

arcgon_status arcgon_is_triangulation(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_triangulation(v).holds; });
}

arcgon_status arcgon_is_locally_finite(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_locally_finite(v); });
}

arcgon_status arcgon_is_cluster_tilting(const arcgon_set* s, int* out) {
  return verdict(s, out, [](const auto& v) { return arcgon::is_cluster_tilting(v); });
}

arcgon_status arcgon_check_report(const arcgon_set* s, char** out) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_out(check_report(s->value)); });
}

arcgon_status arcgon_flip(const arcgon_set* s, const char* arc, arcgon_set** out, char** step) {
  if (any_null(s, out) || arc == nullptr) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& c = s->value.order();
    const arcgon::Arc p = read_arc(c, arc);
    const auto found = arcgon::exchangeable(s->value, p);
    if (!found) throw arcgon::CannotFlip(arcgon::format_arc(c, p) + " lies in fewer than two triangles");
    auto next = std::make_unique<arcgon_set>(arcgon_set{s->value});
    next->value.erase(found->removed);
    next->value.insert(found->added);
    if (step != nullptr) *step = copy_out(step_text(c, *found));
    *out = next.release();
  });
}

arcgon_status arcgon_reach(const arcgon_set* s, const char* arc, arcgon_set** out, char** steps) {
  if (any_null(s, out) || arc == nullptr) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& c = s->value.order();
    const auto seq = arcgon::reach(s->value, read_arc(c, arc));
    auto next = std::make_unique<arcgon_set>(arcgon_set{arcgon::replay(seq)});
    if (steps != nullptr) {
      std::string text;
      for (const auto& st : seq.steps) text += step_text(c, st) + "\n";
      *steps = copy_out(text);
    }
    *out = next.release();
  });
}

arcgon_status arcgon_obtainable(const arcgon_set* s, const char* arc, int* out,
                                int64_t* crossings) {
  if (any_null(s, out) || arc == nullptr) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = arcgon::obtainable(s->value, read_arc(s->value.order(), arc));
    *out = r.obtainable ? 1 : 0;
    if (crossings != nullptr) *crossings = r.crossings ? static_cast<int64_t>(*r.crossings) : -1;
  });
}

arcgon_status arcgon_cluster_variable(const arcgon_set* s, const char* arc, char** out) {
  if (any_null(s, out) || arc == nullptr) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const arcgon::Seed seed(s->value);
    const auto value = arcgon::cluster_variable(seed, read_arc(s->value.order(), arc));
    *out = copy_out(value.to_string());
  });
}

arcgon_status arcgon_enumerate(int64_t n, int64_t* count, char** dot) {
  if (any_null(count)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (dot != nullptr) {
      const auto g = arcgon::exchange_graph(n);
      *count = static_cast<int64_t>(g.vertices.size());
      *dot = copy_out(arcgon::render_dot(g));
    } else {
      *count = static_cast<int64_t>(arcgon::enumerate_triangulations(n).size());
    }
  });
}

arcgon_status arcgon_render_svg(const arcgon_set* s, int64_t window, char** out) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_out(arcgon::render_svg(s->value, window)); });
}

arcgon_status arcgon_examples(int table_only, char** out) {
  if (any_null(out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_out(table_only ? arcgon::examples_table() : arcgon::examples_listing());
  });
}

arcgon_status arcgon_truncate(const arcgon_set* s, int64_t window, arcgon_set** out) {
  if (any_null(s, out)) return fail(ARCGON_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new arcgon_set{arcgon::truncate(s->value, window)}; });
}

}  // extern "C"
