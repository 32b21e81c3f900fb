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

// Command-line front end. Talks to the library through the C interface only.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arcgon/arcgon.h"

namespace {

struct SetDeleter {
  void operator()(arcgon_set* s) const { arcgon_set_free(s); }
};
using SetPtr = std::unique_ptr<arcgon_set, SetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { arcgon_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with an exit code after printing a diagnostic.
struct Exit {
  int code;
};

int exit_code(arcgon_status status) {
  switch (status) {
    case ARCGON_OK: return 0;
    case ARCGON_ERR_INVARIANT:
    case ARCGON_ERR_NOT_LAURENT:
    case ARCGON_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

void check(arcgon_status status) {
  if (status == ARCGON_OK) return;
  std::cerr << "arcgon: " << arcgon_status_name(status) << ": " << arcgon_last_error() << "\n";
  throw Exit{exit_code(status)};
}

SetPtr load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "arcgon: cannot read " << path << "\n";
    throw Exit{2};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  arcgon_set* raw = nullptr;
  check(arcgon_set_parse(buf.str().c_str(), &raw));
  return SetPtr(raw);
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::string printed(const arcgon_set* s) {
  char* text = nullptr;
  check(arcgon_set_print(s, &text));
  return StringPtr(text).get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc sets on cyclic orders: properties, flips and cluster variables"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> arc_words;
  std::int64_t count_n = 0;
  bool graph = false;
  std::int64_t window = 0;
  std::string out_path;
  bool table_only = false;

  auto* cmd_check = app.add_subcommand("check", "Decide the properties of an arc set");
  cmd_check->add_option("file", file, "Arc-set document")->required();

  auto* cmd_flip = app.add_subcommand("flip", "Exchange one arc of a maximal set");
  cmd_flip->add_option("file", file, "Arc-set document")->required();
  cmd_flip->add_option("arc", arc_words, "Arc, e.g. 1 3 or \"(0, 1) (0, 3)\"")->required();

  auto* cmd_reach = app.add_subcommand("reach", "Flip toward an arc until it is a member");
  cmd_reach->add_option("file", file, "Arc-set document")->required();
  cmd_reach->add_option("arc", arc_words, "Target arc")->required();

  auto* cmd_var = app.add_subcommand("var", "Cluster variable of an arc");
  cmd_var->add_option("file", file, "Seed triangulation")->required();
  cmd_var->add_option("arc", arc_words, "Arc")->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "Count triangulations of a polygon");
  cmd_enum->add_option("n", count_n, "Number of vertices, 4 to 12")->required();
  cmd_enum->add_flag("--graph", graph, "Also print the exchange graph in DOT");

  auto* cmd_draw = app.add_subcommand("draw", "Write an SVG chord diagram");
  cmd_draw->add_option("file", file, "Arc-set document")->required();
  cmd_draw->add_option("--window", window, "Offsets drawn on each thread")->required();
  cmd_draw->add_option("--out", out_path, "Output path")->required();

  auto* cmd_examples = app.add_subcommand("examples", "Builtin example sets and their properties");
  cmd_examples->add_flag("--table", table_only, "Only the property tables");

  auto* cmd_truncate = app.add_subcommand("truncate", "Finite polygon seen through a window");
  cmd_truncate->add_option("file", file, "Arc-set document")->required();
  cmd_truncate->add_option("window", window, "Window width")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_check->parsed()) {
      const auto s = load(file);
      char* report = nullptr;
      check(arcgon_check_report(s.get(), &report));
      std::cout << StringPtr(report).get();
    } else if (cmd_flip->parsed() || cmd_reach->parsed()) {
      const auto s = load(file);
      const std::string arc = join(arc_words);
      arcgon_set* raw = nullptr;
      char* steps = nullptr;
      check(cmd_flip->parsed() ? arcgon_flip(s.get(), arc.c_str(), &raw, &steps)
                               : arcgon_reach(s.get(), arc.c_str(), &raw, &steps));
      const SetPtr next(raw);
      const StringPtr text(steps);
      std::cout << text.get();
      if (cmd_flip->parsed()) std::cout << "\n";
      std::cout << printed(next.get());
    } else if (cmd_var->parsed()) {
      const auto s = load(file);
      char* value = nullptr;
      check(arcgon_cluster_variable(s.get(), join(arc_words).c_str(), &value));
      std::cout << StringPtr(value).get() << "\n";
    } else if (cmd_enum->parsed()) {
      std::int64_t count = 0;
      char* dot = nullptr;
      check(arcgon_enumerate(count_n, &count, graph ? &dot : nullptr));
      const StringPtr text(dot);
      std::cout << count << "\n";
      if (graph) std::cout << text.get();
    } else if (cmd_draw->parsed()) {
      const auto s = load(file);
      char* svg = nullptr;
      check(arcgon_render_svg(s.get(), window, &svg));
      const StringPtr text(svg);
      std::ofstream out(out_path, std::ios::binary);
      out << text.get();
      if (!out) {
        std::cerr << "arcgon: cannot write " << out_path << "\n";
        return 2;
      }
    } else if (cmd_examples->parsed()) {
      char* text = nullptr;
      check(arcgon_examples(table_only ? 1 : 0, &text));
      std::cout << StringPtr(text).get();
    } else if (cmd_truncate->parsed()) {
      const auto s = load(file);
      arcgon_set* raw = nullptr;
      check(arcgon_truncate(s.get(), window, &raw));
      std::cout << printed(SetPtr(raw).get());
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
