// Copyright 2026 The vdyck Authors
//
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "vdyck/error.hpp"
#include "verify.hpp"

namespace vdyck::cli {

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and cross-check height-bounded Dyck paths without "
               "valleys at height h-1 and their 312-avoiding permutation "
               "images",
               "vdyck"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  // Subcommands inherit this, so global options may follow the subcommand.
  app.fallthrough();

  Format format = Format::kText;
  const std::map<std::string, Format> formats = {
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  std::string out_path;
  app.add_option("--format", format, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Print D_0..D_{n-max} of D^(h,2)");
  count_cmd->add_option("--h", count.h, "Height bound h >= 1")->required();
  count_cmd->add_option("--n-max,--n", count.n_max, "Largest semilength")->required();
  count_cmd->add_option("--method", count.method, "recurrence|series|matrix|brute|eco|all")
      ->check(CLI::IsMember({"recurrence", "series", "matrix", "brute", "eco", "all"}))
      ->capture_default_str();
  count_cmd->add_option("--k", count.k, "Valley-run parameter (brute method only)")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  count_cmd->add_option("--cap", count.cap, "Override the brute/eco size cap");

  ListOptions list;
  auto* list_cmd = app.add_subcommand("list", "List D_n^(h,k) or its permutation image");
  list_cmd->add_option("--h", list.h, "Height bound")->required();
  list_cmd->add_option("--n", list.n, "Semilength")->required();
  list_cmd->add_option("--kind", list.kind, "paths|perms")
      ->check(CLI::IsMember({"paths", "perms"}))
      ->capture_default_str();
  list_cmd->add_option("--k", list.k, "Valley-run parameter (membership filter)")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  list_cmd->add_option("--cap", list.cap, "Override the size cap");

  MapOptions map;
  auto* map_cmd = app.add_subcommand(
      "map", "Map paths to permutations and back, one item per line (stdin if no args)");
  map_cmd->add_option("--direction", map.direction, "auto|to-perm|to-path")
      ->check(CLI::IsMember({"auto", "to-perm", "to-path"}))
      ->capture_default_str();
  map_cmd->add_option("inputs", map.inputs, "Items to map");

  TreeOptions tree;
  auto* tree_cmd = app.add_subcommand("tree", "Print the generating tree to a depth");
  tree_cmd->add_option("--h", tree.h, "Height bound h >= 3")->required();
  tree_cmd->add_option("--depth,--n", tree.depth, "Tree depth")->capture_default_str();
  tree_cmd->add_option("--kind", tree.kind, "paths|perms")
      ->check(CLI::IsMember({"paths", "perms"}))
      ->capture_default_str();
  tree_cmd->add_option("--cap", tree.cap, "Override the depth cap");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Print the coefficients a(h,j) of q_h");
  table_cmd->add_option("--h-max", table.h_max, "Rows h = 1..h-max")->capture_default_str();
  table_cmd->add_option("--j-max", table.j_max, "Columns j = 1..j-max")->capture_default_str();

  MatrixOptions matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print the production matrix P_h");
  matrix_cmd->add_option("--h", matrix.h, "Height bound h >= 2")->required();
  matrix_cmd->add_option("--source", matrix.source, "block|rule")
      ->check(CLI::IsMember({"block", "rule"}))
      ->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-module invariant checks");
  verify_cmd->add_option("--scope", verify.scope, "all|bijection|identities|eco|matrix")
      ->check(CLI::IsMember({"all", "bijection", "identities", "eco", "matrix"}))
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Size bound (per-scope default)");
  verify_cmd->add_option("--h-max", verify.h_max, "Height bound (per-scope default)");
  verify_cmd->add_option("--alpha-max", verify.alpha_max, "Catalan identity alpha bound")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*count_cmd) return cmd_count(count, format, *sink, err);
    if (*list_cmd) return cmd_list(list, format, *sink, err);
    if (*map_cmd) return cmd_map(map, format, in, *sink, err);
    if (*tree_cmd) return cmd_tree(tree, format, *sink, err);
    if (*table_cmd) return cmd_table(table, format, *sink, err);
    if (*matrix_cmd) return cmd_matrix(matrix, format, *sink, err);
    if (*verify_cmd) return cmd_verify(verify, format, *sink, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vdyck::cli
