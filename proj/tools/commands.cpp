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

#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "vdyck/vdyck.hpp"

namespace vdyck::cli {
namespace {

using Json = nlohmann::ordered_json;

Json record(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json big_array(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += to_string(values[i]);
  }
  return s;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return kExitUsage;
}

int brute_cap(int cap) { return cap < 0 ? kDefaultEnumerationCap : cap; }
int tree_cap(int cap) { return cap < 0 ? kDefaultTreeCap : cap; }

const std::vector<std::string> kMethods = {"recurrence", "series", "matrix",
                                           "brute", "eco"};

/// Methods that apply for (h, n_max) when `all` is requested.
std::vector<std::string> applicable_methods(int h, int n_max, int cap) {
  std::vector<std::string> out;
  out.push_back("recurrence");
  out.push_back("series");
  if (h >= 2) out.push_back("matrix");
  if (n_max <= brute_cap(cap)) out.push_back("brute");
  if (h >= 3 && n_max <= tree_cap(cap)) out.push_back("eco");
  return out;
}

}  // namespace

std::vector<BigInt> count_by_method(const std::string& method, int h,
                                    int n_max, int k, int cap) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "--h must be >= 1");
  if (n_max < 0) throw Error(ErrorCode::kInvalidArgument, "--n-max must be >= 0");
  if (k != 2 && method != "brute") {
    throw Error(ErrorCode::kInvalidArgument,
                "--k other than 2 is only supported by --method brute");
  }
  if (method != "brute" && method != "eco" && n_max > kMaxCountN) {
    throw Error(ErrorCode::kCapExceeded,
                "--n-max is limited to " + std::to_string(kMaxCountN));
  }
  std::vector<BigInt> out;
  if (method == "recurrence") {
    return count_recurrence_sequence(h, n_max);
  }
  if (method == "series") {
    return series(gf(h), n_max, kMaxCountN);
  }
  if (method == "matrix") {
    if (h < 2) {
      throw Error(ErrorCode::kInvalidArgument, "matrix method needs h >= 2");
    }
    const ProductionMatrix m = build_block(h);
    for (int n = 0; n <= n_max; ++n) out.push_back(level_count(m, {1}, n).total);
    return out;
  }
  if (method == "brute") {
    for (int n = 0; n <= n_max; ++n) out.push_back(count_brute(n, h, k, brute_cap(cap)));
    return out;
  }
  if (method == "eco") {
    for (const auto& level : generate_tree(h, n_max, tree_cap(cap))) {
      out.emplace_back(level.size());
    }
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + method + "'");
}

int cmd_count(const CountOptions& opts, Format format, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> methods;
  if (opts.method == "all") {
    if (opts.k != 2) return usage_error(err, "--method all requires --k 2");
    methods = applicable_methods(opts.h, opts.n_max, opts.cap);
  } else {
    methods = {opts.method};
  }

  std::map<std::string, std::vector<BigInt>> results;
  for (const auto& m : methods) {
    results[m] = count_by_method(m, opts.h, opts.n_max, opts.k, opts.cap);
  }
  const std::vector<BigInt>& values = results.at(methods.front());

  for (int n = 0; n <= opts.n_max; ++n) {
    bool agree = true;
    for (const auto& m : methods) agree = agree && results[m][n] == values[n];
    if (!agree) {
      err << "error: MethodDisagreement at n=" << n << ":";
      for (const auto& m : methods) err << ' ' << m << '=' << to_string(results[m][n]);
      err << '\n';
      return kExitFailure;
    }
  }

  switch (format) {
    case Format::kText:
      out << join(values, ",") << '\n';
      break;
    case Format::kCsv:
      out << "n,count\n";
      for (std::size_t n = 0; n < values.size(); ++n) {
        out << n << ',' << to_string(values[n]) << '\n';
      }
      break;
    case Format::kJson: {
      Json j = record("count");
      j["h"] = opts.h;
      j["k"] = opts.k;
      j["n_max"] = opts.n_max;
      j["method"] = opts.method;
      j["methods"] = methods;
      j["agreement"] = true;
      j["values"] = big_array(values);
      emit(out, j);
      break;
    }
  }
  return kExitOk;
}

int cmd_list(const ListOptions& opts, Format format, std::ostream& out,
             std::ostream& err) {
  if (opts.kind != "paths" && opts.kind != "perms") {
    return usage_error(err, "--kind must be paths or perms");
  }
  struct Item {
    std::string object;
    int label;  // 0 when the class has no labelled generation
  };
  std::vector<Item> items;
  const bool generated = opts.k == 2 && opts.h >= 3;
  if (generated) {
    for (const PathNode& node : generate_level(opts.h, opts.n, tree_cap(opts.cap))) {
      const std::string text = opts.kind == "paths"
                                   ? node.object.str()
                                   : path_to_perm(node.object).str();
      items.push_back({text, node.label.value});
    }
  } else {
    for_each_dyck(
        opts.n,
        [&](const DyckPath& p) {
          if (!in_class(p, opts.h, opts.k)) return;
          items.push_back(
              {opts.kind == "paths" ? p.str() : path_to_perm(p).str(), 0});
        },
        brute_cap(opts.cap));
  }

  switch (format) {
    case Format::kText:
      for (const auto& it : items) {
        std::string line;
        if (it.label > 0) line = "(" + std::to_string(it.label) + ")";
        if (!line.empty() && !it.object.empty()) line += ' ';
        out << line << it.object << '\n';
      }
      break;
    case Format::kCsv:
      out << "index,object,label\n";
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << i << ',' << items[i].object << ',';
        if (items[i].label > 0) out << items[i].label;
        out << '\n';
      }
      break;
    case Format::kJson: {
      Json j = record("list");
      j["h"] = opts.h;
      j["k"] = opts.k;
      j["n"] = opts.n;
      j["kind"] = opts.kind;
      j["order"] = generated ? "generating-tree" : "lexicographic";
      Json arr = Json::array();
      for (const auto& it : items) {
        Json e;
        e["object"] = it.object;
        e["label"] = it.label > 0 ? Json(it.label) : Json(nullptr);
        arr.push_back(std::move(e));
      }
      j["count"] = items.size();
      j["items"] = std::move(arr);
      emit(out, j);
      break;
    }
  }
  return kExitOk;
}

int cmd_map(const MapOptions& opts, Format format, std::istream& in,
            std::ostream& out, std::ostream& err) {
  if (opts.direction != "auto" && opts.direction != "to-perm" &&
      opts.direction != "to-path") {
    return usage_error(err, "--direction must be auto, to-perm or to-path");
  }
  std::vector<std::string> lines = opts.inputs;
  if (lines.empty()) {
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  Json results = Json::array();
  int failures = 0;
  if (format == Format::kCsv) out << "line,input,output,error\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    line.erase(0, std::min(line.find_first_not_of(' '), line.size()));

    std::string direction = opts.direction;
    if (direction == "auto") {
      direction = line.find_first_of("0123456789") != std::string::npos
                      ? "to-path"
                      : "to-perm";
    }
    Json entry;
    entry["line"] = i + 1;
    entry["input"] = line;
    entry["direction"] = direction;
    try {
      const std::string mapped = direction == "to-perm"
                                     ? path_to_perm(parse_path(line)).str()
                                     : perm_to_path(parse_perm(line)).str();
      entry["output"] = mapped;
      if (format == Format::kText) out << mapped << '\n';
      if (format == Format::kCsv) {
        out << i + 1 << ',' << line << ',' << mapped << ",\n";
      }
    } catch (const Error& e) {
      ++failures;
      entry["error"] = std::string(error_code_name(e.code()));
      entry["message"] = e.what();
      err << "line " << i + 1 << ": " << e.what() << '\n';
      if (format == Format::kText) out << "error: " << error_code_name(e.code()) << '\n';
      if (format == Format::kCsv) {
        out << i + 1 << ',' << line << ",," << error_code_name(e.code()) << '\n';
      }
    }
    results.push_back(std::move(entry));
  }
  if (format == Format::kJson) {
    Json j = record("map");
    j["direction"] = opts.direction;
    j["failures"] = failures;
    j["results"] = std::move(results);
    emit(out, j);
  }
  return failures == 0 ? kExitOk : kExitUsage;
}

namespace {

template <class Object, class Expand, class LabelFn>
Json tree_json(const Object& object, int label, int level, int depth,
               const Expand& expand, const LabelFn& label_fn) {
  Json node;
  node["object"] = object.str();
  node["label"] = label;
  node["level"] = level;
  Json kids = Json::array();
  if (level < depth) {
    for (const auto& child : expand(object)) {
      kids.push_back(tree_json(child, label_fn(child), level + 1, depth, expand,
                               label_fn));
    }
  }
  node["children"] = std::move(kids);
  return node;
}

template <class Object, class Expand, class LabelFn>
void tree_text(std::ostream& out, const Object& object, int label, int level,
               int depth, const Expand& expand, const LabelFn& label_fn) {
  out << std::string(2 * level, ' ') << '(' << label << ')';
  const std::string text = object.str();
  if (!text.empty()) out << ' ' << text;
  out << '\n';
  if (level >= depth) return;
  for (const auto& child : expand(object)) {
    tree_text(out, child, label_fn(child), level + 1, depth, expand, label_fn);
  }
}

}  // namespace

int cmd_tree(const TreeOptions& opts, Format format, std::ostream& out,
             std::ostream& err) {
  if (opts.kind != "paths" && opts.kind != "perms") {
    return usage_error(err, "--kind must be paths or perms");
  }
  if (format == Format::kCsv) return usage_error(err, "tree supports text or json");
  if (opts.h < 3) return usage_error(err, "tree needs --h >= 3");
  if (opts.depth < 0) return usage_error(err, "--depth must be >= 0");
  if (opts.depth > tree_cap(opts.cap)) {
    throw Error(ErrorCode::kCapExceeded, "depth " + std::to_string(opts.depth) +
                                             " exceeds cap " +
                                             std::to_string(tree_cap(opts.cap)));
  }
  const int h = opts.h;
  auto run = [&](const auto& root, const auto& expand, const auto& label_fn) {
    if (format == Format::kJson) {
      Json j = record("tree");
      j["h"] = h;
      j["kind"] = opts.kind;
      j["depth"] = opts.depth;
      j["root"] = tree_json(root, label_fn(root), 0, opts.depth, expand, label_fn);
      emit(out, j);
    } else {
      tree_text(out, root, label_fn(root), 0, opts.depth, expand, label_fn);
    }
  };
  if (opts.kind == "paths") {
    run(
        DyckPath{}, [h](const DyckPath& p) { return theta(p, h); },
        [h](const DyckPath& p) { return label_of(p, h).value; });
  } else {
    run(
        Permutation{}, [h](const Permutation& p) { return theta_perm(p, h); },
        [h](const Permutation& p) { return label_of_perm(p, h).value; });
  }
  return kExitOk;
}

int cmd_table(const TableOptions& opts, Format format, std::ostream& out,
              std::ostream& err) {
  if (opts.h_max < 1 || opts.j_max < 1) {
    return usage_error(err, "--h-max and --j-max must be >= 1");
  }
  std::vector<std::vector<BigInt>> rows;
  for (int h = 1; h <= opts.h_max; ++h) {
    std::vector<BigInt> row;
    for (int j = 1; j <= opts.j_max; ++j) row.push_back(a_coeff(h, j));
    rows.push_back(std::move(row));
  }

  switch (format) {
    case Format::kText: {
      std::size_t width = 3;
      for (const auto& row : rows)
        for (const auto& v : row) width = std::max(width, to_string(v).size() + 1);
      out << std::setw(5) << "h\\j" << " |";
      for (int j = 1; j <= opts.j_max; ++j) out << std::setw(width) << j;
      out << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << std::setw(5) << i + 1 << " |";
        for (const auto& v : rows[i]) out << std::setw(width) << to_string(v);
        out << '\n';
      }
      out << "# q_h(x) = 1 - sum_j a(h,j) x^j; diagonals resemble OEIS A112467\n";
      break;
    }
    case Format::kCsv:
      out << "h";
      for (int j = 1; j <= opts.j_max; ++j) out << ",j" << j;
      out << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << i + 1 << ',' << join(rows[i], ",") << '\n';
      }
      break;
    case Format::kJson: {
      Json j = record("table");
      j["h_max"] = opts.h_max;
      j["j_max"] = opts.j_max;
      Json arr = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Json r;
        r["h"] = i + 1;
        r["a"] = big_array(rows[i]);
        arr.push_back(std::move(r));
      }
      j["rows"] = std::move(arr);
      emit(out, j);
      break;
    }
  }
  return kExitOk;
}

int cmd_matrix(const MatrixOptions& opts, Format format, std::ostream& out,
               std::ostream& err) {
  if (opts.h < 2) return usage_error(err, "matrix needs --h >= 2");
  if (opts.source != "block" && opts.source != "rule") {
    return usage_error(err, "--source must be block or rule");
  }
  const ProductionMatrix m =
      opts.source == "block"
          ? build_block(opts.h)
          : build_from_rule(opts.h == 2 ? omega2() : omega(opts.h));
  const auto rows = m.rows();

  switch (format) {
    case Format::kText: {
      std::size_t width = 1;
      for (const auto& row : rows)
        for (const auto& v : row) width = std::max(width, to_string(v).size());
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) out << ' ';
          out << std::setw(width) << to_string(row[c]);
        }
        out << '\n';
      }
      break;
    }
    case Format::kCsv:
      out << "label";
      for (std::size_t c = 1; c <= rows.size(); ++c) out << ',' << c;
      out << '\n';
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out << r + 1 << ',' << join(rows[r], ",") << '\n';
      }
      break;
    case Format::kJson: {
      Json j = record("matrix");
      j["h"] = opts.h;
      j["source"] = opts.source;
      Json arr = Json::array();
      // Entries never exceed h, so plain JSON numbers are exact.
      for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.convert_to<long long>());
        arr.push_back(std::move(r));
      }
      j["rows"] = std::move(arr);
      emit(out, j);
      break;
    }
  }
  return kExitOk;
}

}  // namespace vdyck::cli
