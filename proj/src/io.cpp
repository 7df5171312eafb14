// Copyright 2026 The colorpack Authors.
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

#include "colorpack/io.hpp"

#include <fstream>
#include <sstream>

#include "colorpack/errors.hpp"
#include "json.hpp"

namespace colorpack {

namespace {

using nlohmann::json;

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_offset(text, e.byte));
  }
}

json instance_to_json(const VbpInstance& instance) {
  json j;
  j["mode"] = to_string(instance.mode());
  j["dimension"] = instance.dimension();
  if (instance.mode() == VectorMode::kBinary) {
    j["bin_size"] = instance.bin_size().num();
  } else {
    j["bin_size"] = instance.bin_size().fraction_str();
  }
  json items = json::array();
  for (const ItemVector& item : instance.items()) {
    json row = json::array();
    for (const Rational& e : item.entries()) {
      if (instance.mode() == VectorMode::kBinary) {
        row.push_back(e.num());
      } else {
        row.push_back(e.fraction_str());
      }
    }
    items.push_back(std::move(row));
  }
  j["items"] = std::move(items);
  return j;
}

VbpInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* field : {"mode", "dimension", "bin_size", "items"}) {
    if (!j.contains(field)) {
      throw ParseError(std::string("instance missing field '") + field + "'");
    }
  }
  const std::string mode_name = j.at("mode").get<std::string>();
  VectorMode mode;
  if (mode_name == "binary") {
    mode = VectorMode::kBinary;
  } else if (mode_name == "unit") {
    mode = VectorMode::kUnit;
  } else {
    throw ParseError("mode must be 'binary' or 'unit', got '" + mode_name + "'");
  }
  const int dimension = j.at("dimension").get<int>();
  Rational bin_size(1);
  if (j.at("bin_size").is_string()) {
    bin_size = Rational::parse(j.at("bin_size").get<std::string>());
  } else {
    bin_size = Rational(j.at("bin_size").get<long long>());
  }
  std::vector<ItemVector> items;
  for (const json& row : j.at("items")) {
    std::vector<Rational> entries;
    for (const json& cell : row) {
      if (cell.is_string()) {
        entries.push_back(Rational::parse(cell.get<std::string>()));
      } else {
        entries.push_back(Rational(cell.get<long long>()));
      }
    }
    items.emplace_back(std::move(entries), mode);
  }
  return VbpInstance(mode, dimension, bin_size, std::move(items));
}

}  // namespace

std::string emit_instance(const VbpInstance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

VbpInstance parse_instance(const std::string& text) {
  try {
    return instance_from_json(parse_json(text));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<VbpInstance> parse_instance_file(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  const json j = parse_json(text);
  std::vector<VbpInstance> out;
  try {
    if (j.is_array()) {
      for (const json& element : j) out.push_back(instance_from_json(element));
    } else {
      out.push_back(instance_from_json(j));
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::string emit_hypergraph(const Hypergraph& h) {
  json j;
  j["k"] = h.k();
  j["n"] = h.n();
  j["edges"] = h.edges();
  return j.dump(2) + "\n";
}

Hypergraph parse_hypergraph(const std::string& text) {
  const json j = parse_json(text);
  try {
    return Hypergraph(j.at("n").get<int>(), j.at("k").get<int>(),
                      j.at("edges").get<std::vector<Edge>>());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_coloring(const Coloring& c) {
  std::string out;
  for (int v = 1; v <= c.n(); ++v) {
    out += std::to_string(v) + " " + std::to_string(c.color(v)) + "\n";
  }
  return out;
}

std::string emit_multifamily(const MultiFamily& family) {
  std::string out = "ground";
  for (int c : family.ground) out += " " + std::to_string(c);
  out += "\n";
  for (const auto& member : family.members) {
    if (member.empty()) {
      out += "-\n";
      continue;
    }
    std::string line;
    for (int c : member) {
      if (!line.empty()) line += " ";
      line += std::to_string(c);
    }
    out += line + "\n";
  }
  return out;
}

namespace {

std::vector<int> parse_int_line(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<int> out;
  int value = 0;
  while (in >> value) out.push_back(value);
  if (!in.eof()) throw ParseError("expected integers", line_no);
  return out;
}

}  // namespace

MultiFamily parse_multifamily(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MultiFamily family;
  int line_no = 0;
  bool have_ground = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!have_ground) {
      if (line.rfind("ground", 0) != 0) {
        throw ParseError("first line must start with 'ground'", line_no);
      }
      family.ground = parse_int_line(line.substr(6), line_no);
      have_ground = true;
      continue;
    }
    if (line == "-") {
      family.members.push_back({});
      continue;
    }
    family.members.push_back(parse_int_line(line, line_no));
  }
  if (!have_ground) throw ParseError("missing ground line", 1);
  validate_family(family);
  return family;
}

std::string emit_partition(const BlockPartition& partition) {
  std::string out;
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    out += "block " + std::to_string(i + 1) + ":";
    for (int idx : partition.blocks[i]) out += " " + std::to_string(idx);
    out += "\n";
  }
  return out;
}

BlockPartition parse_partition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  BlockPartition partition;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (line.rfind("block", 0) != 0 || colon == std::string::npos) {
      throw ParseError("expected 'block i: members'", line_no);
    }
    partition.blocks.push_back(parse_int_line(line.substr(colon + 1), line_no));
  }
  return partition;
}

std::string emit_transcript(const AdversaryTranscript& transcript) {
  json j;
  json steps = json::array();
  for (const TranscriptStep& step : transcript.steps) {
    json s;
    s["vertex"] = step.vertex;
    s["revealed"] = step.revealed;
    s["color"] = step.color;
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["n"] = transcript.final_hypergraph.n();
  j["k"] = transcript.final_hypergraph.k();
  j["edges"] = transcript.final_hypergraph.edges();
  j["colors_used"] =
      std::vector<int>(transcript.colors_used.begin(), transcript.colors_used.end());
  json blocks = json::array();
  for (const TreeProvenance& tree : transcript.blocks) {
    json b;
    b["id"] = tree.id;
    b["depth"] = tree.depth;
    b["parent"] = tree.parent;
    b["block"] = tree.block;
    b["copy"] = tree.copy;
    b["vertices"] = tree.vertices;
    b["colors"] = std::vector<int>(tree.colors.begin(), tree.colors.end());
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

AdversaryTranscript parse_transcript(const std::string& text) {
  const json j = parse_json(text);
  AdversaryTranscript out;
  try {
    for (const json& s : j.at("steps")) {
      out.steps.push_back(TranscriptStep{
          s.at("vertex").get<int>(),
          s.at("revealed").get<std::vector<Edge>>(),
          s.at("color").get<int>(),
      });
    }
    out.final_hypergraph =
        Hypergraph(j.at("n").get<int>(), j.at("k").get<int>(),
                   j.at("edges").get<std::vector<Edge>>());
    for (int c : j.at("colors_used").get<std::vector<int>>()) {
      out.colors_used.insert(c);
    }
    for (const json& b : j.at("blocks")) {
      TreeProvenance tree;
      tree.id = b.at("id").get<int>();
      tree.depth = b.at("depth").get<int>();
      tree.parent = b.at("parent").get<int>();
      tree.block = b.at("block").get<int>();
      tree.copy = b.at("copy").get<int>();
      tree.vertices = b.at("vertices").get<std::vector<int>>();
      for (int c : b.at("colors").get<std::vector<int>>()) {
        tree.colors.insert(c);
      }
      out.blocks.push_back(std::move(tree));
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace colorpack
