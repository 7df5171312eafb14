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

#ifndef COLORPACK_IO_HPP_
#define COLORPACK_IO_HPP_

#include <string>
#include <vector>

#include "colorpack/adversary.hpp"
#include "colorpack/hypergraph.hpp"
#include "colorpack/partition.hpp"
#include "colorpack/vbp.hpp"

namespace colorpack {

// All emitters produce canonical text: emit(parse(emit(x))) == emit(x)
// byte for byte, and parse(emit(x)) == x.

// Instances are JSON objects {"mode","dimension","bin_size","items"}:
// binary entries are 0/1 integers, unit entries "num/den" strings, the bin
// size an integer (binary) or "num/den" string (unit).
std::string emit_instance(const VbpInstance& instance);
VbpInstance parse_instance(const std::string& text);

// Several instances in one file: a JSON array. A file holding a single
// object is read as a one-element list; an empty or whitespace-only file as
// an empty list. Parse errors carry 1-based line numbers.
std::vector<VbpInstance> parse_instance_file(const std::string& text);

// Hypergraphs are JSON objects {"k","n","edges"} with 1-based vertex labels
// in arrival order.
std::string emit_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

// Colorings emit as "vertex color" lines.
std::string emit_coloring(const Coloring& c);

// Multi-families are plain text: "ground c1 c2 ..." then one member per
// line ("-" for the empty set). Partitions list member indices per block:
// "block i: m1 m2 ...".
std::string emit_multifamily(const MultiFamily& family);
MultiFamily parse_multifamily(const std::string& text);
std::string emit_partition(const BlockPartition& partition);
BlockPartition parse_partition(const std::string& text);

// Adversary transcripts are JSON: ordered steps, the final edge list, the
// color map, and per-subtree provenance. Replayable: feeding the final
// hypergraph back to the same colorer reproduces the recorded colors.
std::string emit_transcript(const AdversaryTranscript& transcript);
AdversaryTranscript parse_transcript(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace colorpack

#endif  // COLORPACK_IO_HPP_
