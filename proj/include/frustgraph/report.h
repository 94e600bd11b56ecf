// Copyright 2026 The frustgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef FRUSTGRAPH_REPORT_H
#define FRUSTGRAPH_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frustgraph/group.h"
#include "frustgraph/oracle.h"
#include "frustgraph/pauli.h"
#include "json.hpp"

namespace frustgraph {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "frustgraph.report/1";

enum class DocumentMode { Unspecified, Group, Stabilizer };

std::string_view document_mode_name(DocumentMode mode);

struct InputDocument {
    uint32_t d = 2;
    size_t n_sites = 0;
    std::vector<PauliOperator> generators;
    DocumentMode mode = DocumentMode::Unspecified;

    bool operator==(const InputDocument &other) const = default;
};

/// Line-oriented grammar:
///
///   d=<int> n=<int> [mode=group|stabilizer]
///   g1: [w^<j>] <site-token> ... <site-token>
///
/// with site tokens I, X, Z, X^a, Z^b, X^aZ^b. `#` starts a comment; LF or
/// CRLF line endings. Generator labels must run g1, g2, ... in order.
InputDocument parse_document(std::string_view text);

/// Site tokens of one generator (everything after "g<idx>:").
PauliOperator parse_pauli(std::string_view tokens, uint32_t d, size_t n_sites);

/// Strict-grammar serialization; parse_document(format_document(doc)) == doc.
std::string format_document(const InputDocument &doc);

InputDocument builtin_document(std::string_view name, uint32_t d, size_t n_sites);

enum class Command { Analyze, Canonical, Entanglement, Verify };

/// Throws InvalidConfig for an unknown name.
Command parse_command(std::string_view name);
std::string_view command_name(Command cmd);

struct CommandFlags {
    OptimizerConfig optimizer;
    size_t cap_vertices = kCliqueVertexCap;
    /// analyze: exact chromatic number when the graph has at most 64 vertices.
    bool chromatic = false;
    /// entanglement: numeric product-state overlap per bipartition.
    bool overlap = false;
    /// verify: standalone checks, run instead of the document checks.
    bool swap = false;
    bool lagrange = false;
    uint32_t check_d = 0;
};

struct Report {
    std::string command;
    std::string input_digest;
    std::string version;
    nlohmann::ordered_json result;
    /// verify only: every check passed.
    bool passed = true;
};

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Decimal string with 12 significant digits.
std::string format_real(double value);

Report run_command(Command cmd, const std::optional<InputDocument> &doc, const CommandFlags &flags);

enum class ReportFormat { Text, Json };

ReportFormat parse_format(std::string_view name);

std::string emit_report(const Report &r, ReportFormat format);

}  // namespace frustgraph

#endif
