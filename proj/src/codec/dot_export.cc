// Copyright 2026 The SemJudge Authors.
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

#include "semjudge/codec/dot_export.h"

#include <sstream>

namespace semjudge::codec {
namespace {

// Escapes for a double-quoted DOT string; raw newlines become spaces so
// that "\n" line breaks stay under our control.
std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n':
      case '\r':
      case '\t': out += ' '; break;
      default: out += c;
    }
  }
  return out;
}

std::string NodeLabel(const core::HsgNode& node, std::size_t budget) {
  std::ostringstream label;
  label << "sign: " << Escape(TruncateUtf8(node.semiosis.sign_description, budget))
        << "\\nobject: "
        << Escape(TruncateUtf8(node.semiosis.inferred_object, budget))
        << "\\ninterpretant: "
        << Escape(TruncateUtf8(node.semiosis.interpretant, budget));
  for (const core::BoundingBox& b : node.bounding_boxes) {
    label << "\\n[" << b.x_min << ',' << b.y_min << ',' << b.x_max << ','
          << b.y_max << ']';
  }
  return label.str();
}

}  // namespace

std::string TruncateUtf8(std::string_view text, std::size_t budget) {
  std::size_t code_points = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if ((byte & 0xC0) == 0x80) continue;  // continuation byte
    if (code_points == budget) return std::string(text.substr(0, i)) + "...";
    ++code_points;
  }
  return std::string(text);
}

std::string ExportDot(const core::Hsg& hsg, const DotOptions& options) {
  std::ostringstream dot;
  dot << "digraph \"" << Escape(options.graph_name) << "\" {\n";
  dot << "  node [shape=box];\n";
  for (const core::HsgNode* node : hsg.nodes()) {
    dot << "  \"" << Escape(node->node_id) << "\" [label=\""
        << NodeLabel(*node, options.label_budget) << "\"];\n";
  }
  for (const core::HsgNode& child : hsg.children) {
    dot << "  \"" << Escape(hsg.root.node_id) << "\" -> \""
        << Escape(child.node_id) << "\" [label=\""
        << Escape(TruncateUtf8(child.relation_to_root, options.label_budget))
        << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace semjudge::codec
