#pragma once

#include <string>
#include <string_view>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"

namespace gsearch {

// Canonical JSON: sorted keys, no whitespace, trailing newline. Parse errors
// are ParseError with the offending field path in the message.

std::string serialize_instance(const SearchInstance& inst);
SearchInstance parse_instance(std::string_view text);

std::string serialize_decision_tree(const DecisionTree& d);
/// `n` is the vertex count of the instance the tree belongs to.
DecisionTree parse_decision_tree(std::string_view text, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace gsearch
