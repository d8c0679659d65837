#pragma once

// Text formats for elections and attack instances.
//
//   kind: fallback
//   candidates: a b c
//   vote: a > b | c weight=2 price=3
//
// Instance files add `problem:`, `designated:` and the blocks the problem
// needs: `manipulators:`, `budget:`, one `swap-prices:` or
// `extension-prices:` line per voter. `#` starts a comment.

#include <string>
#include <variant>

#include "bfv/problems.hpp"

namespace bfv {

class ParseError : public InvalidInput {
public:
    ParseError(int line, const std::string& message)
        : InvalidInput("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

using AnyInstance = std::variant<ManipulationInstance, BriberyInstance, CampaignInstance>;

struct InstanceDocument {
    std::string problem;  // tag such as CCWM, DUB$, CUEB
    AnyInstance instance;
};

/// With `allow_instance_keys`, instance blocks are accepted and ignored.
Election parse_election(const std::string& text, bool allow_instance_keys = false);
std::string serialize_election(const Election& election);

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& document);

/// Builds a document for `instance`, choosing the tag from its flags.
InstanceDocument make_document(const ManipulationInstance& instance);
InstanceDocument make_document(const BriberyInstance& instance);
InstanceDocument make_document(const CampaignInstance& instance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bfv
