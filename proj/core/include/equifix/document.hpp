#pragma once

#include <stdexcept>
#include <string>

#include "equifix/model.hpp"

namespace equifix {

// Structural/schema failure while reading a model document.  `where` is a
// field path like "points[2].eps", or "line 7" for lexical errors.
struct document_error : std::runtime_error {
    document_error(const std::string& message, std::string where_)
        : std::runtime_error(where_.empty() ? message : where_ + ": " + message),
          where(std::move(where_)) {}
    std::string where;
};

// Parses the strict integer-only document format.  Every structural problem
// (unknown key, float, wrong type, bad eps, odd dim, ...) throws
// document_error; the result always satisfies the model's shape invariants.
FixedPointModel parse_model_document(const std::string& text);

// Canonical form: fixed key order, two-space indent, points sorted.
// serialize(parse(doc)) is idempotent under re-parsing.
std::string serialize_model_document(const FixedPointModel& model);

}  // namespace equifix
