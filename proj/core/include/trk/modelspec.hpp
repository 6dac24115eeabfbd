// modelspec.hpp — Plain-text model-definition files: parse, validate, serialize

#pragma once

#include "trk/models.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trk {

// Parse failure with the 1-based source line it points at (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Semantic failure after a successful parse (unknown kind, bad domain, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParsedValue {
    std::string text;
    bool is_number = false;
    double number = 0.0;
    int line = 0;
};

struct ParsedSection {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, ParsedValue>> entries;

    const ParsedValue* find(const std::string& key) const;
};

struct ParsedDocument {
    std::vector<ParsedSection> sections;

    const ParsedSection* find(const std::string& name) const;
};

// Grammar: lines are `[section]`, `key = value`, blank, or whole-line `# comment`.
// Inline comments are not supported. Duplicate sections or keys are errors.
// Throws ParseError; never crashes on arbitrary bytes.
ParsedDocument parse_model_file(std::string_view text);

struct SweepSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    int point_count() const;
    double value_at(int index) const;
};

struct ResponseSpec {
    double alpha = 1e-3;
    double omega_min = 0.0;
    double omega_max = 0.0;
    int samples = 0;

    std::vector<double> grid() const;
};

// [model] + [truncation] into a ModelDefinition; strict (extra keys rejected).
ModelDefinition validate(const ParsedDocument& doc);

std::optional<SweepSpec> validate_sweep(const ParsedDocument& doc, const ModelDefinition& def);
std::optional<ResponseSpec> validate_response(const ParsedDocument& doc);

struct ModelFile {
    ModelDefinition definition;
    std::optional<SweepSpec> sweep;
    std::optional<ResponseSpec> response;
};

ModelFile validate_file(const ParsedDocument& doc);

// Canonical text form; parse(serialize(def)) validates back to an identical value.
std::string serialize(const ModelDefinition& def);

} // namespace trk
