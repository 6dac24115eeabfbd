#include "trk/modelspec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace trk {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool valid_identifier(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// Decimal with optional sign, fraction, and exponent; no inf/nan/hex.
bool numeric_syntax(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        ++i;
    }
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++digits;
        }
    }
    if (digits == 0) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            ++i;
        }
        std::size_t exp_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            return false;
        }
    }
    return i == s.size();
}

// Returns the 0-based byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t first_invalid_utf8(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t extra = 0;
        if (c < 0x80) {
            extra = 0;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            if (c < 0xC2) {
                return i; // overlong
            }
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            if (c > 0xF4) {
                return i;
            }
        } else {
            return i;
        }
        for (std::size_t k = 1; k <= extra; ++k) {
            if (i + k >= s.size()
                || (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
                return i;
            }
        }
        i += extra + 1;
    }
    return std::string_view::npos;
}

int line_of_offset(std::string_view s, std::size_t offset)
{
    int line = 1;
    for (std::size_t i = 0; i < offset && i < s.size(); ++i) {
        if (s[i] == '\n') {
            ++line;
        }
    }
    return line;
}

double to_double(std::string_view s)
{
    return std::strtod(std::string(s).c_str(), nullptr);
}

const ParsedSection& require_section(const ParsedDocument& doc, const std::string& name)
{
    const ParsedSection* s = doc.find(name);
    if (s == nullptr) {
        throw ValidationError("missing required section [" + name + "]");
    }
    return *s;
}

double numeric_entry(const ParsedSection& section, const std::string& key)
{
    const ParsedValue* v = section.find(key);
    if (v == nullptr) {
        throw ValidationError("section [" + section.name + "]: missing key '" + key + "'");
    }
    if (!v->is_number) {
        throw ValidationError("section [" + section.name + "] line " + std::to_string(v->line)
                              + ": key '" + key + "' must be numeric, got '" + v->text + "'");
    }
    if (!std::isfinite(v->number)) {
        throw ValidationError("section [" + section.name + "] line " + std::to_string(v->line)
                              + ": key '" + key + "' is not finite");
    }
    return v->number;
}

int integer_entry(const ParsedSection& section, const std::string& key)
{
    const double v = numeric_entry(section, key);
    const double rounded = std::nearbyint(v);
    if (v != rounded || std::abs(v) > 1e9) {
        throw ValidationError("section [" + section.name + "]: key '" + key
                              + "' must be an integer");
    }
    return static_cast<int>(rounded);
}

void reject_extras(const ParsedSection& section, const std::set<std::string>& allowed)
{
    for (const auto& [key, value] : section.entries) {
        if (allowed.count(key) == 0) {
            throw ValidationError("section [" + section.name + "] line "
                                  + std::to_string(value.line) + ": unknown key '" + key + "'");
        }
    }
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

const ParsedValue* ParsedSection::find(const std::string& key) const
{
    for (const auto& [k, v] : entries) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

const ParsedSection* ParsedDocument::find(const std::string& name) const
{
    for (const ParsedSection& s : sections) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

ParsedDocument parse_model_file(std::string_view text)
{
    const std::size_t bad = first_invalid_utf8(text);
    if (bad != std::string_view::npos) {
        throw ParseError(line_of_offset(text, bad), "invalid UTF-8 byte sequence");
    }

    ParsedDocument doc;
    ParsedSection* current = nullptr;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.find('#') != std::string_view::npos) {
            throw ParseError(line_no, "inline comments are not supported "
                                      "(comments must occupy a whole line)");
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError(line_no, "malformed section header '" + std::string(line) + "'");
            }
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!valid_identifier(name)) {
                throw ParseError(line_no, "invalid section name '" + std::string(name) + "'");
            }
            if (const ParsedSection* dup = doc.find(std::string(name))) {
                throw ParseError(line_no, "duplicate section [" + std::string(name)
                                              + "], first declared on line "
                                              + std::to_string(dup->line));
            }
            doc.sections.push_back(ParsedSection{std::string(name), line_no, {}});
            current = &doc.sections.back();
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "malformed line '" + std::string(line)
                                          + "' (expected `[section]` or `key = value`)");
        }
        if (current == nullptr) {
            throw ParseError(line_no, "key-value pair before any [section] header");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!valid_identifier(key)) {
            throw ParseError(line_no, "invalid key '" + std::string(key) + "'");
        }
        if (value.empty()) {
            throw ParseError(line_no, "empty value for key '" + std::string(key) + "'");
        }
        if (const ParsedValue* dup = current->find(std::string(key))) {
            throw ParseError(line_no, "duplicate key '" + std::string(key) + "' in section ["
                                          + current->name + "], first set on line "
                                          + std::to_string(dup->line));
        }
        ParsedValue pv;
        pv.text = std::string(value);
        pv.line = line_no;
        if (numeric_syntax(value)) {
            pv.is_number = true;
            pv.number = to_double(value);
        }
        current->entries.emplace_back(std::string(key), std::move(pv));
    }
    return doc;
}

int SweepSpec::point_count() const
{
    return static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double SweepSpec::value_at(int index) const
{
    return start + index * step;
}

std::vector<double> ResponseSpec::grid() const
{
    std::vector<double> out(samples);
    for (int s = 0; s < samples; ++s) {
        out[s] = omega_min + (omega_max - omega_min) * s / (samples - 1);
    }
    return out;
}

ModelDefinition validate(const ParsedDocument& doc)
{
    static const std::set<std::string> known_sections = {"model", "truncation", "sweep",
                                                         "response"};
    for (const ParsedSection& s : doc.sections) {
        if (known_sections.count(s.name) == 0) {
            throw ValidationError("line " + std::to_string(s.line) + ": unknown section ["
                                  + s.name + "]");
        }
    }
    const ParsedSection& model = require_section(doc, "model");
    const ParsedSection& truncation = require_section(doc, "truncation");

    const ParsedValue* kind_value = model.find("kind");
    if (kind_value == nullptr) {
        throw ValidationError("section [model]: missing key 'kind'");
    }
    const std::optional<ModelKind> kind = kind_from_name(kind_value->text);
    if (!kind) {
        std::ostringstream msg;
        msg << "unknown model kind '" << kind_value->text << "'; valid kinds:";
        for (ModelKind k : all_model_kinds()) {
            msg << " " << kind_name(k);
        }
        throw ValidationError(msg.str());
    }

    ModelDefinition def;
    def.kind = *kind;

    std::set<std::string> allowed = {"kind"};
    for (const std::string& p : required_params(def.kind)) {
        allowed.insert(p);
    }
    reject_extras(model, allowed);
    for (const std::string& p : required_params(def.kind)) {
        def.params[p] = numeric_entry(model, p);
    }

    std::set<std::string> trunc_allowed = {"workspace_pad"};
    for (const std::string& t : truncation_keys(def.kind)) {
        trunc_allowed.insert(t);
    }
    reject_extras(truncation, trunc_allowed);
    for (const std::string& t : truncation_keys(def.kind)) {
        const int n = integer_entry(truncation, t);
        if (n < 2) {
            throw ValidationError("section [truncation]: " + t + " = " + std::to_string(n)
                                  + " is below the minimum of 2");
        }
        def.truncations.push_back(n);
    }
    if (truncation.find("workspace_pad") != nullptr) {
        const int pad = integer_entry(truncation, "workspace_pad");
        if (pad < 0) {
            throw ValidationError("section [truncation]: workspace_pad must be >= 0");
        }
        def.workspace_pad = pad;
    }

    // Domain checks; mode frequencies must be strictly positive (the sum rules
    // divide by omega_m).
    auto check_positive = [&](const char* name) {
        if (def.params.count(name) != 0 && !(def.params.at(name) > 0.0)) {
            throw ValidationError(std::string("parameter ") + name + " must be positive");
        }
    };
    auto check_nonnegative = [&](const char* name) {
        if (def.params.count(name) != 0 && !(def.params.at(name) >= 0.0)) {
            throw ValidationError(std::string("parameter ") + name + " must be non-negative");
        }
    };
    check_positive("omega_c");
    check_positive("omega_a");
    check_positive("omega_b");
    check_positive("omega_mech");
    check_positive("mass");
    check_nonnegative("eta");
    check_positive("omega_0");
    return def;
}

std::optional<SweepSpec> validate_sweep(const ParsedDocument& doc, const ModelDefinition& def)
{
    const ParsedSection* s = doc.find("sweep");
    if (s == nullptr) {
        return std::nullopt;
    }
    reject_extras(*s, {"param", "start", "stop", "step"});
    const ParsedValue* param = s->find("param");
    if (param == nullptr) {
        throw ValidationError("section [sweep]: missing key 'param'");
    }
    const auto& required = required_params(def.kind);
    if (std::find(required.begin(), required.end(), param->text) == required.end()) {
        throw ValidationError("section [sweep]: parameter '" + param->text
                              + "' does not belong to model kind " + kind_name(def.kind));
    }
    SweepSpec sweep;
    sweep.param = param->text;
    sweep.start = numeric_entry(*s, "start");
    sweep.stop = numeric_entry(*s, "stop");
    sweep.step = numeric_entry(*s, "step");
    if (sweep.start > sweep.stop) {
        throw ValidationError("section [sweep]: start exceeds stop");
    }
    if (!(sweep.step > 0.0)) {
        throw ValidationError("section [sweep]: step must be positive");
    }
    return sweep;
}

std::optional<ResponseSpec> validate_response(const ParsedDocument& doc)
{
    const ParsedSection* s = doc.find("response");
    if (s == nullptr) {
        return std::nullopt;
    }
    reject_extras(*s, {"alpha", "omega_min", "omega_max", "samples"});
    ResponseSpec resp;
    if (s->find("alpha") != nullptr) {
        resp.alpha = numeric_entry(*s, "alpha");
    }
    if (!(resp.alpha > 0.0)) {
        throw ValidationError("section [response]: alpha must be positive");
    }
    resp.omega_min = numeric_entry(*s, "omega_min");
    resp.omega_max = numeric_entry(*s, "omega_max");
    if (!(resp.omega_min < resp.omega_max)) {
        throw ValidationError("section [response]: omega_min must be below omega_max");
    }
    resp.samples = integer_entry(*s, "samples");
    if (resp.samples < 2) {
        throw ValidationError("section [response]: samples must be >= 2");
    }
    return resp;
}

ModelFile validate_file(const ParsedDocument& doc)
{
    ModelFile file;
    file.definition = validate(doc);
    file.sweep = validate_sweep(doc, file.definition);
    file.response = validate_response(doc);
    return file;
}

std::string serialize(const ModelDefinition& def)
{
    std::ostringstream out;
    out << "[model]\n";
    out << "kind = " << kind_name(def.kind) << "\n";
    for (const std::string& p : required_params(def.kind)) {
        out << p << " = " << format_number(def.params.at(p)) << "\n";
    }
    out << "\n[truncation]\n";
    const auto& keys = truncation_keys(def.kind);
    for (std::size_t t = 0; t < keys.size(); ++t) {
        out << keys[t] << " = " << def.truncations.at(t) << "\n";
    }
    out << "workspace_pad = " << def.workspace_pad << "\n";
    return out.str();
}

} // namespace trk
