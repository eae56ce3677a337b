#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace laura::bench {

/// Minimal TOML reader covering what the config files use: `[section]`
/// headers, `key = value` with string, integer, float, boolean, and
/// single-line array values, and `#` comments. Keys are exposed flattened
/// as "section.key".
class TomlValue {
public:
    using Array = std::vector<TomlValue>;
    using Storage = std::variant<std::string, std::int64_t, double, bool, Array>;

    TomlValue() : storage_(std::string{}) {}
    explicit TomlValue(Storage storage) : storage_(std::move(storage)) {}

    bool is_string() const { return std::holds_alternative<std::string>(storage_); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(storage_); }
    bool is_double() const { return std::holds_alternative<double>(storage_); }
    bool is_bool() const { return std::holds_alternative<bool>(storage_); }
    bool is_array() const { return std::holds_alternative<Array>(storage_); }

    const std::string& as_string() const { return expect<std::string>("string"); }
    std::int64_t as_int() const { return expect<std::int64_t>("integer"); }
    bool as_bool() const { return expect<bool>("boolean"); }
    const Array& as_array() const { return expect<Array>("array"); }

    /// Numeric accessor; integers promote to double.
    double as_double() const {
        if (is_int()) return static_cast<double>(std::get<std::int64_t>(storage_));
        return expect<double>("float");
    }

private:
    template <typename T> const T& expect(const char* name) const {
        if (const T* value = std::get_if<T>(&storage_)) return *value;
        throw std::invalid_argument(std::string("TOML value is not a ") + name);
    }

    Storage storage_;
};

class TomlDocument {
public:
    bool contains(const std::string& key) const { return entries_.count(key) > 0; }

    const TomlValue& at(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            throw std::invalid_argument("missing TOML key \"" + key + "\"");
        }
        return it->second;
    }

    std::string get_string(const std::string& key) const { return at(key).as_string(); }
    std::int64_t get_int(const std::string& key) const { return at(key).as_int(); }
    double get_double(const std::string& key) const { return at(key).as_double(); }
    bool get_bool(const std::string& key) const { return at(key).as_bool(); }

    std::string get_string_or(const std::string& key, std::string fallback) const {
        return contains(key) ? get_string(key) : std::move(fallback);
    }
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const {
        return contains(key) ? get_int(key) : fallback;
    }
    double get_double_or(const std::string& key, double fallback) const {
        return contains(key) ? get_double(key) : fallback;
    }
    bool get_bool_or(const std::string& key, bool fallback) const {
        return contains(key) ? get_bool(key) : fallback;
    }

    std::vector<std::int64_t> get_int_array(const std::string& key) const {
        std::vector<std::int64_t> out;
        for (const TomlValue& element : at(key).as_array()) out.push_back(element.as_int());
        return out;
    }
    std::vector<std::string> get_string_array(const std::string& key) const {
        std::vector<std::string> out;
        for (const TomlValue& element : at(key).as_array()) out.push_back(element.as_string());
        return out;
    }

    void insert(const std::string& key, TomlValue value, int line, const std::string& origin) {
        if (!entries_.emplace(key, std::move(value)).second) {
            throw std::invalid_argument(origin + ":" + std::to_string(line) +
                                        ": duplicate key \"" + key + "\"");
        }
    }

private:
    std::map<std::string, TomlValue> entries_;
};

namespace toml_detail {

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

[[noreturn]] inline void fail(const std::string& origin, int line, const std::string& message) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + message);
}

inline bool is_bare_key(std::string_view key) {
    if (key.empty()) return false;
    for (const char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
            return false;
        }
    }
    return true;
}

/// Strips a trailing comment, honoring quotes.
inline std::string_view strip_comment(std::string_view line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
        if (c == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

inline std::string parse_basic_string(std::string_view text, std::size_t& pos,
                                      const std::string& origin, int line) {
    std::string out;
    ++pos; // opening quote
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '"') {
            ++pos;
            return out;
        }
        if (c == '\\') {
            ++pos;
            if (pos >= text.size()) break;
            switch (text[pos]) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: fail(origin, line, std::string("unsupported escape \\") + text[pos]);
            }
            ++pos;
            continue;
        }
        out += c;
        ++pos;
    }
    fail(origin, line, "unterminated string");
}

inline TomlValue parse_scalar(std::string_view text, const std::string& origin, int line) {
    text = trim(text);
    if (text.empty()) fail(origin, line, "empty value");
    if (text == "true") return TomlValue{true};
    if (text == "false") return TomlValue{false};

    const bool looks_float = text.find('.') != std::string_view::npos ||
                             text.find('e') != std::string_view::npos ||
                             text.find('E') != std::string_view::npos;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    if (!looks_float) {
        std::int64_t integer = 0;
        const auto [ptr, ec] = std::from_chars(first, last, integer);
        if (ec == std::errc() && ptr == last) return TomlValue{integer};
    }
    double real = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, real);
    if (ec == std::errc() && ptr == last) return TomlValue{real};
    fail(origin, line, "cannot parse value \"" + std::string(text) + "\"");
}

inline TomlValue parse_value(std::string_view text, const std::string& origin, int line);

inline TomlValue parse_array(std::string_view text, const std::string& origin, int line) {
    TomlValue::Array elements;
    std::size_t pos = 1; // past '['
    bool expect_element = true;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) fail(origin, line, "unterminated array");
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (!expect_element) {
            if (text[pos] != ',') fail(origin, line, "expected ',' or ']' in array");
            ++pos;
            expect_element = true;
            continue;
        }
        std::size_t element_end = pos;
        if (text[pos] == '"') {
            std::size_t scan = pos;
            parse_basic_string(text, scan, origin, line);
            element_end = scan;
        } else {
            while (element_end < text.size() && text[element_end] != ',' &&
                   text[element_end] != ']') {
                ++element_end;
            }
        }
        elements.push_back(parse_value(text.substr(pos, element_end - pos), origin, line));
        pos = element_end;
        expect_element = false;
    }
    if (trim(text.substr(pos)).size() > 0) fail(origin, line, "trailing text after array");
    return TomlValue{std::move(elements)};
}

inline TomlValue parse_value(std::string_view text, const std::string& origin, int line) {
    text = trim(text);
    if (text.empty()) fail(origin, line, "empty value");
    if (text.front() == '[') return parse_array(text, origin, line);
    if (text.front() == '"') {
        std::size_t pos = 0;
        std::string value = parse_basic_string(text, pos, origin, line);
        if (!trim(text.substr(pos)).empty()) fail(origin, line, "trailing text after string");
        return TomlValue{std::move(value)};
    }
    return parse_scalar(text, origin, line);
}

} // namespace toml_detail

inline TomlDocument parse_toml(const std::string& text, const std::string& origin = "toml") {
    TomlDocument doc;
    std::string section;
    std::istringstream stream(text);
    std::string raw_line;
    int line_number = 0;
    while (std::getline(stream, raw_line)) {
        ++line_number;
        const std::string_view line = toml_detail::trim(toml_detail::strip_comment(raw_line));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                toml_detail::fail(origin, line_number, "malformed section header");
            }
            const std::string_view name = toml_detail::trim(line.substr(1, line.size() - 2));
            if (!toml_detail::is_bare_key(name)) {
                toml_detail::fail(origin, line_number, "invalid section name");
            }
            section = std::string(name);
            continue;
        }

        const std::size_t equals = line.find('=');
        if (equals == std::string_view::npos) {
            toml_detail::fail(origin, line_number, "expected 'key = value'");
        }
        const std::string_view key = toml_detail::trim(line.substr(0, equals));
        if (!toml_detail::is_bare_key(key)) {
            toml_detail::fail(origin, line_number, "invalid key \"" + std::string(key) + "\"");
        }
        TomlValue value = toml_detail::parse_value(line.substr(equals + 1), origin, line_number);
        const std::string full_key =
            section.empty() ? std::string(key) : section + "." + std::string(key);
        doc.insert(full_key, std::move(value), line_number, origin);
    }
    return doc;
}

inline TomlDocument load_toml_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open TOML file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_toml(buffer.str(), path);
}

} // namespace laura::bench
