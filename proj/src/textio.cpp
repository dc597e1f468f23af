#include <aoisched/textio.hpp>

#include <aoisched/error.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace aoisched {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DecisionAtOffSlot: return "DecisionAtOffSlot";
    case ErrorCode::NonIntegerDelta: return "NonIntegerDelta";
    case ErrorCode::IrrationalDelta: return "IrrationalDelta";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::OutOfOrderSlot: return "OutOfOrderSlot";
    case ErrorCode::EmptyObservationWindow: return "EmptyObservationWindow";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::UOutOfRange: return "UOutOfRange";
    case ErrorCode::HorizonTooLarge: return "HorizonTooLarge";
    case ErrorCode::GridEmpty: return "GridEmpty";
    case ErrorCode::ZeroThresholdWithNoise: return "ZeroThresholdWithNoise";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

namespace textio {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) fail(ErrorCode::InvalidArgument, "cannot format double");
    return std::string(buf.data(), ptr);
}

std::string format_int(std::int64_t value) { return std::to_string(value); }

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

double parse_double(std::string_view text) {
    const std::string s = trim(text);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        fail(ErrorCode::ParseError, "not a number: '" + s + "'");
    return value;
}

std::int64_t parse_int(std::string_view text) {
    const std::string s = trim(text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
    return value;
}

bool parse_bool(std::string_view text) {
    const std::string s = trim(text);
    if (s == "1" || s == "true" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "no") return false;
    fail(ErrorCode::ParseError, "not a boolean: '" + s + "'");
}

std::string join_doubles(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

std::string join_ints(std::span<const std::int64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_int(values[i]);
    }
    return out;
}

std::string join_bools(const std::vector<bool>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i] ? '1' : '0';
    }
    return out;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    const std::string s = trim(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        out.push_back(trim(std::string_view(s).substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(parse_double(item));
    return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(text)) out.push_back(parse_int(item));
    return out;
}

std::vector<bool> parse_bool_list(std::string_view text) {
    std::vector<bool> out;
    for (const auto& item : split_list(text)) out.push_back(parse_bool(item));
    return out;
}

Document Document::parse(std::string_view text) {
    Document doc;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(std::string_view(t).substr(0, eq));
        if (key.empty())
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty key");
        if (doc.has(key))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        doc.set(key, trim(std::string_view(t).substr(eq + 1)));
    }
    return doc;
}

Document Document::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void Document::set(const std::string& key, std::string value) {
    if (auto it = index_.find(key); it != index_.end()) {
        entries_[it->second].second = std::move(value);
        return;
    }
    index_.emplace(key, entries_.size());
    entries_.emplace_back(key, std::move(value));
}

bool Document::has(const std::string& key) const { return index_.contains(key); }

const std::string& Document::get(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) fail(ErrorCode::ParseError, "missing key '" + key + "'");
    return entries_[it->second].second;
}

std::optional<std::string> Document::find(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].second;
}

std::string Document::get_or(const std::string& key, std::string fallback) const {
    auto v = find(key);
    return v ? *v : std::move(fallback);
}

void Document::write(std::ostream& out) const {
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
}

std::string Document::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

} // namespace textio
} // namespace aoisched
