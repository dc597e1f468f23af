#pragma once

// Flat "key = value" documents shared by instance files, experiment configs
// and run records. Lines starting with '#' are comments; arrays are
// comma-separated. Doubles are written in shortest round-trip form so a
// parse of a written document reproduces the exact bits.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aoisched::textio {

std::string format_double(double value);
std::string format_int(std::int64_t value);

double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);
bool parse_bool(std::string_view text);

std::string join_doubles(std::span<const double> values);
std::string join_ints(std::span<const std::int64_t> values);
std::string join_bools(const std::vector<bool>& values);

std::vector<std::string> split_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::vector<bool> parse_bool_list(std::string_view text);

std::string trim(std::string_view text);

/// Ordered key/value document. Insertion order is preserved on output.
class Document {
public:
    static Document parse(std::string_view text);
    static Document read_file(const std::string& path);

    void set(const std::string& key, std::string value);
    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::optional<std::string> find(const std::string& key) const;
    std::string get_or(const std::string& key, std::string fallback) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    void write(std::ostream& out) const;
    std::string to_string() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

} // namespace aoisched::textio
