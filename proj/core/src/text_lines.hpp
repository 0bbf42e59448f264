#pragma once

// Line/token helpers shared by the DIMACS readers.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "condcolor/errors.hpp"

namespace condcolor::detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        fn(line_no, tokenize(line));
        if (end == std::string_view::npos) break;
        pos = end + 1;
        ++line_no;
    }
}

inline long long parse_int(std::string_view tok, std::size_t line_no) {
    long long value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no) {
    const long long value = parse_int(tok, line_no);
    if (value < 0) throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return static_cast<std::size_t>(value);
}

}  // namespace condcolor::detail
