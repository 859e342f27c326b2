#ifndef MCB_SRC_TEXT_IO_HPP_
#define MCB_SRC_TEXT_IO_HPP_

// Line tokenizer shared by the graph and complex readers.

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcb/error.hpp"

namespace mcb::detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Splits the stream into whitespace-token lines, skipping blanks and '#' comments.
inline std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

inline std::uint64_t parse_uint(const Line& line, std::size_t i, std::string_view what) {
    if (i >= line.tokens.size()) throw ParseError(line.number, "missing " + std::string(what));
    const auto& tok = line.tokens[i];
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line.number, std::string(what) + " out of range: '" + tok + "'");
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "expected non-negative integer " + std::string(what) + ", got '" + tok + "'");
    return value;
}

inline void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                          std::to_string(line.tokens.size()));
}

} // namespace mcb::detail

#endif // MCB_SRC_TEXT_IO_HPP_
