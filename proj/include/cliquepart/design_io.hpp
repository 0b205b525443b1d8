#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "cliquepart/design.hpp"

namespace cliquepart {

inline constexpr std::string_view kDesignMagic = "cliquepart-design v1";

namespace detail {

inline std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::uint32_t parse_uint(std::string_view tok, std::size_t line) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        parse_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

inline std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Serialization is deterministic: identical designs give identical bytes.
inline void write_design(const Design& d, std::ostream& out) {
    out << kDesignMagic << '\n';
    out << "n=" << d.n() << " r=" << d.r() << " label=" << detail::quote(d.label()) << '\n';
    for (const auto& b : d.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out << ' ';
            out << b[i];
        }
        out << '\n';
    }
}

inline std::string design_to_string(const Design& d) {
    std::ostringstream os;
    write_design(d, os);
    return os.str();
}

inline void write_design(const Design& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    write_design(d, out);
    if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

inline Design read_design(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_magic = false, have_header = false;
    std::uint32_t n = 0, r = 0;
    std::string label;
    std::vector<Block> blocks;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::strip_cr(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!have_magic) {
            if (line != kDesignMagic) detail::parse_fail(line_no, "missing 'cliquepart-design v1' header");
            have_magic = true;
            continue;
        }
        if (!have_header) {
            // n=<int> r=<int> label="<text>"
            if (!line.starts_with("n=")) detail::parse_fail(line_no, "expected 'n=<int> r=<int> label=...'");
            const auto sp1 = line.find(' ');
            if (sp1 == std::string_view::npos) detail::parse_fail(line_no, "truncated header");
            n = detail::parse_uint(line.substr(2, sp1 - 2), line_no);
            auto rest = line.substr(sp1 + 1);
            if (!rest.starts_with("r=")) detail::parse_fail(line_no, "expected r=<int>");
            const auto sp2 = rest.find(' ');
            if (sp2 == std::string_view::npos) detail::parse_fail(line_no, "truncated header");
            r = detail::parse_uint(rest.substr(2, sp2 - 2), line_no);
            rest = rest.substr(sp2 + 1);
            if (!rest.starts_with("label=\"") || rest.size() < 8 || rest.back() != '"')
                detail::parse_fail(line_no, "expected label=\"...\"");
            const auto body = rest.substr(7, rest.size() - 8);
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (body[i] == '\\') {
                    if (++i >= body.size()) detail::parse_fail(line_no, "dangling escape in label");
                    label += body[i] == 'n' ? '\n' : body[i];
                } else if (body[i] == '"') {
                    detail::parse_fail(line_no, "unescaped quote in label");
                } else {
                    label += body[i];
                }
            }
            have_header = true;
            continue;
        }
        Block b;
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] == ' ') {
                ++pos;
                continue;
            }
            const auto end = std::min(line.find(' ', pos), line.size());
            const Point v = detail::parse_uint(line.substr(pos, end - pos), line_no);
            if (!b.empty() && b.back() >= v) detail::parse_fail(line_no, "block entries must be strictly increasing");
            b.push_back(v);
            pos = end;
        }
        blocks.push_back(std::move(b));
    }
    if (!have_magic) detail::parse_fail(line_no, "empty file");
    if (!have_header) detail::parse_fail(line_no, "missing parameter line");
    return Design(n, r, std::move(blocks), std::move(label));
}

inline Design design_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_design(is);
}

inline Design read_design(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return read_design(in);
}

}  // namespace cliquepart
