#include "propp/sequence_io.hpp"

#include "propp/errors.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace propp {

void require_ascending(std::span<const u128> values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0)
            throw FormatError("sequence entry " + std::to_string(i + 1) + " is 0; entries must be >= 1");
        if (i > 0 && values[i] <= values[i - 1])
            throw FormatError("sequence is not strictly ascending at entry " + std::to_string(i + 1) + " (" +
                              to_string(values[i - 1]) + " then " + to_string(values[i]) + ")");
    }
}

std::vector<u128> read_sequence(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<u128> values;
    if (text.empty())
        return values;
    if (text.back() != '\n')
        throw FormatError("sequence file is not newline-terminated");

    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view row(text.data() + pos, end - pos);
        if (row.empty())
            throw FormatError("blank line " + std::to_string(line) + " in sequence file");
        try {
            values.push_back(parse_u128(row));
        } catch (const FormatError& e) {
            throw FormatError("line " + std::to_string(line) + ": " + e.what());
        }
        pos = end + 1;
        ++line;
    }
    require_ascending(values);
    return values;
}

void write_sequence(std::ostream& out, std::span<const u128> values)
{
    for (auto v : values)
        out << to_string(v) << '\n';
}

} // namespace propp
