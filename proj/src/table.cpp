#include "summab/io.hpp"

#include <ostream>

namespace summab {

void Table::write_csv(std::ostream& out) const
{
    for (size_t i = 0; i < header.size(); ++i) {
        if (i)
            out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ',';
            out << row[i];
        }
        out << '\n';
    }
    for (const auto& [key, value] : notes)
        out << "# " << key << ' ' << value << '\n';
}

void Table::write_json(std::ostream& out) const
{
    nlohmann::ordered_json j;
    j["columns"] = header;
    auto& rows_json = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        rows_json.push_back(row);
    if (!notes.empty()) {
        auto& notes_json = j["notes"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : notes)
            notes_json[key] = value;
    }
    out << j.dump(2) << '\n';
}

void Table::write(std::ostream& out, const std::string& format) const
{
    if (format == "csv")
        write_csv(out);
    else if (format == "json")
        write_json(out);
    else
        throw precondition_error("unknown output format: " + format);
}

} // namespace summab
