#include "halign/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace halign::csv {

std::vector<std::string> parse_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t n = line.size();
    while (n > 0 && (line[n - 1] == '\r' || line[n - 1] == '\n')) --n;
    for (std::size_t i = 0; i < n; ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < n && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

Reader::Reader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw std::runtime_error("cannot open file: " + path);
    std::string line;
    if (!std::getline(in_, line)) throw std::runtime_error("empty file: " + path);
    header_ = parse_line(line);
}

std::size_t Reader::require_column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) return i;
    }
    throw std::runtime_error("schema error in " + path_ + ": missing column '" + name + "'");
}

bool Reader::next(std::vector<std::string>& fields) {
    while (std::getline(in_, line_)) {
        ++row_number_;
        if (line_.empty() || (line_.size() == 1 && line_[0] == '\r')) continue;
        fields = parse_line(line_);
        return true;
    }
    return false;
}

Writer::Writer(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open file for writing: " + path);
}

void Writer::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << escape(fields[i]);
    }
    out_ << '\n';
}

}  // namespace halign::csv
