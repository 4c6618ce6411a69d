#include "oscbath/reports.hpp"

#include <cstdio>
#include <fstream>

#include "oscbath/errors.hpp"

namespace oscbath {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::add_comment(const std::string& key, const std::string& value) {
    comments_.emplace_back(key, value);
}

void CsvWriter::set_header(std::vector<std::string> columns) { header_ = std::move(columns); }

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw numeric_error("CsvWriter: row width mismatch");
    rows_.push_back(std::move(cells));
}

std::string CsvWriter::str() const {
    std::string out;
    for (const auto& [k, v] : comments_) out += "# " + k + " = " + v + "\n";
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ",";
        out += header_[i];
    }
    out += "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

void CsvWriter::write(const std::string& path) const { write_text_file(path, str()); }

JsonValue JsonValue::object() { return JsonValue(); }

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue JsonValue::number(double x) {
    JsonValue v;
    v.kind_ = Kind::Number;
    v.num_ = x;
    return v;
}

JsonValue JsonValue::integer(long long x) {
    JsonValue v;
    v.kind_ = Kind::Integer;
    v.int_ = x;
    return v;
}

JsonValue JsonValue::boolean(bool x) {
    JsonValue v;
    v.kind_ = Kind::Bool;
    v.bool_ = x;
    return v;
}

JsonValue JsonValue::string(std::string x) {
    JsonValue v;
    v.kind_ = Kind::String;
    v.str_ = std::move(x);
    return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    if (kind_ != Kind::Object) throw numeric_error("JsonValue::set on non-object");
    members_.emplace_back(key, std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    if (kind_ != Kind::Array) throw numeric_error("JsonValue::push on non-array");
    elements_.push_back(std::move(v));
    return *this;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (kind_) {
        case Kind::Number: {
            const std::string s = format_g17(num_);
            // bare nan/inf are not valid JSON
            out += (s.find("nan") != std::string::npos || s.find("inf") != std::string::npos)
                       ? "\"" + s + "\""
                       : s;
            break;
        }
        case Kind::Integer:
            out += std::to_string(int_);
            break;
        case Kind::Bool:
            out += bool_ ? "true" : "false";
            break;
        case Kind::String:
            escape_into(out, str_);
            break;
        case Kind::Object: {
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += pad_in;
                escape_into(out, members_[i].first);
                out += ": ";
                members_[i].second.dump_to(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            break;
        }
        case Kind::Array: {
            if (elements_.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < elements_.size(); ++i) {
                out += pad_in;
                elements_[i].dump_to(out, indent, depth + 1);
                if (i + 1 < elements_.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            break;
        }
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += "\n";
    return out;
}

void JsonValue::write(const std::string& path, int indent) const {
    write_text_file(path, dump(indent));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);  // binary: LF newlines everywhere
    if (!out) throw config_error("cannot write output file '" + path + "'");
    out << content;
    if (!out) throw config_error("failed while writing '" + path + "'");
}

}  // namespace oscbath
