// reports.hpp — machine-readable output: CSV for plot data, JSON for reports.
// Every file embeds the resolved config and seed; floating point is printed
// with 17 significant digits so values round-trip exactly.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oscbath {

/// %.17g formatting (round-trip exact for doubles).
std::string format_g17(double v);

/// CSV with leading '# key = value' comment lines for provenance;
/// LF newlines, UTF-8, fully deterministic.
class CsvWriter {
  public:
    void add_comment(const std::string& key, const std::string& value);
    void set_header(std::vector<std::string> columns);
    void add_row(std::vector<std::string> cells);
    std::string str() const;
    void write(const std::string& path) const;

  private:
    std::vector<std::pair<std::string, std::string>> comments_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Minimal ordered JSON document builder (object/array/scalars) producing
/// deterministic output; numbers are emitted with 17 significant digits.
class JsonValue {
  public:
    static JsonValue object();
    static JsonValue array();
    static JsonValue number(double v);
    static JsonValue integer(long long v);
    static JsonValue boolean(bool v);
    static JsonValue string(std::string v);

    JsonValue& set(const std::string& key, JsonValue v);  // objects
    JsonValue& push(JsonValue v);                         // arrays

    std::string dump(int indent = 2) const;
    void write(const std::string& path, int indent = 2) const;

  private:
    enum class Kind { Object, Array, Number, Integer, Bool, String };
    Kind kind_ = Kind::Object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> elements_;

    void dump_to(std::string& out, int indent, int depth) const;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace oscbath
