#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stitchcast {

/**
 * Minimal RFC-4180 CSV support: comma separated, UTF-8, double quotes around
 * fields containing separators, embedded quotes doubled. Writers quote only
 * when needed so emitted files are stable byte-for-byte.
 */
class CsvReader {
public:
    explicit CsvReader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
        if (!in_) throw std::runtime_error("cannot open file: " + path);
    }

    /// Reads the next record, handling quoted newlines. Returns false at EOF.
    bool next(std::vector<std::string>& fields) {
        fields.clear();
        if (in_.peek() == EOF) return false;
        ++line_;
        std::string field;
        bool in_quotes = false;
        bool any = false;
        int c;
        while ((c = in_.get()) != EOF) {
            any = true;
            if (in_quotes) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        field.push_back('"');
                        in_.get();
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (c == '\n') ++line_;
                    field.push_back(static_cast<char>(c));
                }
            } else if (c == '"' && field.empty()) {
                in_quotes = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (c == '\n') {
                break;
            } else if (c == '\r') {
                if (in_.peek() == '\n') in_.get();
                break;
            } else {
                field.push_back(static_cast<char>(c));
            }
        }
        if (in_quotes) throw std::runtime_error(where() + ": unterminated quoted field");
        if (!any) return false;
        fields.push_back(std::move(field));
        return true;
    }

    size_t line() const { return line_; }
    std::string where() const { return path_ + ":" + std::to_string(line_); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    size_t line_ = 0;
};

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot write file: " + path);
    }

    void row(const std::vector<std::string>& fields) {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            write_field(fields[i]);
        }
        out_ << '\n';
    }

    void close() {
        out_.close();
        if (out_.fail()) throw std::runtime_error("write failed: " + path_);
    }

private:
    static bool needs_quoting(std::string_view f) {
        return f.find_first_of(",\"\n\r") != std::string_view::npos;
    }

    void write_field(std::string_view f) {
        if (!needs_quoting(f)) {
            out_ << f;
            return;
        }
        out_ << '"';
        for (char c : f) {
            if (c == '"') out_ << '"';
            out_ << c;
        }
        out_ << '"';
    }

    std::string path_;
    std::ofstream out_;
};

/// Reads the header row and checks the leading columns match `required`.
inline std::vector<std::string> read_header(CsvReader& r, const std::vector<std::string>& required) {
    std::vector<std::string> header;
    if (!r.next(header)) throw std::runtime_error(r.path() + ": empty file");
    if (header.size() < required.size())
        throw std::runtime_error(r.path() + ": header has too few columns");
    for (size_t i = 0; i < required.size(); ++i)
        if (header[i] != required[i])
            throw std::runtime_error(r.path() + ": expected column '" + required[i] +
                                     "' at position " + std::to_string(i + 1) + ", found '" +
                                     header[i] + "'");
    return header;
}

}  // namespace stitchcast
