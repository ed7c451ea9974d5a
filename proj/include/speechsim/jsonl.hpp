#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace speechsim::jsonl {

// Raw lines of a text file, without trailing newlines. Throws DataError
// when the file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// One JSON value per non-empty line. Throws DataError with the 1-based line
// number on parse failure.
std::vector<nlohmann::json> read(const std::filesystem::path& path);

// Writes one compact JSON value per line. Creates parent directories.
void write(const std::filesystem::path& path,
           const std::vector<nlohmann::json>& rows);

// Appends a single row, creating the file if needed.
void append(const std::filesystem::path& path, const nlohmann::json& row);

// Whole-file helpers for single-document JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& doc, int indent = 2);

// Writes exactly `content`, creating parent directories.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace speechsim::jsonl
