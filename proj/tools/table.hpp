#pragma once

// Long-format result table shared by every subcommand.  The first two
// columns of every row are the library version and the constants hash.

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zlab::cli {

using Cell = std::variant<std::string, double, long long, bool>;

class Table {
public:
    Table(std::string version, std::string hash, std::vector<std::string> columns)
        : version_(std::move(version)), hash_(std::move(hash)), columns_(std::move(columns)) {}

    void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
    std::size_t size() const noexcept { return rows_.size(); }

    std::string csv() const {
        std::string out = "version,constants_hash";
        for (const auto& c : columns_) out += "," + c;
        out += "\n";
        for (const auto& row : rows_) {
            out += version_ + "," + hash_;
            for (const auto& cell : row) out += "," + text(cell);
            out += "\n";
        }
        return out;
    }

    std::string json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows_) {
            nlohmann::ordered_json obj;
            obj["version"] = version_;
            obj["constants_hash"] = hash_;
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                std::visit([&](const auto& v) { obj[columns_[i]] = v; }, row[i]);
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }

private:
    static std::string text(const Cell& cell) {
        if (const auto* s = std::get_if<std::string>(&cell)) return *s;
        if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
        if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
        return buf;
    }

    std::string version_;
    std::string hash_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace zlab::cli
