#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qspin/core.hpp"
#include "qspin/cyclotomic.hpp"
#include "qspin/partitions.hpp"

namespace qspin {

struct GroupClass {
    std::string label;
    Integer centralizer_order;
};

/// A finite group Gamma seen only through its class data: the classes Gamma_*,
/// the centralizer orders zeta_c, and optionally the character table.
class GroupData {
public:
    using CharacterTable = std::vector<std::vector<Cyclotomic>>;

    /// Validates the class equation and, if a table is given, row orthogonality.
    GroupData(std::string name, Integer order, std::vector<GroupClass> classes,
              std::optional<CharacterTable> table = std::nullopt);

    const std::string& name() const { return name_; }
    const Integer& order() const { return order_; }
    const std::vector<GroupClass>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    const LabelSet& labels() const { return labels_; }
    const Integer& centralizer_order(std::size_t c) const;

    bool has_character_table() const { return table_.has_value(); }
    std::size_t irreducible_count() const;
    /// gamma_i on every class; throws without a table.
    const std::vector<Cyclotomic>& character(std::size_t i) const;

    bool is_trivial() const { return order_ == 1; }

    nlohmann::json to_json() const;
    static GroupData from_json(const nlohmann::json& doc, const std::string& source = "<json>");

    friend bool operator==(const GroupData& a, const GroupData& b);

private:
    std::string name_;
    Integer order_;
    std::vector<GroupClass> classes_;
    LabelSet labels_;
    std::optional<CharacterTable> table_;
};

using GroupPtr = std::shared_ptr<const GroupData>;

/// Parses a JSON document, turning parse errors into Error("source:line:col: ...").
nlohmann::json parse_json_text(std::string_view text, const std::string& source);
nlohmann::json read_json_file(const std::filesystem::path& path);

GroupPtr load_group(const std::filesystem::path& path);
GroupPtr parse_group(std::string_view text, const std::string& source = "<string>");

/// Shipped fixtures: "trivial", "Z2", "Z3", "S3".
GroupPtr builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

} // namespace qspin
