#include "qspin/group_data.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <fstream>
#include <sstream>

#include "builtin_fixtures.hpp"

namespace qspin {

namespace {

Integer json_integer(const nlohmann::json& value, const std::string& what)
{
    if (value.is_number_unsigned() || value.is_number_integer())
        return Integer(std::to_string(value.get<long long>()));
    if (value.is_string())
        return Integer(value.get<std::string>());
    throw Error(what + ": expected an integer");
}

Cyclotomic json_cyclotomic(const nlohmann::json& value, const std::string& what)
{
    if (value.is_number_integer())
        return Cyclotomic(value.get<long>());
    if (value.is_string())
        return Cyclotomic::parse(value.get<std::string>());
    throw Error(what + ": expected a rational/cyclotomic string");
}

} // namespace

GroupData::GroupData(std::string name, Integer order, std::vector<GroupClass> classes,
                     std::optional<CharacterTable> table)
    : name_(std::move(name)), order_(std::move(order)), classes_(std::move(classes)), table_(std::move(table))
{
    if (order_ < 1)
        throw Error("group '" + name_ + "': order must be positive");
    if (classes_.empty())
        throw Error("group '" + name_ + "': no classes");
    std::vector<std::string> names;
    Rational class_sum = 0;
    for (const auto& c : classes_) {
        if (c.centralizer_order < 1)
            throw Error("group '" + name_ + "': class '" + c.label + "' has non-positive centralizer order");
        names.push_back(c.label);
        class_sum += ratio(order_, c.centralizer_order);
    }
    labels_ = LabelSet(std::move(names));
    if (class_sum != Rational(order_))
        throw Error("group '" + name_ + "': class sizes sum to " + class_sum.get_str() + ", expected " +
                    order_.get_str());
    if (!table_)
        return;
    for (const auto& row : *table_)
        if (row.size() != classes_.size())
            throw Error("group '" + name_ + "': character table row has wrong length");
    if (table_->size() != classes_.size())
        throw Error("group '" + name_ + "': character table must be square");
    for (std::size_t i = 0; i < table_->size(); ++i) {
        for (std::size_t j = 0; j < table_->size(); ++j) {
            Cyclotomic s;
            for (std::size_t c = 0; c < classes_.size(); ++c)
                s += (*table_)[i][c] * (*table_)[j][c].conj() / Rational(classes_[c].centralizer_order);
            if (!(s == Cyclotomic(i == j ? 1 : 0)))
                throw Error("group '" + name_ + "': character rows " + std::to_string(i) + ", " +
                            std::to_string(j) + " violate orthogonality (inner product " + s.str() + ")");
        }
    }
}

const Integer& GroupData::centralizer_order(std::size_t c) const
{
    if (c >= classes_.size())
        throw Error("group '" + name_ + "': class index " + std::to_string(c) + " out of range");
    return classes_[c].centralizer_order;
}

std::size_t GroupData::irreducible_count() const { return table_ ? table_->size() : 0; }

const std::vector<Cyclotomic>& GroupData::character(std::size_t i) const
{
    if (!table_)
        throw Error("group '" + name_ + "' has no character table");
    if (i >= table_->size())
        throw Error("group '" + name_ + "': irreducible index " + std::to_string(i) + " out of range");
    return (*table_)[i];
}

nlohmann::json GroupData::to_json() const
{
    nlohmann::json doc;
    doc["name"] = name_;
    doc["order"] = order_.get_str();
    doc["classes"] = nlohmann::json::array();
    for (const auto& c : classes_)
        doc["classes"].push_back({{"label", c.label}, {"centralizer_order", c.centralizer_order.get_str()}});
    if (table_) {
        doc["character_table"] = nlohmann::json::array();
        for (const auto& row : *table_) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row)
                r.push_back(v.str());
            doc["character_table"].push_back(r);
        }
    }
    return doc;
}

GroupData GroupData::from_json(const nlohmann::json& doc, const std::string& source)
{
    if (!doc.is_object())
        throw Error(source + ": group document must be an object");
    for (const char* key : {"name", "order", "classes"})
        if (!doc.contains(key))
            throw Error(source + ": missing field '" + key + "'");
    std::vector<GroupClass> classes;
    if (!doc["classes"].is_array())
        throw Error(source + ": 'classes' must be an array");
    for (const auto& c : doc["classes"]) {
        if (!c.contains("label") || !c.contains("centralizer_order"))
            throw Error(source + ": every class needs 'label' and 'centralizer_order'");
        classes.push_back({c["label"].get<std::string>(),
                           json_integer(c["centralizer_order"], source + ": centralizer_order")});
    }
    std::optional<CharacterTable> table;
    if (doc.contains("character_table") && !doc["character_table"].is_null()) {
        CharacterTable t;
        for (const auto& row : doc["character_table"]) {
            std::vector<Cyclotomic> r;
            for (const auto& v : row)
                r.push_back(json_cyclotomic(v, source + ": character_table"));
            t.push_back(std::move(r));
        }
        table = std::move(t);
    }
    try {
        return GroupData(doc["name"].get<std::string>(), json_integer(doc["order"], source + ": order"),
                         std::move(classes), std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw Error(source + ": " + e.what());
    }
}

bool operator==(const GroupData& a, const GroupData& b)
{
    if (a.name_ != b.name_ || a.order_ != b.order_ || a.classes_.size() != b.classes_.size())
        return false;
    for (std::size_t i = 0; i < a.classes_.size(); ++i)
        if (a.classes_[i].label != b.classes_[i].label ||
            a.classes_[i].centralizer_order != b.classes_[i].centralizer_order)
            return false;
    return a.table_ == b.table_;
}

nlohmann::json parse_json_text(std::string_view text, const std::string& source)
{
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": invalid JSON (" +
                    e.what() + ")");
    }
}

nlohmann::json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(path.string() + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path.string());
}

GroupPtr load_group(const std::filesystem::path& path)
{
    auto doc = read_json_file(path);
    try {
        return std::make_shared<const GroupData>(GroupData::from_json(doc, path.string()));
    } catch (const nlohmann::json::exception& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

GroupPtr parse_group(std::string_view text, const std::string& source)
{
    auto doc = parse_json_text(text, source);
    try {
        return std::make_shared<const GroupData>(GroupData::from_json(doc, source));
    } catch (const nlohmann::json::exception& e) {
        throw Error(source + ": " + e.what());
    }
}

GroupPtr builtin_group(std::string_view name)
{
    auto same = [](std::string_view a, std::string_view b) {
        return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
                   return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
               });
    };
    static std::mutex mutex;
    static std::vector<std::pair<std::string, GroupPtr>> cache;
    for (const auto& fixture : fixtures::groups) {
        if (!same(fixture.name, name))
            continue;
        std::lock_guard lock(mutex);
        for (const auto& [n, g] : cache)
            if (n == fixture.name)
                return g;
        auto g = parse_group(fixture.json, "builtin:" + std::string(fixture.name));
        cache.emplace_back(std::string(fixture.name), g);
        return g;
    }
    throw Error("unknown builtin group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_group_names()
{
    std::vector<std::string> out;
    for (const auto& fixture : fixtures::groups)
        out.emplace_back(fixture.name);
    return out;
}

} // namespace qspin
