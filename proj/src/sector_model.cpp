#include <set>

#include "qspin/fock.hpp"

namespace qspin {

SectorModel::SectorModel(GroupPtr group, std::vector<Sector> sectors)
    : group_(std::move(group)), sectors_(std::move(sectors))
{
    if (!group_)
        throw Error("sector model needs a group");
    std::set<std::size_t> seen;
    for (const auto& s : sectors_) {
        if (s.class_index >= group_->class_count())
            throw Error("sector class index " + std::to_string(s.class_index) + " out of range");
        if (!seen.insert(s.class_index).second)
            throw Error("class '" + group_->labels().name(s.class_index) + "' has two sectors");
        if (s.d0 < 0 || s.d1 < 0)
            throw Error("sector dimensions must be nonnegative");
        even_dim_ += s.d0;
        odd_dim_ += s.d1;
    }
    for (int parity = 0; parity < 2; ++parity) {
        for (const auto& s : sectors_) {
            const std::string& label = group_->labels().name(s.class_index);
            for (int i = 0; i < (parity == 0 ? s.d0 : s.d1); ++i)
                basis_.push_back({s.class_index, parity, label + (parity == 0 ? ":e" : ":o") + std::to_string(i)});
        }
    }
    if (basis_.size() >= (1u << 16))
        throw Error("sector model too large");
}

SectorModel SectorModel::point(int d0, int d1)
{
    return SectorModel(builtin_group("trivial"), {{0, d0, d1}});
}

SectorModel SectorModel::from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                                   const std::string& source)
{
    try {
        if (!doc.is_object() || !doc.contains("group") || !doc.contains("sectors"))
            throw Error(source + ": sector model needs 'group' and 'sectors'");
        GroupPtr group;
        const auto& g = doc.at("group");
        if (g.is_object()) {
            group = std::make_shared<const GroupData>(GroupData::from_json(g, source + ": group"));
        } else if (g.is_string()) {
            std::filesystem::path ref = g.get<std::string>();
            std::filesystem::path resolved = ref.is_absolute() ? ref : base_dir / ref;
            if (std::filesystem::exists(resolved))
                group = load_group(resolved);
            else
                group = builtin_group(ref.string());
        } else {
            throw Error(source + ": 'group' must be a path, a builtin name or an object");
        }
        std::vector<Sector> sectors;
        for (const auto& s : doc.at("sectors")) {
            sectors.push_back({group->labels().index_of(s.at("class").get<std::string>()), s.value("d0", 0),
                               s.value("d1", 0)});
        }
        return SectorModel(group, std::move(sectors));
    } catch (const nlohmann::json::exception& e) {
        throw Error(source + ": " + e.what());
    }
}

SectorModel SectorModel::load(const std::filesystem::path& path)
{
    return from_json(read_json_file(path), path.parent_path(), path.string());
}

std::string SectorModel::describe() const
{
    std::string out = "group " + group_->name() + ";";
    for (const auto& s : sectors_)
        out += " " + group_->labels().name(s.class_index) + ":(" + std::to_string(s.d0) + "," + std::to_string(s.d1) + ")";
    return out;
}

Rational pairing(const DualVector& eta, const SectorVector& v)
{
    if (eta.size() != v.size())
        throw Error("pairing of vectors with different dimensions");
    Rational out = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += eta[i] * v[i];
    return out;
}

} // namespace qspin
