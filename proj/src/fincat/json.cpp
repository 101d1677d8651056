#include "fh/fincat/json.hpp"

#include <set>

namespace fh::fincat {

namespace {

// Splits "a<sep>b" at the unique position where both halves are known names.
// Identifiers may themselves contain the separator, so every split is tried.
std::pair<std::string, std::string> split_key(const std::string& key, const std::string& sep,
                                              const std::set<std::string>& known, const char* what)
{
    std::vector<std::pair<std::string, std::string>> found;
    for (auto pos = key.find(sep); pos != std::string::npos; pos = key.find(sep, pos + 1)) {
        std::string a = key.substr(0, pos);
        std::string b = key.substr(pos + sep.size());
        if (known.count(a) && known.count(b))
            found.push_back({a, b});
    }
    if (found.size() == 1)
        return found.front();
    // Fall back to the first separator so that dangling names reach validation.
    auto pos = key.find(sep);
    if (found.empty() && pos != std::string::npos)
        return {key.substr(0, pos), key.substr(pos + sep.size())};
    throw SchemaError(std::string("cannot parse ") + what + " key '" + key + "'");
}

const nlohmann::json& member(const nlohmann::json& doc, const char* name)
{
    if (!doc.contains(name))
        throw SchemaError(std::string("missing field '") + name + "'");
    return doc.at(name);
}

} // namespace

CategoryTable category_table_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw SchemaError("category document must be an object");
    try {
        CategoryTable t;
        t.objects = member(doc, "objects").get<std::vector<std::string>>();
        std::set<std::string> objects(t.objects.begin(), t.objects.end());
        std::set<std::string> morphisms;
        for (const auto& [key, list] : member(doc, "homs").items()) {
            auto hom = split_key(key, "->", objects, "hom");
            auto names = list.get<std::vector<std::string>>();
            auto& slot = t.homs[hom];
            slot.insert(slot.end(), names.begin(), names.end());
            morphisms.insert(names.begin(), names.end());
        }
        if (doc.contains("compose")) {
            for (const auto& [key, value] : doc.at("compose").items())
                t.compose[split_key(key, "*", morphisms, "compose")] = value.get<std::string>();
        }
        for (const auto& [x, u] : member(doc, "units").items())
            t.units[x] = u.get<std::string>();
        if (doc.contains("truncation"))
            t.truncation = doc.at("truncation").get<std::string>();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed category document: ") + e.what());
    }
}

nlohmann::json to_json(const CategoryTable& table)
{
    nlohmann::json doc;
    doc["objects"] = table.objects;
    doc["homs"] = nlohmann::json::object();
    for (const auto& [hom, list] : table.homs)
        doc["homs"][hom.first + "->" + hom.second] = list;
    doc["compose"] = nlohmann::json::object();
    for (const auto& [pair, h] : table.compose)
        doc["compose"][pair.first + "*" + pair.second] = h;
    doc["units"] = table.units;
    if (table.truncation)
        doc["truncation"] = *table.truncation;
    return doc;
}

} // namespace fh::fincat
