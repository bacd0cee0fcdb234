#include "culturemap/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "culturemap/text.hpp"

namespace culturemap {

using nlohmann::json;

namespace {

struct RegionNamePair {
    Region region;
    std::string_view name;
};

constexpr std::array<RegionNamePair, 8> kRegionNames = {{
    {Region::AfricanIslamic, "African-Islamic"},
    {Region::Confucian, "Confucian"},
    {Region::LatinAmerica, "Latin America"},
    {Region::CatholicEurope, "Catholic Europe"},
    {Region::EnglishSpeaking, "English-Speaking"},
    {Region::OrthodoxEurope, "Orthodox Europe"},
    {Region::ProtestantEurope, "Protestant Europe"},
    {Region::WestSouthAsia, "West & South Asia"},
}};

json load_json_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw MissingFileError(path.string());
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
}

ResponseSchema parse_schema(const json& j, const std::string& code) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "likert") {
        LikertSchema s;
        s.min_value = j.at("min").get<double>();
        s.max_value = j.at("max").get<double>();
        return s;
    }
    if (kind == "multi_select") {
        MultiSelectSchema s;
        s.max_picks = j.at("max_picks").get<int>();
        s.lo = j.at("bounds").at(0).get<double>();
        s.hi = j.at("bounds").at(1).get<double>();
        for (const auto& o : j.at("options")) {
            MultiSelectOption opt;
            opt.label = o.at("label").get<std::string>();
            opt.weight = o.at("weight").get<double>();
            if (o.contains("aliases")) {
                opt.aliases = o.at("aliases").get<std::vector<std::string>>();
            }
            s.options.push_back(std::move(opt));
        }
        return s;
    }
    if (kind == "pick_two") {
        PickTwoSchema s;
        s.lo = j.at("bounds").at(0).get<double>();
        s.hi = j.at("bounds").at(1).get<double>();
        for (const auto& o : j.at("options")) {
            PickTwoOption opt;
            opt.label = o.at("label").get<std::string>();
            if (o.contains("aliases")) {
                opt.aliases = o.at("aliases").get<std::vector<std::string>>();
            }
            s.options.push_back(std::move(opt));
        }
        s.materialist_options = j.at("materialist_options").get<std::vector<int>>();
        if (j.contains("scores")) {
            const auto& sc = j.at("scores");
            s.materialist_score = sc.at("materialist").get<double>();
            s.mixed_score = sc.at("mixed").get<double>();
            s.post_materialist_score = sc.at("post_materialist").get<double>();
        }
        return s;
    }
    throw ParseError("item " + code + ": unknown schema kind '" + kind + "'");
}

Dimension parse_dimension(const json& j, const std::string& context) {
    auto d = dimension_from_name(j.get<std::string>());
    if (!d) {
        throw ParseError(context + ": unknown dimension '" + j.get<std::string>() + "'");
    }
    return *d;
}

void parse_loadings(const json& arr, FactorLoadingTable& table) {
    for (const auto& l : arr) {
        const std::string item = l.at("item").get<std::string>();
        Dimension dim = parse_dimension(l.at("dimension"), "loading for " + item);
        LoadingEntry entry;
        entry.weight = l.at("weight").get<double>();
        entry.sign = l.at("sign").get<int>();
        if (entry.weight <= 0) {
            throw ParseError("loading for " + item + ": weight must be > 0");
        }
        if (entry.sign != 1 && entry.sign != -1) {
            throw ParseError("loading for " + item + ": sign must be +1 or -1");
        }
        table.set(item, dim, entry);
    }
}

}  // namespace

std::string_view region_name(Region r) {
    for (const auto& p : kRegionNames) {
        if (p.region == r) return p.name;
    }
    return "?";
}

std::optional<Region> region_from_name(std::string_view name) {
    for (const auto& p : kRegionNames) {
        if (p.name == name) return p.region;
    }
    return std::nullopt;
}

std::string_view dimension_name(Dimension d) {
    return d == Dimension::TraditionalSecular ? "traditional_secular"
                                              : "survival_self_expression";
}

std::string_view dimension_csv_name(Dimension d) {
    return d == Dimension::TraditionalSecular ? "trad_sec" : "surv_self";
}

std::string_view dimension_axis_label(Dimension d) {
    return d == Dimension::TraditionalSecular
               ? "Traditional vs. Secular-Rational Values"
               : "Survival vs. Self-Expression Values";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
    if (name == "traditional_secular" || name == "trad_sec") {
        return Dimension::TraditionalSecular;
    }
    if (name == "survival_self_expression" || name == "surv_self") {
        return Dimension::SurvivalSelfExpression;
    }
    return std::nullopt;
}

int expected_region_count(Region r) {
    switch (r) {
        case Region::AfricanIslamic: return 26;
        case Region::Confucian: return 9;
        case Region::LatinAmerica: return 19;
        case Region::CatholicEurope: return 12;
        case Region::EnglishSpeaking: return 8;
        case Region::OrthodoxEurope: return 15;
        case Region::ProtestantEurope: return 17;
        case Region::WestSouthAsia: return 20;
    }
    return 0;
}

double SurveyItem::lower_bound() const {
    if (const auto* l = std::get_if<LikertSchema>(&schema)) return l->min_value;
    if (const auto* m = std::get_if<MultiSelectSchema>(&schema)) return m->lo;
    return std::get<PickTwoSchema>(schema).lo;
}

double SurveyItem::upper_bound() const {
    if (const auto* l = std::get_if<LikertSchema>(&schema)) return l->max_value;
    if (const auto* m = std::get_if<MultiSelectSchema>(&schema)) return m->hi;
    return std::get<PickTwoSchema>(schema).hi;
}

void FactorLoadingTable::set(const std::string& item_code, Dimension d, LoadingEntry entry) {
    entries_[{item_code, d}] = entry;
}

const LoadingEntry* FactorLoadingTable::find(const std::string& item_code, Dimension d) const {
    auto it = entries_.find({item_code, d});
    return it == entries_.end() ? nullptr : &it->second;
}

const CulturalEntity* Catalog::find_entity(std::string_view display_name) const {
    for (const auto& e : entities) {
        if (e.display_name == display_name) return &e;
    }
    return nullptr;
}

const SurveyItem* Catalog::find_item(std::string_view code) const {
    for (const auto& i : items) {
        if (i.code == code) return &i;
    }
    return nullptr;
}

const CulturalEntity* Catalog::resolve_entity(std::string_view name) const {
    const std::string trimmed = trim(name);
    if (const auto* e = find_entity(trimmed)) return e;
    auto it = synonyms.find(trimmed);
    if (it != synonyms.end()) {
        return find_entity(it->second);
    }
    return nullptr;
}

Catalog Catalog::restrict_to(const std::vector<std::string>& entity_names) const {
    Catalog out = *this;
    out.entities.clear();
    std::set<std::string> seen;
    for (const auto& name : entity_names) {
        const auto* e = resolve_entity(name);
        if (!e) throw UnknownEntityError(trim(name));
        if (seen.insert(e->display_name).second) {
            out.entities.push_back(*e);
        }
    }
    return out;
}

Catalog load_catalog(const std::filesystem::path& path, const CatalogLoadOptions& options) {
    const json root = load_json_file(path);

    std::map<std::string, std::string> region_overrides;
    if (options.region_overrides) {
        const json j = load_json_file(*options.region_overrides);
        for (const auto& [name, region] : j.at("overrides").items()) {
            region_overrides[name] = region.get<std::string>();
        }
    }

    Catalog catalog;
    if (root.contains("source_label")) {
        catalog.source_label = root.at("source_label").get<std::string>();
    }

    std::vector<std::string> violations;

    for (const auto& e : root.at("entities")) {
        CulturalEntity entity;
        entity.display_name = trim(e.at("name").get<std::string>());

        // "region" is either a single name or the list of candidate regions
        // from the source taxonomy; overrides pick one, first listing wins
        // otherwise.
        std::vector<std::string> listed;
        const auto& r = e.at("region");
        if (r.is_array()) {
            for (const auto& v : r) listed.push_back(v.get<std::string>());
        } else {
            listed.push_back(r.get<std::string>());
        }
        if (listed.empty()) {
            throw ParseError("entity " + entity.display_name + ": no region listed");
        }
        std::string chosen = listed.front();
        auto ov = region_overrides.find(entity.display_name);
        if (ov != region_overrides.end()) {
            bool listed_region = std::find(listed.begin(), listed.end(), ov->second) != listed.end();
            if (!listed_region) {
                violations.push_back("override for " + entity.display_name + " names region '" +
                                     ov->second + "' not listed for the entity");
            }
            chosen = ov->second;
        }
        auto region = region_from_name(chosen);
        if (!region) {
            throw ParseError("entity " + entity.display_name + ": unknown region '" + chosen + "'");
        }
        entity.region = *region;

        if (e.contains("iso3") && !e.at("iso3").is_null()) {
            entity.iso3 = e.at("iso3").get<std::string>();
        }
        if (e.contains("distinct_polity")) {
            entity.distinct_polity = e.at("distinct_polity").get<bool>();
        }
        catalog.entities.push_back(std::move(entity));
    }

    for (const auto& i : root.at("items")) {
        SurveyItem item;
        item.code = i.at("code").get<std::string>();
        item.question_text = i.at("question").get<std::string>();
        item.schema = parse_schema(i.at("schema"), item.code);
        for (const auto& d : i.at("dimensions")) {
            item.dimensions.push_back(parse_dimension(d, "item " + item.code));
        }
        catalog.items.push_back(std::move(item));
    }

    if (root.contains("loadings")) {
        parse_loadings(root.at("loadings"), catalog.loadings);
    }
    if (options.loading_overrides) {
        const json j = load_json_file(*options.loading_overrides);
        parse_loadings(j.at("loadings"), catalog.loadings);
    }

    if (options.iso_synonyms) {
        const json j = load_json_file(*options.iso_synonyms);
        for (const auto& [alias, canonical] : j.at("synonyms").items()) {
            catalog.synonyms[alias] = canonical.get<std::string>();
        }
    }

    ValidationReport report = validate_catalog(catalog);
    for (const auto& v : report.violations) violations.push_back(v);
    if (!options.enforce_counts) {
        // Keep only structural violations (duplicates, bad bounds); drop the
        // shipped-count checks so reduced harness catalogs can load.
        std::vector<std::string> kept;
        for (const auto& v : violations) {
            if (v.find("count") == std::string::npos) kept.push_back(v);
        }
        violations = std::move(kept);
    }
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return catalog;
}

ValidationReport validate_catalog(const Catalog& catalog) {
    ValidationReport report;
    report.total = static_cast<int>(catalog.entities.size());
    for (Region r : kAllRegions) report.region_counts[r] = 0;

    std::set<std::string> names;
    for (const auto& e : catalog.entities) {
        report.region_counts[e.region]++;
        if (e.distinct_polity) report.distinct_polities++;
        if (!names.insert(e.display_name).second) {
            report.violations.push_back("duplicate entity name: " + e.display_name);
        }
        if (e.display_name.empty()) {
            report.violations.push_back("entity with empty display name");
        }
    }
    if (report.total != kExpectedEntityCount) {
        report.violations.push_back("entity count " + std::to_string(report.total) + " != " +
                                    std::to_string(kExpectedEntityCount));
    }
    if (report.distinct_polities != kExpectedPolityCount) {
        report.violations.push_back("distinct polity count " +
                                    std::to_string(report.distinct_polities) + " != " +
                                    std::to_string(kExpectedPolityCount));
    }
    for (Region r : kAllRegions) {
        const int want = expected_region_count(r);
        const int got = report.region_counts[r];
        if (got != want) {
            report.violations.push_back(std::string(region_name(r)) + " count " +
                                        std::to_string(got) + " != " + std::to_string(want));
        }
    }

    std::set<std::string> codes;
    for (const auto& item : catalog.items) {
        if (!codes.insert(item.code).second) {
            report.violations.push_back("duplicate item code: " + item.code);
        }
        const double lo = item.lower_bound();
        const double hi = item.upper_bound();
        if (!(lo < hi)) {
            report.violations.push_back("item " + item.code + ": bounds [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "] are degenerate");
        }
        if (item.dimensions.empty()) {
            report.violations.push_back("item " + item.code + ": no dimension assigned");
        }
        if (const auto* m = std::get_if<MultiSelectSchema>(&item.schema)) {
            // Every reachable rubric sum must stay within the declared bounds.
            double pos = 0, neg = 0;
            std::vector<double> weights;
            for (const auto& o : m->options) weights.push_back(o.weight);
            std::sort(weights.begin(), weights.end());
            const int picks = std::min<int>(m->max_picks, static_cast<int>(weights.size()));
            for (int k = 0; k < picks; ++k) {
                neg += weights[static_cast<std::size_t>(k)];
                pos += weights[weights.size() - 1 - static_cast<std::size_t>(k)];
            }
            // Clamping keeps outputs in range regardless, but a rubric that
            // exceeds its declared bounds is a seed-data bug worth flagging.
            if (std::min(neg, 0.0) < m->lo || std::max(pos, 0.0) > m->hi) {
                report.violations.push_back("item " + item.code +
                                            ": rubric range exceeds declared bounds");
            }
        }
        if (const auto* p = std::get_if<PickTwoSchema>(&item.schema)) {
            if (p->options.size() != 4) {
                report.violations.push_back("item " + item.code + ": pick-two needs 4 options");
            }
            for (double v : {p->materialist_score, p->mixed_score, p->post_materialist_score}) {
                if (v < p->lo || v > p->hi) {
                    report.violations.push_back("item " + item.code +
                                                ": rubric score outside declared bounds");
                }
            }
        }
        for (Dimension d : item.dimensions) {
            if (catalog.loadings.size() > 0 && !catalog.loadings.find(item.code, d)) {
                report.violations.push_back("item " + item.code + ": no loading for dimension " +
                                            std::string(dimension_name(d)));
            }
        }
    }
    if (static_cast<int>(catalog.items.size()) != kExpectedItemCount) {
        report.violations.push_back("item count " + std::to_string(catalog.items.size()) +
                                    " != " + std::to_string(kExpectedItemCount));
    }
    return report;
}

Region region_of(const Catalog& catalog, std::string_view entity_name) {
    const auto* e = catalog.resolve_entity(entity_name);
    if (!e) throw UnknownEntityError(std::string(entity_name));
    return e->region;
}

}  // namespace culturemap
