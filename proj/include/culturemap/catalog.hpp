#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "culturemap/errors.hpp"

namespace culturemap {

// The eight cultural regions. The set is closed: region membership of every
// entity must resolve to one of these.
enum class Region {
    AfricanIslamic,
    Confucian,
    LatinAmerica,
    CatholicEurope,
    EnglishSpeaking,
    OrthodoxEurope,
    ProtestantEurope,
    WestSouthAsia,
};

inline constexpr std::array<Region, 8> kAllRegions = {
    Region::AfricanIslamic,   Region::Confucian,      Region::LatinAmerica,
    Region::CatholicEurope,   Region::EnglishSpeaking, Region::OrthodoxEurope,
    Region::ProtestantEurope, Region::WestSouthAsia,
};

std::string_view region_name(Region r);
std::optional<Region> region_from_name(std::string_view name);

enum class Dimension {
    TraditionalSecular,
    SurvivalSelfExpression,
};

inline constexpr std::array<Dimension, 2> kAllDimensions = {
    Dimension::TraditionalSecular,
    Dimension::SurvivalSelfExpression,
};

// Stable machine name ("traditional_secular" / "survival_self_expression").
std::string_view dimension_name(Dimension d);
// Short column name used in CSV exports ("trad_sec" / "surv_self").
std::string_view dimension_csv_name(Dimension d);
// Human axis label for figures.
std::string_view dimension_axis_label(Dimension d);
std::optional<Dimension> dimension_from_name(std::string_view name);

struct CulturalEntity {
    std::string display_name;
    Region region;
    std::optional<std::string> iso3;  // geo join key; absent for non-ISO entries
    bool distinct_polity = true;      // false for the SAR/Taiwan comparison entries
};

struct LikertSchema {
    double min_value = 1;
    double max_value = 10;
};

struct MultiSelectOption {
    std::string label;
    double weight = 0;  // signed rubric weight added when the option is picked
    std::vector<std::string> aliases;
};

struct MultiSelectSchema {
    std::vector<MultiSelectOption> options;
    int max_picks = 5;
    double lo = -2;
    double hi = 2;
};

struct PickTwoOption {
    std::string label;
    std::vector<std::string> aliases;
};

struct PickTwoSchema {
    std::vector<PickTwoOption> options;     // exactly four aims, 1-indexed
    std::vector<int> materialist_options;   // option indices forming the materialist pole
    double materialist_score = 1;
    double mixed_score = 2;
    double post_materialist_score = 3;
    double lo = 1;
    double hi = 3;
};

using ResponseSchema = std::variant<LikertSchema, MultiSelectSchema, PickTwoSchema>;

struct SurveyItem {
    std::string code;
    std::string question_text;
    ResponseSchema schema;
    std::vector<Dimension> dimensions;  // one entry in the shipped catalog; dual allowed

    // Theoretical bounds of the encoded value, regardless of schema kind.
    double lower_bound() const;
    double upper_bound() const;
    double midrange() const { return (lower_bound() + upper_bound()) / 2.0; }
    bool is_likert() const { return std::holds_alternative<LikertSchema>(schema); }
};

struct LoadingEntry {
    double weight = 1.0;  // magnitude, > 0
    int sign = 1;         // +1 / -1, orientation toward the dimension's positive pole
};

// Per (item, dimension) factor loadings applied after standardization.
class FactorLoadingTable {
public:
    void set(const std::string& item_code, Dimension d, LoadingEntry entry);
    const LoadingEntry* find(const std::string& item_code, Dimension d) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<std::string, Dimension>, LoadingEntry> entries_;
};

struct Catalog {
    std::vector<CulturalEntity> entities;
    std::vector<SurveyItem> items;
    FactorLoadingTable loadings;
    std::map<std::string, std::string> synonyms;  // alias -> display_name
    std::string source_label;

    const CulturalEntity* find_entity(std::string_view display_name) const;
    const SurveyItem* find_item(std::string_view code) const;
    // find_entity plus trimming and synonym resolution; nullptr when unknown.
    const CulturalEntity* resolve_entity(std::string_view name) const;

    // Sub-catalog containing only the named entities (names resolved through
    // synonyms). Throws UnknownEntityError for names that do not resolve.
    Catalog restrict_to(const std::vector<std::string>& entity_names) const;
};

struct CatalogLoadOptions {
    std::optional<std::filesystem::path> region_overrides;
    std::optional<std::filesystem::path> iso_synonyms;
    std::optional<std::filesystem::path> loading_overrides;
    // The shipped catalog must satisfy the full count invariants; harnesses
    // loading deliberately reduced files can opt out.
    bool enforce_counts = true;
};

// Parses and validates the catalog file. Region lists with two candidate
// regions are resolved through the override file, defaulting to the first
// listing. Throws MissingFileError / ParseError / ValidationError.
Catalog load_catalog(const std::filesystem::path& path, const CatalogLoadOptions& options = {});

struct ValidationReport {
    int total = 0;
    int distinct_polities = 0;
    std::map<Region, int> region_counts;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the taxonomy counts (126 entities, 123 polities, fixed per-region
// counts) plus item-level invariants. Violations are reported, not thrown.
ValidationReport validate_catalog(const Catalog& catalog);

// Region of a named entity. Throws UnknownEntityError.
Region region_of(const Catalog& catalog, std::string_view entity_name);

// Expected taxonomy shape used by validate_catalog.
inline constexpr int kExpectedEntityCount = 126;
inline constexpr int kExpectedPolityCount = 123;
inline constexpr int kExpectedItemCount = 10;
int expected_region_count(Region r);

}  // namespace culturemap
