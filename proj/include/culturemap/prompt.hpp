#pragma once

#include <optional>
#include <string>
#include <vector>

#include "culturemap/catalog.hpp"

namespace culturemap {

struct SamplingParams {
    double temperature = 0.0;
    std::optional<long> seed;
    int max_tokens = 256;
};

// One simulated-respondent request: the rendered prompt pair plus a stable
// id hashed over everything that influences the response.
struct PromptJob {
    std::string entity;
    std::string item_code;
    std::string system_prompt;
    std::string user_prompt;
    std::string job_id;
};

// "You are an average human being born in {name} and living in {name}. ..."
// The entity name is substituted verbatim after trimming.
std::string render_system_prompt(const CulturalEntity& entity);

// Question text plus a response-format instruction derived from the schema,
// so the reply stays inside the range the codec can parse.
std::string render_user_prompt(const SurveyItem& item);

std::string compute_job_id(const std::string& model_id, const std::string& entity,
                           const std::string& item_code, const std::string& system_prompt,
                           const std::string& user_prompt, const SamplingParams& sampling);

// |entities| x |items| jobs in catalog order (entities outer, items inner).
std::vector<PromptJob> build_batch(const Catalog& catalog, const std::string& model_id,
                                   const SamplingParams& sampling);

}  // namespace culturemap
