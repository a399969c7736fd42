#pragma once

#include "focalforge/code_model.hpp"
#include "focalforge/repo_miner.hpp"

#include <nlohmann/json.hpp>

// JSON mappings for the data model. Method bodies are stored under `body`.

namespace focalforge {

void to_json(nlohmann::json& j, const Parameter& p);
void from_json(const nlohmann::json& j, Parameter& p);

void to_json(nlohmann::json& j, const MethodModel& m);
void from_json(const nlohmann::json& j, MethodModel& m);

void to_json(nlohmann::json& j, const FieldModel& f);
void from_json(const nlohmann::json& j, FieldModel& f);

void to_json(nlohmann::json& j, const MemberSignature& m);
void from_json(const nlohmann::json& j, MemberSignature& m);

void to_json(nlohmann::json& j, const FocalClassSummary& c);
void from_json(const nlohmann::json& j, FocalClassSummary& c);

void to_json(nlohmann::json& j, const AttachedContext& c);
void from_json(const nlohmann::json& j, AttachedContext& c);

void to_json(nlohmann::json& j, const MappedPair& p);
void from_json(const nlohmann::json& j, MappedPair& p);

void to_json(nlohmann::json& j, const MiningReport& r);

}  // namespace focalforge
