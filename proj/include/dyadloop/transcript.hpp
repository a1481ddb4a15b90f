// Conversation records shared by the engine, judge, and persistence layers.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyadloop/profiles.hpp"

namespace dyadloop {

struct Utterance {
    std::string run_id;
    std::string dyad_id;
    int turn_index = 0;
    Speaker speaker = Speaker::user; // user iff turn_index is even
    std::string text;
};

enum class RunStatus { ok, failed };

struct TranscriptMeta {
    std::string user_profile_id;
    std::string chatbot_profile_id;
    std::string backend_kind; // "scripted" or "remote"
    std::string model_name;   // "" for scripted
    double temperature = 0.0;
    std::uint64_t seed = 0;
    std::string created_utc; // "" for fully offline runs, keeping output reproducible
    RunStatus status = RunStatus::ok;
    std::string error; // nonempty iff status == failed
};

struct Transcript {
    std::string run_id;
    std::string dyad_id;
    std::vector<Utterance> utterances;
    TranscriptMeta meta;
};

// Checks strict alternation starting with a user turn and contiguous
// turn_index values; throws RunError describing the first violation.
void validate_alternation(const std::vector<Utterance>& utterances);

} // namespace dyadloop
