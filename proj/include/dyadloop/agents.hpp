// Utterance production for both sides of a dyad: chat-message rendering for
// the remote backend and the deterministic scripted belief agent used as
// the offline double.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyadloop/transcript.hpp"
#include "dyadloop/util.hpp"

namespace dyadloop {

struct ChatMessage {
    std::string role; // "system", "user", "assistant"
    std::string content;
};

// Maps a transcript to chat-completions messages from one side's point of
// view. The speaker's own past utterances become "assistant" turns and the
// partner's become "user" turns, so one backend can play either side.
std::vector<ChatMessage> render_messages(const std::vector<Utterance>& transcript,
                                         Speaker perspective, const std::string& system_prompt);

struct ScriptedParams {
    double initial_belief = 5.0; // [1,10]
    double coupling = 0.5;       // pull toward the partner's expressed belief, [0,1]
    double drift = 0.0;          // per-turn additive tendency
    double noise_sd = 0.0;
    std::uint64_t rng_seed = 0;
};

// Throws ConfigError if a field is outside its range.
void validate_scripted_params(const ScriptedParams& p);

struct ScriptedState {
    double belief;
    NormalSampler noise;

    explicit ScriptedState(const ScriptedParams& p)
        : belief(p.initial_belief), noise(p.rng_seed) {}
};

// One belief update plus the emitted utterance. With partner estimate p:
//   b' = clamp(b + coupling*(p - b) + drift + eps, 1, 10),  eps ~ N(0, sd^2)
// and p defaults to b when no partner estimate is available (seed turn or
// a partner text without a readable belief). The text is a band template
// carrying the machine-readable "[belief=x.xx]" marker.
std::string scripted_step(ScriptedState& state, const ScriptedParams& params, Speaker role,
                          std::optional<double> partner_belief_estimate);

// The marker appended to every scripted utterance.
std::string belief_marker(double belief);

// Band template for a belief level, without the marker. Exposed for tests.
std::string belief_band_text(Speaker role, double belief);

} // namespace dyadloop
