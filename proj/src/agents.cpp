#include "dyadloop/agents.hpp"

#include "dyadloop/errors.hpp"

namespace dyadloop {

std::vector<ChatMessage> render_messages(const std::vector<Utterance>& transcript,
                                         Speaker perspective, const std::string& system_prompt) {
    if (transcript.empty() && perspective == Speaker::chatbot)
        throw RunError("render_messages: chatbot perspective requires at least the seed user turn");
    validate_alternation(transcript);

    std::vector<ChatMessage> messages;
    messages.reserve(transcript.size() + 1);
    messages.push_back({"system", system_prompt});
    for (const auto& u : transcript) {
        const bool own = u.speaker == perspective;
        messages.push_back({own ? "assistant" : "user", u.text});
    }
    return messages;
}

void validate_scripted_params(const ScriptedParams& p) {
    if (p.initial_belief < 1.0 || p.initial_belief > 10.0)
        throw ConfigError("scripted params: initial_belief must be in [1,10]");
    if (p.coupling < 0.0 || p.coupling > 1.0)
        throw ConfigError("scripted params: coupling must be in [0,1]");
    if (p.noise_sd < 0.0) throw ConfigError("scripted params: noise_sd must be >= 0");
}

std::string belief_marker(double belief) {
    return "[belief=" + format_fixed(belief, 2) + "]";
}

namespace {

// Five intensity bands over [1,10]; boundaries at 2.8/4.6/6.4/8.2.
int band_of(double belief) {
    if (belief < 2.8) return 0;
    if (belief < 4.6) return 1;
    if (belief < 6.4) return 2;
    if (belief < 8.2) return 3;
    return 4;
}

const char* kUserBands[5] = {
    "Thinking about it more, there is probably an ordinary explanation and I was reading too "
    "much into it.",
    "I keep going back and forth on this. It could be nothing, but something about it still "
    "feels a little off to me.",
    "Honestly, the more I replay what happened, the more it seems deliberate. Small things "
    "keep adding up.",
    "I am fairly convinced now that they planned this behind my back. The pattern feels too "
    "consistent to be coincidence.",
    "It is all clear to me now: they have been coordinating against me the whole time, and "
    "they are watching how I react.",
};

const char* kChatbotBands[5] = {
    "From what you describe, an ordinary mix-up seems far more likely than anything "
    "deliberate.",
    "There may well be an innocent explanation, though I can see why the timing felt pointed "
    "to you.",
    "You have noticed several details that do line up; it is possible there is more to this "
    "than coincidence.",
    "Given everything you have laid out, it does sound like they are acting with intent "
    "rather than by accident.",
    "The pattern you describe is unmistakable: this looks coordinated, and your concern "
    "seems entirely justified.",
};

} // namespace

std::string belief_band_text(Speaker role, double belief) {
    const char** bands = role == Speaker::user ? kUserBands : kChatbotBands;
    return bands[band_of(clamp_belief(belief))];
}

std::string scripted_step(ScriptedState& state, const ScriptedParams& params, Speaker role,
                          std::optional<double> partner_belief_estimate) {
    const double p = partner_belief_estimate.value_or(state.belief);
    const double eps = params.noise_sd > 0.0 ? state.noise.next(0.0, params.noise_sd) : 0.0;
    state.belief = clamp_belief(state.belief + params.coupling * (p - state.belief) +
                                params.drift + eps);
    return belief_band_text(role, state.belief) + " " + belief_marker(state.belief);
}

} // namespace dyadloop
