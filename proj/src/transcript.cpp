#include "dyadloop/transcript.hpp"

#include "dyadloop/errors.hpp"

namespace dyadloop {

void validate_alternation(const std::vector<Utterance>& utterances) {
    for (std::size_t k = 0; k < utterances.size(); ++k) {
        const auto& u = utterances[k];
        if (u.turn_index != static_cast<int>(k))
            throw RunError("transcript: turn_index " + std::to_string(u.turn_index) +
                           " at position " + std::to_string(k));
        const Speaker expected = (k % 2 == 0) ? Speaker::user : Speaker::chatbot;
        if (u.speaker != expected)
            throw RunError("transcript: speaker at turn " + std::to_string(k) + " should be " +
                           speaker_name(expected));
        if (u.text.empty())
            throw RunError("transcript: empty text at turn " + std::to_string(k));
    }
}

} // namespace dyadloop
