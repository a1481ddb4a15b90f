// Persona profiles for the two sides of a dyad, and the dyad grid built
// from their Cartesian product.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dyadloop {

enum class Speaker { user, chatbot };

const char* speaker_name(Speaker s);
Speaker speaker_from_name(const std::string& name);

struct PersonaProfile {
    std::string id;
    Speaker role = Speaker::user;
    std::string label;
    int severity_index = 0; // ordinal position within the role's ladder
    std::string system_prompt;
};

struct ProfileSet {
    std::vector<PersonaProfile> users;
    std::vector<PersonaProfile> chatbots;

    const PersonaProfile& find(const std::string& id) const;
};

struct DyadConfig {
    std::string dyad_id; // "u{i}-c{j}" by severity index
    std::string user_profile_id;
    std::string chatbot_profile_id;
    int n_runs = 1;
    int n_utterances = 2;
    std::string seed_utterance;
};

// Throws ConfigError naming the offending profile id on duplicate ids,
// empty prompts, role mismatches, or a broken severity ladder.
void validate_profiles(const ProfileSet& set);

ProfileSet load_profiles(const std::string& path);
void write_profiles(const ProfileSet& set, const std::string& path);

// Stable content hash of the set, recorded in run manifests.
std::string profiles_hash(const ProfileSet& set);

// Full users x chatbots product, user-major, both roles ordered by
// severity_index. Throws ConfigError on an empty side.
std::vector<DyadConfig> enumerate_dyads(const ProfileSet& set, int n_runs, int n_utterances,
                                        const std::string& seed_utterance);

// The exact system message for this persona. Currently the stored prompt
// verbatim; kept as a seam so prompt assembly stays in one place.
std::string build_system_prompt(const PersonaProfile& profile);

} // namespace dyadloop
