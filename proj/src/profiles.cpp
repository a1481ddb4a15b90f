#include "dyadloop/profiles.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dyadloop/errors.hpp"
#include "dyadloop/util.hpp"

namespace dyadloop {

using nlohmann::json;

const char* speaker_name(Speaker s) { return s == Speaker::user ? "user" : "chatbot"; }

Speaker speaker_from_name(const std::string& name) {
    if (name == "user") return Speaker::user;
    if (name == "chatbot") return Speaker::chatbot;
    throw ConfigError("unknown speaker \"" + name + "\"");
}

const PersonaProfile& ProfileSet::find(const std::string& id) const {
    for (const auto& p : users)
        if (p.id == id) return p;
    for (const auto& p : chatbots)
        if (p.id == id) return p;
    throw ConfigError("unknown profile id \"" + id + "\"");
}

namespace {

void validate_ladder(const std::vector<PersonaProfile>& list, Speaker role, const char* side) {
    std::set<int> seen;
    for (const auto& p : list) {
        if (p.role != role)
            throw ConfigError("profile \"" + p.id + "\": role does not match the " +
                              std::string(side) + " list");
        if (p.system_prompt.empty())
            throw ConfigError("profile \"" + p.id + "\": system_prompt is empty");
        if (p.severity_index < 0)
            throw ConfigError("profile \"" + p.id + "\": severity_index is negative");
        if (!seen.insert(p.severity_index).second)
            throw ConfigError("profile \"" + p.id + "\": duplicate severity_index " +
                              std::to_string(p.severity_index));
    }
    // contiguity from 0
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        if (!seen.count(i))
            throw ConfigError(std::string(side) + " profiles: severity_index values must be "
                              "contiguous from 0 (missing " + std::to_string(i) + ")");
    }
}

PersonaProfile parse_profile(const json& j, Speaker role, const std::string& context) {
    for (const char* field : {"id", "label", "severity_index", "system_prompt"})
        if (!j.contains(field))
            throw ConfigError(context + ": missing field \"" + field + "\"");
    PersonaProfile p;
    p.id = j.at("id").get<std::string>();
    p.role = role;
    p.label = j.at("label").get<std::string>();
    p.severity_index = j.at("severity_index").get<int>();
    p.system_prompt = j.at("system_prompt").get<std::string>();
    return p;
}

} // namespace

void validate_profiles(const ProfileSet& set) {
    std::set<std::string> ids;
    for (const auto* list : {&set.users, &set.chatbots})
        for (const auto& p : *list) {
            if (p.id.empty()) throw ConfigError("profile with empty id");
            if (!ids.insert(p.id).second)
                throw ConfigError("duplicate profile id \"" + p.id + "\"");
        }
    validate_ladder(set.users, Speaker::user, "user");
    validate_ladder(set.chatbots, Speaker::chatbot, "chatbot");
}

ProfileSet load_profiles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("profiles file not readable: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("profiles file " + path + ": " + e.what());
    }
    if (!doc.contains("users") || !doc.contains("chatbots"))
        throw ConfigError("profiles file " + path + ": expected top-level \"users\" and \"chatbots\"");

    ProfileSet set;
    for (const auto& j : doc.at("users"))
        set.users.push_back(parse_profile(j, Speaker::user, path + " (users)"));
    for (const auto& j : doc.at("chatbots"))
        set.chatbots.push_back(parse_profile(j, Speaker::chatbot, path + " (chatbots)"));
    validate_profiles(set);
    return set;
}

namespace {

json profiles_to_json(const ProfileSet& set) {
    json doc;
    for (const auto* side : {&set.users, &set.chatbots}) {
        json arr = json::array();
        for (const auto& p : *side) {
            arr.push_back({{"id", p.id},
                           {"label", p.label},
                           {"severity_index", p.severity_index},
                           {"system_prompt", p.system_prompt}});
        }
        doc[side == &set.users ? "users" : "chatbots"] = std::move(arr);
    }
    return doc;
}

} // namespace

void write_profiles(const ProfileSet& set, const std::string& path) {
    validate_profiles(set);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write profiles file: " + path);
    out << profiles_to_json(set).dump(2) << "\n";
}

std::string profiles_hash(const ProfileSet& set) {
    std::uint64_t h = StableHash{}.mix(profiles_to_json(set).dump()).value();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<DyadConfig> enumerate_dyads(const ProfileSet& set, int n_runs, int n_utterances,
                                        const std::string& seed_utterance) {
    if (set.users.empty()) throw ConfigError("enumerate_dyads: no user profiles");
    if (set.chatbots.empty()) throw ConfigError("enumerate_dyads: no chatbot profiles");
    if (n_runs < 1) throw ConfigError("enumerate_dyads: n_runs must be >= 1");
    if (n_utterances < 2) throw ConfigError("enumerate_dyads: n_utterances must be >= 2");

    auto by_severity = [](std::vector<PersonaProfile> v) {
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.severity_index < b.severity_index; });
        return v;
    };
    const auto users = by_severity(set.users);
    const auto chatbots = by_severity(set.chatbots);

    std::vector<DyadConfig> dyads;
    dyads.reserve(users.size() * chatbots.size());
    for (const auto& u : users) {
        for (const auto& c : chatbots) {
            DyadConfig d;
            d.dyad_id = "u" + std::to_string(u.severity_index) + "-c" +
                        std::to_string(c.severity_index);
            d.user_profile_id = u.id;
            d.chatbot_profile_id = c.id;
            d.n_runs = n_runs;
            d.n_utterances = n_utterances;
            d.seed_utterance = seed_utterance;
            dyads.push_back(std::move(d));
        }
    }
    return dyads;
}

std::string build_system_prompt(const PersonaProfile& profile) { return profile.system_prompt; }

} // namespace dyadloop
