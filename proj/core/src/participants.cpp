#include "targetsim/participants.hpp"

#include "targetsim/errors.hpp"

namespace targetsim {

namespace {

// Euro-area NCB country codes, alphabetical.
const std::vector<std::string> kEurosystemNcbs = {
    "AT", "BE", "CY", "DE", "EE", "ES", "FI", "FR", "GR", "HR",
    "IE", "IT", "LT", "LU", "LV", "MT", "NL", "PT", "SI", "SK",
};

} // namespace

ParticipantRegistry ParticipantRegistry::from_labels(std::vector<std::string> labels) {
    if (labels.empty()) throw data_error("participants-empty", "participant set must not be empty");
    ParticipantRegistry reg;
    reg.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(reg.labels_.size()); ++i) {
        const std::string& l = reg.labels_[i];
        if (l.empty()) throw data_error("participants-blank-label", "participant labels must not be blank");
        if (!reg.index_.emplace(l, i).second)
            throw data_error("participants-duplicate-label", "duplicate participant label \"" + l + "\"");
    }
    return reg;
}

ParticipantRegistry ParticipantRegistry::eurosystem(bool with_ecb, bool with_xea) {
    std::vector<std::string> labels = kEurosystemNcbs;
    if (with_ecb) labels.push_back("ECB");
    if (with_xea) labels.push_back("XEA");
    return from_labels(std::move(labels));
}

const std::string& ParticipantRegistry::label(ParticipantId id) const {
    return labels_.at(static_cast<std::size_t>(id.index));
}

std::optional<ParticipantId> ParticipantRegistry::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return ParticipantId{it->second};
}

ParticipantId ParticipantRegistry::id(const std::string& label) const {
    auto found = find(label);
    if (!found) throw data_error("participants-unknown-label", "unknown participant \"" + label + "\"");
    return *found;
}

} // namespace targetsim
