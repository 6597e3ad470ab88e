#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace targetsim {

/// Index of a participant row in the balance matrix. Indices are stable
/// and contiguous in [0, n); labels are presentation only.
struct ParticipantId {
    int index = 0;
    auto operator<=>(const ParticipantId&) const = default;
};

/// Participant set of a ledger: the euro-area NCBs by default, optionally
/// extended with an ECB row and an extra-euro-area row, or any custom set.
class ParticipantRegistry {
public:
    static ParticipantRegistry from_labels(std::vector<std::string> labels);
    /// The 20 euro-area NCBs; `with_ecb` appends "ECB", `with_xea`
    /// appends "XEA" for flows with the rest of the world.
    static ParticipantRegistry eurosystem(bool with_ecb = false, bool with_xea = false);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(ParticipantId id) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<ParticipantId> find(const std::string& label) const;
    /// Throws a data error when the label is unknown.
    ParticipantId id(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

} // namespace targetsim
