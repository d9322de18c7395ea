#include "pptseq/baudhayana.hpp"

namespace pptseq {

std::vector<std::size_t> GapSequence::positions() const {
    std::vector<std::size_t> out;
    if (!first_position) return out;
    out.reserve(gaps.size() + 1);
    std::size_t pos = *first_position;
    out.push_back(pos);
    for (u64 g : gaps) {
        pos += g;
        out.push_back(pos);
    }
    return out;
}

GapSequence gap_sequence(const ClassSequence& cs, ClassLabel label) {
    if (label.residue >= cs.modulus) {
        throw InvalidArgument("class residue " + std::to_string(label.residue) +
                              " out of range for modulus " + std::to_string(cs.modulus));
    }
    GapSequence gs;
    gs.modulus = cs.modulus;
    gs.label = label;
    std::optional<std::size_t> previous;
    for (std::size_t i = 0; i < cs.labels.size(); ++i) {
        if (cs.labels[i] != label) continue;
        if (previous) {
            gs.gaps.push_back(i - *previous);
        } else {
            gs.first_position = i;
        }
        previous = i;
    }
    return gs;
}

Rational mean_gap(const GapSequence& gs) {
    if (gs.gaps.empty()) throw InvalidArgument("mean_gap of an empty gap sequence");
    std::int64_t total = 0;
    for (u64 g : gs.gaps) total += static_cast<std::int64_t>(g);
    return Rational(total, static_cast<std::int64_t>(gs.gaps.size()));
}

Rational expected_mean_gap(u64 p, ClassLabel label) {
    require_odd_prime(p);
    if (label.residue >= p) {
        throw InvalidArgument("class residue " + std::to_string(label.residue) +
                              " out of range for modulus " + std::to_string(p));
    }
    const auto q = static_cast<std::int64_t>(p);
    return label.residue == 0 ? Rational(q + 1, 2) : Rational(q + 1);
}

std::map<u64, std::size_t> gap_histogram(const GapSequence& gs) {
    std::map<u64, std::size_t> hist;
    for (u64 g : gs.gaps) ++hist[g];
    return hist;
}

}  // namespace pptseq
