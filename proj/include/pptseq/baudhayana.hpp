#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "pptseq/rational.hpp"
#include "pptseq/residue.hpp"

namespace pptseq {

/// Index distances between successive occurrences of one class label.
/// Adjacent occurrences give a gap of 1.
struct GapSequence {
    u64 modulus = 3;
    ClassLabel label;
    std::vector<u64> gaps;
    std::optional<std::size_t> first_position;  // empty when the label never occurs

    /// Occurrence positions rebuilt from first_position and the gaps.
    std::vector<std::size_t> positions() const;
};

/// Empty gaps when the label occurs at most once.
GapSequence gap_sequence(const ClassSequence& cs, ClassLabel label);

/// Throws InvalidArgument on an empty gap sequence.
Rational mean_gap(const GapSequence& gs);

/// (p+1)/2 for residue 0 and p+1 for every other residue: the reciprocal of
/// the class density.
Rational expected_mean_gap(u64 p, ClassLabel label);

std::map<u64, std::size_t> gap_histogram(const GapSequence& gs);

}  // namespace pptseq
