#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pptseq/rational.hpp"
#include "pptseq/triple.hpp"

namespace pptseq {

bool is_prime(u64 n);

/// Throws InvalidArgument unless p is an odd prime.
void require_odd_prime(u64 p);

/// Residue class of the odd leg modulo a prime. Residue 0 is class 'A',
/// residue 1 is 'B', and so on; letters exist only for moduli up to 26.
struct ClassLabel {
    std::uint32_t residue = 0;

    bool has_letter(u64 modulus) const { return modulus <= 26; }
    char letter() const { return static_cast<char>('A' + residue); }

    /// Letter when the modulus allows one, decimal residue otherwise.
    std::string name(u64 modulus) const;

    /// Accepts a letter ("A".."Z", case-insensitive) or a decimal residue.
    /// Throws InvalidArgument when the result is not below `modulus`.
    static ClassLabel parse(std::string_view text, u64 modulus);

    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel classify(u64 a, u64 p);

/// Labels index-aligned with the c-ordered triple stream.
struct ClassSequence {
    u64 modulus = 3;
    std::vector<ClassLabel> labels;

    std::size_t size() const { return labels.size(); }
    std::string letters() const;

    /// Parses a letter string such as "ACAACAAB". Every letter must denote a
    /// residue below `modulus`.
    static ClassSequence from_letters(std::string_view letters, u64 modulus);
};

ClassSequence class_sequence(std::span<const Triple> triples, u64 p);

/// counts[r] = number of labels with residue r; size is the modulus.
std::vector<std::size_t> class_frequencies(const ClassSequence& cs);

/// counts[i][j] = #{k < lengths[i] : primes[j] | a(k)} over the c-ordered
/// stream.
struct DivisibilityTable {
    std::vector<u64> primes;
    std::vector<std::size_t> lengths;
    std::vector<std::vector<std::size_t>> counts;

    std::size_t at(std::size_t length, u64 prime) const;
};

DivisibilityTable divisibility_table(std::size_t n_max, std::span<const std::size_t> lengths,
                                     std::span<const u64> primes);

/// Same table from an already generated stream prefix.
DivisibilityTable divisibility_table(std::span<const Triple> stream,
                                     std::span<const std::size_t> lengths,
                                     std::span<const u64> primes);

/// 2 / (p + 1).
Rational theorem_probability(u64 p);

struct GridCensus {
    u64 divisible = 0;
    u64 qualifying = 0;

    Rational ratio() const {
        return Rational(static_cast<std::int64_t>(divisible),
                        static_cast<std::int64_t>(qualifying));
    }
};

/// Walks a concrete p x p window of odd (s, t) values (p consecutive odd t,
/// p consecutive odd s, all s > t), drops the single cell with p | s and
/// p | t, and counts the remaining cells with p | s*t.
GridCensus grid_census(u64 p);

}  // namespace pptseq
