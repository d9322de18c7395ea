#include "pptseq/residue.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace pptseq {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_odd_prime(u64 p) {
    if (p == 2 || !is_prime(p)) {
        throw InvalidArgument("modulus must be an odd prime, got " + std::to_string(p));
    }
}

std::string ClassLabel::name(u64 modulus) const {
    if (has_letter(modulus)) return std::string(1, letter());
    return std::to_string(residue);
}

ClassLabel ClassLabel::parse(std::string_view text, u64 modulus) {
    if (text.empty()) throw InvalidArgument("empty class label");
    std::uint32_t residue = 0;
    if (text.size() == 1 && std::isalpha(static_cast<unsigned char>(text[0]))) {
        residue = static_cast<std::uint32_t>(std::toupper(static_cast<unsigned char>(text[0])) - 'A');
        if (modulus > 26) {
            throw InvalidArgument("letters are not defined for modulus " + std::to_string(modulus) +
                                  "; give the residue as an integer");
        }
    } else {
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), residue);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw InvalidArgument("bad class label '" + std::string(text) + "'");
        }
    }
    if (residue >= modulus) {
        throw InvalidArgument("class '" + std::string(text) + "' is not a residue mod " +
                              std::to_string(modulus));
    }
    return ClassLabel{residue};
}

ClassLabel classify(u64 a, u64 p) {
    require_odd_prime(p);
    if (a == 0) throw InvalidArgument("classify: a must be positive");
    return ClassLabel{static_cast<std::uint32_t>(a % p)};
}

std::string ClassSequence::letters() const {
    std::string out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
        if (!l.has_letter(modulus)) {
            throw InvalidArgument("no letter form for modulus " + std::to_string(modulus));
        }
        out.push_back(l.letter());
    }
    return out;
}

ClassSequence ClassSequence::from_letters(std::string_view letters, u64 modulus) {
    require_odd_prime(modulus);
    ClassSequence cs;
    cs.modulus = modulus;
    cs.labels.reserve(letters.size());
    for (char ch : letters) cs.labels.push_back(ClassLabel::parse(std::string_view(&ch, 1), modulus));
    return cs;
}

ClassSequence class_sequence(std::span<const Triple> triples, u64 p) {
    require_odd_prime(p);
    ClassSequence cs;
    cs.modulus = p;
    cs.labels.reserve(triples.size());
    for (const auto& tr : triples) cs.labels.push_back(classify(tr.a, p));
    return cs;
}

std::vector<std::size_t> class_frequencies(const ClassSequence& cs) {
    std::vector<std::size_t> counts(cs.modulus, 0);
    for (const auto& l : cs.labels) ++counts[l.residue];
    return counts;
}

std::size_t DivisibilityTable::at(std::size_t length, u64 prime) const {
    auto li = std::find(lengths.begin(), lengths.end(), length);
    auto pi = std::find(primes.begin(), primes.end(), prime);
    if (li == lengths.end() || pi == primes.end()) {
        throw InvalidArgument("no table cell for length " + std::to_string(length) + ", prime " +
                              std::to_string(prime));
    }
    return counts[static_cast<std::size_t>(li - lengths.begin())]
                 [static_cast<std::size_t>(pi - primes.begin())];
}

DivisibilityTable divisibility_table(std::span<const Triple> stream,
                                     std::span<const std::size_t> lengths,
                                     std::span<const u64> primes) {
    for (u64 p : primes) require_odd_prime(p);
    for (std::size_t len : lengths) {
        if (len > stream.size()) {
            throw InvalidArgument("prefix length " + std::to_string(len) +
                                  " exceeds generated stream of " + std::to_string(stream.size()));
        }
    }
    DivisibilityTable table;
    table.primes.assign(primes.begin(), primes.end());
    table.lengths.assign(lengths.begin(), lengths.end());
    table.counts.assign(lengths.size(), std::vector<std::size_t>(primes.size(), 0));

    // Single pass: visit prefix boundaries in ascending order.
    std::vector<std::size_t> order(lengths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return lengths[x] < lengths[y]; });

    std::vector<std::size_t> running(primes.size(), 0);
    std::size_t pos = 0;
    for (std::size_t row : order) {
        for (; pos < lengths[row]; ++pos) {
            for (std::size_t j = 0; j < primes.size(); ++j) {
                if (stream[pos].a % primes[j] == 0) ++running[j];
            }
        }
        table.counts[row] = running;
    }
    return table;
}

DivisibilityTable divisibility_table(std::size_t n_max, std::span<const std::size_t> lengths,
                                     std::span<const u64> primes) {
    for (std::size_t len : lengths) {
        if (len > n_max) {
            throw InvalidArgument("prefix length " + std::to_string(len) + " exceeds n_max " +
                                  std::to_string(n_max));
        }
    }
    if (n_max == 0) return divisibility_table(std::span<const Triple>{}, lengths, primes);
    const auto stream = generate_ordered(n_max);
    return divisibility_table(stream, lengths, primes);
}

Rational theorem_probability(u64 p) {
    require_odd_prime(p);
    return Rational(2, static_cast<std::int64_t>(p) + 1);
}

GridCensus grid_census(u64 p) {
    require_odd_prime(p);
    GridCensus census;
    // t = 1, 3, ..., 2p-1 and s = 2p+1, ..., 4p-1: p consecutive odd values on
    // each axis hit every residue mod p exactly once.
    for (u64 i = 0; i < p; ++i) {
        const u64 t = 2 * i + 1;
        for (u64 j = 0; j < p; ++j) {
            const u64 s = 2 * p + 1 + 2 * j;
            if (s % p == 0 && t % p == 0) continue;
            ++census.qualifying;
            if ((s * t) % p == 0) ++census.divisible;
        }
    }
    return census;
}

}  // namespace pptseq
